#include "sharp/fsym.hpp"

#include "sharp/enumerate.hpp"
#include "sharp/errors.hpp"
#include "sharp/fqsym.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <stdexcept>

namespace sharp::fsym {

namespace {

bool is_standard(const Rows& rows, std::size_t& n)
{
    n = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].empty())
            return false;
        if (r > 0 && rows[r].size() > rows[r - 1].size())
            return false;
        n += rows[r].size();
    }
    std::vector<bool> seen(n + 1, false);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            const int v = rows[r][c];
            if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v)])
                return false;
            seen[static_cast<std::size_t>(v)] = true;
            if (c > 0 && rows[r][c - 1] >= v)
                return false;
            if (r > 0 && rows[r - 1][c] >= v)
                return false;
        }
    return true;
}

/// Row insertion of x; returns the row index where a new cell was created.
std::size_t row_insert(Rows& rows, int x)
{
    for (std::size_t r = 0;; ++r) {
        if (r == rows.size()) {
            rows.push_back({x});
            return r;
        }
        auto& row = rows[r];
        auto it = std::upper_bound(row.begin(), row.end(), x);
        if (it == row.end()) {
            row.push_back(x);
            return r;
        }
        std::swap(*it, x);
    }
}

std::vector<int> standardize_values(const std::vector<int>& w)
{
    return std_word(w).letters();
}

} // namespace

Tableau::Tableau(Rows rows) : rows_(std::move(rows))
{
    if (!is_standard(rows_, size_))
        throw std::invalid_argument("not a standard Young tableau: " + to_string(SkewTableau{rows_}));
}

std::vector<std::size_t> Tableau::shape() const
{
    std::vector<std::size_t> out;
    for (const auto& row : rows_)
        out.push_back(row.size());
    return out;
}

Rows insertion_rows(const std::vector<Letter>& w)
{
    Rows rows;
    for (Letter x : w)
        row_insert(rows, x);
    return rows;
}

Tableau recording_tableau(const std::vector<Letter>& w)
{
    Rows p;
    Rows q;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const std::size_t r = row_insert(p, w[i]);
        if (r == q.size())
            q.emplace_back();
        q[r].push_back(static_cast<int>(i + 1));
    }
    return Tableau(std::move(q));
}

RSKPair rsk(const Permutation& sigma)
{
    Rows p;
    Rows q;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        const std::size_t r = row_insert(p, sigma[i]);
        if (r == q.size())
            q.emplace_back();
        q[r].push_back(static_cast<int>(i + 1));
    }
    return {Tableau(std::move(p)), Tableau(std::move(q))};
}

Permutation inverse_rsk(const Tableau& P, const Tableau& Q)
{
    if (P.shape() != Q.shape())
        throw std::invalid_argument("inverse_rsk: P and Q must have the same shape");
    Rows p = P.rows();
    Rows q = Q.rows();
    const std::size_t n = P.size();
    std::vector<Letter> sigma(n);
    for (std::size_t i = n; i >= 1; --i) {
        std::size_t r = 0;
        while (q[r].back() != static_cast<int>(i))
            ++r;
        q[r].pop_back();
        int x = p[r].back();
        p[r].pop_back();
        if (p[r].empty()) {
            p.pop_back();
            q.pop_back();
        }
        while (r-- > 0) {
            auto& row = p[r];
            auto it = std::lower_bound(row.begin(), row.end(), x);
            --it;
            std::swap(*it, x);
        }
        sigma[i - 1] = x;
    }
    return Permutation(std::move(sigma));
}

namespace {

void grow(Rows& rows, int next, int last, const std::function<void(const Rows&)>& visit,
          const std::vector<std::size_t>* target)
{
    if (next > last) {
        visit(rows);
        return;
    }
    for (std::size_t r = 0; r <= rows.size(); ++r) {
        const std::size_t len = r < rows.size() ? rows[r].size() : 0;
        if (r > 0 && len >= rows[r - 1].size())
            continue;
        if (target && (r >= target->size() || len >= (*target)[r]))
            continue;
        if (r == rows.size())
            rows.emplace_back();
        rows[r].push_back(next);
        grow(rows, next + 1, last, visit, target);
        rows[r].pop_back();
        if (rows[r].empty())
            rows.pop_back();
    }
}

} // namespace

std::vector<Tableau> tableaux_of_shape(const std::vector<std::size_t>& shape)
{
    std::size_t n = 0;
    for (std::size_t r = 0; r < shape.size(); ++r) {
        if (shape[r] == 0 || (r > 0 && shape[r] > shape[r - 1]))
            throw std::invalid_argument("tableaux_of_shape: not a partition");
        n += shape[r];
    }
    std::vector<Tableau> out;
    Rows rows;
    grow(rows, 1, static_cast<int>(n), [&](const Rows& r) { out.emplace_back(r); }, &shape);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Tableau> all_tableaux(std::size_t n)
{
    std::vector<Tableau> out;
    Rows rows;
    grow(rows, 1, static_cast<int>(n), [&](const Rows& r) { out.emplace_back(r); }, nullptr);
    std::sort(out.begin(), out.end());
    return out;
}

Integer count_of_shape(const std::vector<std::size_t>& shape)
{
    std::size_t n = 0;
    for (auto len : shape)
        n += len;
    Integer hooks = 1;
    for (std::size_t r = 0; r < shape.size(); ++r)
        for (std::size_t c = 0; c < shape[r]; ++c) {
            std::size_t above = 0;
            for (std::size_t r2 = r + 1; r2 < shape.size() && shape[r2] > c; ++r2)
                ++above;
            hooks *= static_cast<unsigned>(shape[r] - c + above);
        }
    return factorial(static_cast<unsigned>(n)) / hooks;
}

std::optional<Permutation> dbar_k(const Permutation& sigma, std::size_t k)
{
    if (k < 1 || k >= sigma.size())
        throw std::out_of_range("dbar_k: k must satisfy 1 <= k < n");
    return fqsym::dk_F(sigma, k);
}

Permutation dbar_k_inverse(const Permutation& tau, std::size_t k)
{
    if (k < 1 || k > tau.size())
        throw std::out_of_range("dbar_k_inverse: k must satisfy 1 <= k <= |tau|");
    const auto key = static_cast<Letter>(k);
    std::vector<Letter> out;
    out.reserve(tau.size() + 1);
    for (Letter a : tau.letters()) {
        out.push_back(a > key ? a + 1 : a);
        if (a == key)
            out.push_back(key + 1);
    }
    return Permutation(std::move(out));
}

SkewTableau restrict(const Tableau& T, const std::vector<int>& values)
{
    if (values.empty())
        throw std::domain_error("restrict: empty value set");
    std::vector<int> s = values;
    std::sort(s.begin(), s.end());
    const int lo = s.front();
    const int hi = s.back();
    if (lo < 1 || static_cast<std::size_t>(hi) > T.size() || static_cast<std::size_t>(hi - lo + 1) != s.size()
        || std::adjacent_find(s.begin(), s.end()) != s.end())
        throw std::domain_error("restrict: the value set must be an interval of entries");

    SkewTableau out;
    for (const auto& row : T.rows()) {
        std::vector<int> kept;
        for (int v : row) {
            if (v < lo)
                kept.push_back(0);
            else if (v <= hi)
                kept.push_back(v - lo + 1);
        }
        out.rows.push_back(std::move(kept));
    }
    // Rows holding only inner cells above the last kept cell carry no information.
    while (!out.rows.empty() && std::none_of(out.rows.back().begin(), out.rows.back().end(), [](int v) { return v != 0; }))
        out.rows.pop_back();
    return out;
}

std::vector<Letter> reading_word(const SkewTableau& sk)
{
    std::vector<Letter> out;
    for (auto r = sk.rows.rbegin(); r != sk.rows.rend(); ++r)
        for (int v : *r)
            if (v != 0)
                out.push_back(v);
    return out;
}

Tableau rectify(const SkewTableau& sk)
{
    const auto word = reading_word(sk);
    if (word.empty())
        throw std::domain_error("rectify: empty skew tableau");
    return Tableau(insertion_rows(standardize_values(word)));
}

Element sharp_S_t(const Tableau& t1, const Tableau& t2)
{
    const int k = static_cast<int>(t1.size());
    const int n = k + static_cast<int>(t2.size()) - 1;
    std::vector<int> window;
    for (int v = k; v <= n; ++v)
        window.push_back(v);

    Element out;
    Rows rows = t1.rows();
    grow(rows, k + 1, n, [&](const Rows& r) {
        Tableau T(r);
        if (rectify(restrict(T, window)) == t2)
            out.add_term(T, 1);
    }, nullptr);
    return out;
}

LinComb<Permutation> to_F(const Tableau& t)
{
    LinComb<Permutation> out;
    for (const auto& q : tableaux_of_shape(t.shape()))
        out.add_term(inverse_rsk(t, q), 1);
    return out;
}

Element from_F(const LinComb<Permutation>& x)
{
    std::map<Tableau, std::pair<Integer, std::size_t>> classes;
    for (const auto& [sigma, c] : x) {
        Tableau p = rsk(sigma).P;
        auto [it, fresh] = classes.try_emplace(p, c, 0);
        if (!fresh && it->second.first != c)
            throw NotInAlgebra("unequal coefficients inside the class of " + to_string(p));
        ++it->second.second;
    }
    Element out;
    for (const auto& [p, info] : classes) {
        if (Integer(info.second) != count_of_shape(p.shape()))
            throw NotInAlgebra("incomplete plactic class of " + to_string(p));
        out.add_term(p, info.first);
    }
    return out;
}

Element sharp_via_F(const Tableau& t1, const Tableau& t2)
{
    return from_F(bilinear_extend(to_F(t1), to_F(t2), fqsym::sharp_F));
}

namespace {

std::string rows_text(const Rows& rows)
{
    std::string out = "[";
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r)
            out += ",";
        out += "[";
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (c)
                out += ",";
            out += std::to_string(rows[r][c]);
        }
        out += "]";
    }
    return out + "]";
}

} // namespace

std::string to_string(const Tableau& t)
{
    return rows_text(t.rows());
}

std::string to_string(const SkewTableau& sk)
{
    return rows_text(sk.rows);
}

Tableau parse_tableau(std::string_view text)
{
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            s += ch;
    std::size_t i = 0;
    auto fail = [&](const char* what) {
        throw std::invalid_argument(std::string("tableau text: ") + what + " at offset " + std::to_string(i));
    };
    auto expect = [&](char ch) {
        if (i >= s.size() || s[i] != ch)
            fail("unexpected character");
        ++i;
    };
    Rows rows;
    expect('[');
    while (true) {
        expect('[');
        std::vector<int> row;
        while (true) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
                ++j;
            if (j == i)
                fail("expected an entry");
            row.push_back(std::stoi(s.substr(i, j - i)));
            i = j;
            if (i < s.size() && s[i] == ',') {
                ++i;
                continue;
            }
            break;
        }
        expect(']');
        rows.push_back(std::move(row));
        if (i < s.size() && s[i] == ',') {
            ++i;
            continue;
        }
        break;
    }
    expect(']');
    if (i != s.size())
        fail("trailing characters");
    return Tableau(std::move(rows));
}

} // namespace sharp::fsym
