#include "sharp/fqsym.hpp"

#include "sharp/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

namespace sharp::fqsym {

InversionSet::InversionSet(const std::vector<Letter>& w) : n_(w.size()), bits_(w.size() * w.size(), false)
{
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (w[i] > w[j])
                bits_[i * n_ + j] = true;
}

bool InversionSet::contains(std::size_t i, std::size_t j) const
{
    if (i < 1 || j <= i || j > n_)
        return false;
    return bits_[(i - 1) * n_ + (j - 1)];
}

std::size_t InversionSet::count() const
{
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

bool InversionSet::subset_of(const InversionSet& other) const
{
    if (n_ != other.n_)
        return false;
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] && !other.bits_[i])
            return false;
    return true;
}

bool weak_leq(const Permutation& a, const Permutation& b)
{
    return InversionSet(a).subset_of(InversionSet(b));
}

std::optional<Permutation> dk_G(const Permutation& sigma, std::size_t k)
{
    if (k < 1 || k >= sigma.size())
        throw std::out_of_range("dk_G: k must satisfy 1 <= k < n");
    if (sigma.at(k + 1) != sigma.at(k) + 1)
        return std::nullopt;
    std::vector<Letter> rest = sigma.letters();
    rest.erase(rest.begin() + static_cast<long>(k - 1));
    return std_word(rest);
}

Permutation dk_G_inverse(const Permutation& tau, std::size_t k)
{
    if (k < 1 || k > tau.size())
        throw std::out_of_range("dk_G_inverse: k must satisfy 1 <= k <= |tau|");
    const Letter pivot = tau.at(k);
    std::vector<Letter> out;
    out.reserve(tau.size() + 1);
    for (std::size_t i = 1; i <= tau.size(); ++i) {
        const Letter a = tau.at(i);
        out.push_back(a <= pivot ? a : a + 1);
        if (i == k)
            out.push_back(pivot + 1);
    }
    return Permutation(std::move(out));
}

std::optional<Permutation> dk_F(const Permutation& sigma, std::size_t k)
{
    if (k < 1 || k >= sigma.size())
        throw std::out_of_range("dk_F: k must satisfy 1 <= k < n");
    const auto& s = sigma.letters();
    const auto pos_k = std::find(s.begin(), s.end(), static_cast<Letter>(k));
    if (pos_k + 1 == s.end() || *(pos_k + 1) != static_cast<Letter>(k + 1))
        return std::nullopt;
    std::vector<Letter> out;
    out.reserve(s.size() - 1);
    for (Letter a : s) {
        if (a == static_cast<Letter>(k + 1))
            continue;
        out.push_back(a > static_cast<Letter>(k + 1) ? a - 1 : a);
    }
    return Permutation(std::move(out));
}

Element convolution(const Permutation& alpha, const Permutation& beta)
{
    Element out;
    const std::size_t k = alpha.size();
    for (const auto& m : chain_merges(k, beta.size(), false)) {
        std::vector<Letter> gamma;
        gamma.reserve(k + beta.size());
        for (Letter a : alpha.letters())
            gamma.push_back(m.left[static_cast<std::size_t>(a - 1)]);
        for (Letter b : beta.letters())
            gamma.push_back(m.right[static_cast<std::size_t>(b - 1)]);
        out.add_term(Permutation(std::move(gamma)), 1);
    }
    return out;
}

Element sharp_G(const Permutation& alpha, const Permutation& beta)
{
    // The shared letter nu_k splits both value sets into a part below and a
    // part above it; the two parts are shuffled independently.
    const auto k = alpha.size();
    const auto l = beta.size();
    const Letter pin_a = alpha.at(k);
    const Letter pin_b = beta.at(1);
    const auto low_a = static_cast<std::size_t>(pin_a - 1);
    const auto low_b = static_cast<std::size_t>(pin_b - 1);
    const auto high_a = k - static_cast<std::size_t>(pin_a);
    const auto high_b = l - static_cast<std::size_t>(pin_b);

    const auto lows = chain_merges(low_a, low_b, false);
    const auto highs = chain_merges(high_a, high_b, false);

    Element out;
    for (const auto& lo : lows) {
        const Letter pivot = lo.size + 1;
        for (const auto& hi : highs) {
            auto value_a = [&](Letter r) {
                if (r < pin_a)
                    return lo.left[static_cast<std::size_t>(r - 1)];
                if (r == pin_a)
                    return pivot;
                return pivot + hi.left[static_cast<std::size_t>(r - pin_a - 1)];
            };
            auto value_b = [&](Letter r) {
                if (r < pin_b)
                    return lo.right[static_cast<std::size_t>(r - 1)];
                if (r == pin_b)
                    return pivot;
                return pivot + hi.right[static_cast<std::size_t>(r - pin_b - 1)];
            };
            std::vector<Letter> nu;
            nu.reserve(k + l - 1);
            for (Letter a : alpha.letters())
                nu.push_back(value_a(a));
            for (std::size_t j = 2; j <= l; ++j)
                nu.push_back(value_b(beta.at(j)));
            out.add_term(Permutation(std::move(nu)), 1);
        }
    }
    return out;
}

Element sharp_F(const Permutation& alpha, const Permutation& beta)
{
    return linear_extend(sharp_G(alpha.inverse(), beta.inverse()),
                         [](const Permutation& g) { return g.inverse(); });
}

std::vector<Letter> vee_scan(const std::vector<Letter>& a, const std::vector<Letter>& b)
{
    const Letter a_last = a.back();
    const Letter b_first = b.front();
    const Letter b_max = *std::max_element(b.begin(), b.end());
    std::vector<Letter> out;
    out.reserve(a.size() + b.size() - 1);
    for (Letter x : a)
        out.push_back(x <= a_last ? x + b_first - 1 : x + b_max - 1);
    for (std::size_t i = 1; i < b.size(); ++i)
        out.push_back(b[i] < b_first ? b[i] : b[i] + a_last - 1);
    return out;
}

std::vector<Letter> wedge_scan(const std::vector<Letter>& a, const std::vector<Letter>& b)
{
    const Letter a_last = a.back();
    const Letter a_max = *std::max_element(a.begin(), a.end());
    const Letter b_first = b.front();
    std::vector<Letter> out;
    out.reserve(a.size() + b.size() - 1);
    for (Letter x : a)
        out.push_back(x < a_last ? x : x + b_first - 1);
    for (std::size_t i = 1; i < b.size(); ++i)
        out.push_back(b[i] <= b_first ? b[i] + a_last - 1 : b[i] + a_max - 1);
    return out;
}

Permutation vee(const Permutation& alpha, const Permutation& beta)
{
    return Permutation(vee_scan(alpha.letters(), beta.letters()));
}

Permutation wedge(const Permutation& alpha, const Permutation& beta)
{
    return Permutation(wedge_scan(alpha.letters(), beta.letters()));
}

WeakInterval sharp_interval(const Permutation& alpha, const Permutation& beta)
{
    WeakInterval out{wedge(alpha, beta), vee(alpha, beta), {}};
    const InversionSet lo(out.lo);
    const InversionSet hi(out.hi);
    for (const auto& gamma : all_permutations(out.lo.size())) {
        const InversionSet inv(gamma);
        if (lo.subset_of(inv) && inv.subset_of(hi))
            out.members.push_back(gamma);
    }
    return out;
}

Element S_to_G(const Permutation& sigma)
{
    Element out;
    const InversionSet top(sigma);
    for (const auto& tau : all_permutations(sigma.size()))
        if (InversionSet(tau).subset_of(top))
            out.add_term(tau, 1);
    return out;
}

Element E_to_G(const Permutation& sigma)
{
    Element out;
    const InversionSet bottom(sigma);
    for (const auto& tau : all_permutations(sigma.size()))
        if (bottom.subset_of(InversionSet(tau)))
            out.add_term(tau, 1);
    return out;
}

namespace {

void require_generator_size(const Permutation& alpha)
{
    if (alpha.size() < 2)
        throw std::domain_error("generator predicates need a permutation of size >= 2");
}

/// Value set of the prefix of length k, as a membership mask over 1..n.
std::vector<bool> prefix_values(const std::vector<Letter>& w, std::size_t k, std::size_t n)
{
    std::vector<bool> in(n + 2, false);
    for (std::size_t i = 0; i < k; ++i)
        in[static_cast<std::size_t>(w[i])] = true;
    return in;
}

/// True if {present values <= m} is an interval ending at m and
/// {present values > m} is empty or an interval ending at top.
bool splits_as_two_intervals(const std::vector<bool>& in, Letter m, Letter top)
{
    auto mi = static_cast<std::size_t>(m);
    std::size_t v = mi;
    while (v >= 1 && in[v])
        --v;
    for (std::size_t u = v; u >= 1; --u)
        if (in[u])
            return false;
    std::size_t t = static_cast<std::size_t>(top);
    std::size_t w = t;
    while (w > mi && in[w])
        --w;
    for (std::size_t u = w; u > mi; --u)
        if (in[u])
            return false;
    return true;
}

} // namespace

bool is_nonsecable(const Permutation& alpha)
{
    require_generator_size(alpha);
    const std::size_t n = alpha.size();
    for (std::size_t k = 2; k < n; ++k) {
        const auto in = prefix_values(alpha.letters(), k, n);
        if (splits_as_two_intervals(in, alpha.at(k), static_cast<Letter>(n)))
            return false;
    }
    return true;
}

namespace {

bool prefix_is_interval(const std::vector<Letter>& w, std::size_t p)
{
    const auto [lo, hi] = std::minmax_element(w.begin(), w.begin() + static_cast<long>(p));
    return static_cast<std::size_t>(*hi - *lo) + 1 == p;
}

} // namespace

bool is_noninterval(const Permutation& alpha)
{
    require_generator_size(alpha);
    for (std::size_t i = 2; i < alpha.size(); ++i)
        if (prefix_is_interval(alpha.letters(), i))
            return false;
    return true;
}

bool is_non_internal_interval(const Permutation& alpha)
{
    require_generator_size(alpha);
    const auto& a = alpha.letters();
    const std::size_t n = a.size();
    for (std::size_t r = 2; r < n; ++r)
        for (std::size_t i = 0; i + r <= n; ++i) {
            const Letter m = *std::max_element(a.begin() + static_cast<long>(i), a.begin() + static_cast<long>(i + r));
            if (m == static_cast<Letter>(r))
                return false;
        }
    return true;
}

Permutation bullet(const Permutation& sigma, const Permutation& tau)
{
    const std::size_t k = sigma.size();
    const std::size_t l = tau.size();
    const std::size_t n = k + l - 1;
    const Letter shift = tau.at(1) - 1;

    std::vector<Letter> gamma;
    gamma.reserve(n);
    for (Letter s : sigma.letters())
        gamma.push_back(s + shift);

    std::vector<Letter> unused;
    for (Letter v = 1; v <= static_cast<Letter>(n); ++v)
        if (v <= shift || v > shift + static_cast<Letter>(k))
            unused.push_back(v);
    if (l > 1) {
        std::vector<Letter> tail(tau.letters().begin() + 1, tau.letters().end());
        const auto ranks = std_word(tail);
        for (Letter r : ranks.letters())
            gamma.push_back(unused[static_cast<std::size_t>(r - 1)]);
    }
    return Permutation(std::move(gamma));
}

std::vector<std::size_t> interval_breakpoints(const Permutation& alpha)
{
    std::vector<std::size_t> out;
    for (std::size_t p = 2; p < alpha.size(); ++p)
        if (prefix_is_interval(alpha.letters(), p))
            out.push_back(p);
    return out;
}

std::vector<Permutation> bullet_factorize(const Permutation& alpha)
{
    std::vector<Permutation> factors;
    if (alpha.size() < 2)
        return factors;
    std::vector<std::size_t> cuts{1};
    for (std::size_t p : interval_breakpoints(alpha))
        cuts.push_back(p);
    cuts.push_back(alpha.size());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        std::vector<Letter> piece(alpha.letters().begin() + static_cast<long>(cuts[i] - 1),
                                  alpha.letters().begin() + static_cast<long>(cuts[i + 1]));
        factors.push_back(std_word(piece));
    }
    return factors;
}

std::size_t interval_factor_count(const Permutation& alpha)
{
    return bullet_factorize(alpha).size();
}

} // namespace sharp::fqsym
