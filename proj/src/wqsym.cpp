#include "sharp/wqsym.hpp"

#include "sharp/enumerate.hpp"
#include "sharp/fqsym.hpp"

#include <algorithm>
#include <stdexcept>

namespace sharp::wqsym {

HalfInversionTable::HalfInversionTable(const std::vector<Letter>& w) : n_(w.size()), cells_(w.size() * w.size(), 0)
{
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            cells_[i * n_ + j] = w[i] > w[j] ? 2 : (w[i] == w[j] ? 1 : 0);
}

int HalfInversionTable::at(std::size_t i, std::size_t j) const
{
    if (i < 1 || j <= i || j > n_)
        throw std::out_of_range("HalfInversionTable::at: need 1 <= i < j <= n");
    return cells_[(i - 1) * n_ + (j - 1)];
}

bool HalfInversionTable::leq(const HalfInversionTable& other) const
{
    if (n_ != other.n_)
        return false;
    for (std::size_t c = 0; c < cells_.size(); ++c)
        if (cells_[c] > other.cells_[c])
            return false;
    return true;
}

bool pp_leq(const PackedWord& u, const PackedWord& v)
{
    return HalfInversionTable(u).leq(HalfInversionTable(v));
}

std::optional<PackedWord> dk_M(const PackedWord& u, std::size_t k)
{
    if (k < 1 || k >= u.size())
        throw std::out_of_range("dk_M: k must satisfy 1 <= k < n");
    if (u.at(k) != u.at(k + 1))
        return std::nullopt;
    std::vector<Letter> rest = u.letters();
    rest.erase(rest.begin() + static_cast<long>(k));
    return PackedWord(std::move(rest));
}

Element product_M(const PackedWord& u, const PackedWord& v)
{
    Element out;
    for (const auto& m : chain_merges(static_cast<std::size_t>(u.max_letter()), static_cast<std::size_t>(v.max_letter()), true)) {
        std::vector<Letter> w;
        w.reserve(u.size() + v.size());
        for (Letter a : u.letters())
            w.push_back(m.left[static_cast<std::size_t>(a - 1)]);
        for (Letter b : v.letters())
            w.push_back(m.right[static_cast<std::size_t>(b - 1)]);
        out.add_term(PackedWord(std::move(w)), 1);
    }
    return out;
}

Element sharp_M(const PackedWord& u, const PackedWord& v)
{
    // Same scheme as for permutations, except that classes below and above
    // the shared letter may now coincide across u and v.
    const Letter pin_u = u.at(u.size());
    const Letter pin_v = v.at(1);
    const auto lows = chain_merges(static_cast<std::size_t>(pin_u - 1), static_cast<std::size_t>(pin_v - 1), true);
    const auto highs = chain_merges(static_cast<std::size_t>(u.max_letter() - pin_u),
                                    static_cast<std::size_t>(v.max_letter() - pin_v), true);
    Element out;
    for (const auto& lo : lows) {
        const Letter pivot = lo.size + 1;
        for (const auto& hi : highs) {
            auto relabel = [&](Letter r, Letter pin, const std::vector<Letter>& below, const std::vector<Letter>& above) {
                if (r < pin)
                    return below[static_cast<std::size_t>(r - 1)];
                if (r == pin)
                    return pivot;
                return pivot + above[static_cast<std::size_t>(r - pin - 1)];
            };
            std::vector<Letter> w;
            w.reserve(u.size() + v.size() - 1);
            for (Letter a : u.letters())
                w.push_back(relabel(a, pin_u, lo.left, hi.left));
            for (std::size_t j = 2; j <= v.size(); ++j)
                w.push_back(relabel(v.at(j), pin_v, lo.right, hi.right));
            out.add_term(PackedWord(std::move(w)), 1);
        }
    }
    return out;
}

PackedWord vee_pw(const PackedWord& u, const PackedWord& v)
{
    return PackedWord(fqsym::vee_scan(u.letters(), v.letters()));
}

PackedWord wedge_pw(const PackedWord& u, const PackedWord& v)
{
    return PackedWord(fqsym::wedge_scan(u.letters(), v.letters()));
}

PackedInterval sharp_interval(const PackedWord& u, const PackedWord& v)
{
    PackedInterval out{wedge_pw(u, v), vee_pw(u, v), {}};
    const HalfInversionTable lo(out.lo);
    const HalfInversionTable hi(out.hi);
    for (const auto& w : all_packed_words(out.lo.size())) {
        const HalfInversionTable t(w);
        if (lo.leq(t) && t.leq(hi))
            out.members.push_back(w);
    }
    return out;
}

Element S_to_M(const PackedWord& u)
{
    Element out;
    const HalfInversionTable top(u);
    for (const auto& w : all_packed_words(u.size()))
        if (HalfInversionTable(w).leq(top))
            out.add_term(w, 1);
    return out;
}

Element E_to_M(const PackedWord& u)
{
    Element out;
    const HalfInversionTable bottom(u);
    for (const auto& w : all_packed_words(u.size()))
        if (bottom.leq(HalfInversionTable(w)))
            out.add_term(w, 1);
    return out;
}

bool is_nonsecable_pw(const PackedWord& u)
{
    if (u.size() < 2)
        throw std::domain_error("is_nonsecable_pw: size must be >= 2");
    const auto& w = u.letters();
    const std::size_t n = w.size();
    const Letter top = u.max_letter();
    for (std::size_t k = 2; k < n; ++k) {
        std::vector<bool> in(static_cast<std::size_t>(top) + 2, false);
        for (std::size_t i = 0; i < k; ++i)
            in[static_cast<std::size_t>(w[i])] = true;
        const Letter m = w[k - 1];

        // Values <= m: an interval ending at m.
        Letter v = m;
        while (v >= 1 && in[static_cast<std::size_t>(v)])
            --v;
        bool ok = true;
        for (Letter x = v; x >= 1 && ok; --x)
            ok = !in[static_cast<std::size_t>(x)];
        // Values > m: empty, or an interval ending at the maximal letter.
        Letter t = top;
        while (t > m && in[static_cast<std::size_t>(t)])
            --t;
        for (Letter x = t; x > m && ok; --x)
            ok = !in[static_cast<std::size_t>(x)];
        if (!ok)
            continue;

        // The prefix and the suffix from position k share only u_k.
        bool shared_only_pivot = true;
        for (std::size_t j = k; j < n && shared_only_pivot; ++j)
            if (w[j] != m && in[static_cast<std::size_t>(w[j])])
                shared_only_pivot = false;
        if (shared_only_pivot)
            return false;
    }
    return true;
}

} // namespace sharp::wqsym
