#include "sharp/realization.hpp"

namespace sharp::realization {

Expansion word_sharp(const Expansion& x, const Expansion& y)
{
    std::map<Letter, std::vector<std::pair<const Word*, Integer>>> by_first;
    for (const auto& [v, c] : y)
        by_first[v.front()].emplace_back(&v, c);
    Expansion out;
    for (const auto& [u, cu] : x) {
        auto it = by_first.find(u.back());
        if (it == by_first.end())
            continue;
        for (const auto& [v, cv] : it->second)
            out.add_term(*sharp_product(u, *v), cu * cv);
    }
    return out;
}

Expansion word_concat(const Expansion& x, const Expansion& y)
{
    return bilinear_extend(x, y, [](const Word& u, const Word& v) { return concat(u, v); });
}

Expansion word_dk(const Expansion& x, std::size_t k)
{
    return linear_extend(x, [k](const Word& w) { return d_k(w, k); });
}

sym::Element qsym_duality_sharp(const sym::Composition& I, const sym::Composition& J)
{
    const int n = sym::degree(I) + sym::degree(J) - 1;
    const std::pair<sym::Composition, sym::Composition> key{I, J};
    sym::Element out;
    for (const auto& K : all_compositions(n))
        out.add_term(K, sym::coproduct_R(K).coefficient(key));
    return out;
}

} // namespace sharp::realization
