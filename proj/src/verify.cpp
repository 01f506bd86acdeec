#include "sharp/verify.hpp"

#include <algorithm>
#include <cctype>

namespace sharp::verify {

Report interval_fqsym(std::size_t max_total_degree)
{
    Report r;
    for (std::size_t da = 1; da < max_total_degree; ++da)
        for (std::size_t db = 1; da + db <= max_total_degree; ++db) {
            const std::size_t n = da + db - 1;
            const auto everything = all_permutations(n);
            std::vector<fqsym::InversionSet> tables;
            tables.reserve(everything.size());
            for (const auto& g : everything)
                tables.emplace_back(g);
            const auto right = all_permutations(db);
            for (const auto& a : all_permutations(da))
                for (const auto& b : right) {
                    ++r.checked;
                    const fqsym::InversionSet lo(fqsym::wedge(a, b));
                    const fqsym::InversionSet hi(fqsym::vee(a, b));
                    std::vector<Permutation> members;
                    for (std::size_t i = 0; i < everything.size(); ++i)
                        if (lo.subset_of(tables[i]) && tables[i].subset_of(hi))
                            members.push_back(everything[i]);
                    if (fqsym::sharp_G(a, b).support() != members) {
                        r.fail("G" + to_string(a) + " # G" + to_string(b) + " is not the weak order interval");
                        return r;
                    }
                }
        }
    return r;
}

Report interval_wqsym(std::size_t max_total_degree)
{
    Report r;
    for (std::size_t da = 1; da < max_total_degree; ++da)
        for (std::size_t db = 1; da + db <= max_total_degree; ++db) {
            const std::size_t n = da + db - 1;
            const auto everything = all_packed_words(n);
            std::vector<wqsym::HalfInversionTable> tables;
            tables.reserve(everything.size());
            for (const auto& w : everything)
                tables.emplace_back(w);
            const auto right = all_packed_words(db);
            for (const auto& u : all_packed_words(da))
                for (const auto& v : right) {
                    ++r.checked;
                    const wqsym::HalfInversionTable lo(wqsym::wedge_pw(u, v));
                    const wqsym::HalfInversionTable hi(wqsym::vee_pw(u, v));
                    std::vector<PackedWord> members;
                    for (std::size_t i = 0; i < everything.size(); ++i)
                        if (lo.leq(tables[i]) && tables[i].leq(hi))
                            members.push_back(everything[i]);
                    if (wqsym::sharp_M(u, v).support() != members) {
                        r.fail("M" + to_string(u) + " # M" + to_string(v) + " is not the pseudo-permutohedron interval");
                        return r;
                    }
                }
        }
    return r;
}

std::optional<Algebra> parse_algebra(std::string_view name)
{
    std::string lower;
    for (char c : name)
        lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    for (Algebra a : all_algebras()) {
        std::string candidate;
        for (char c : algebra_name(a))
            candidate += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (candidate == lower)
            return a;
    }
    return std::nullopt;
}

std::string algebra_name(Algebra a)
{
    switch (a) {
    case Algebra::FQSym: return "FQSym";
    case Algebra::FSym: return "FSym";
    case Algebra::PBT: return "PBT";
    case Algebra::Sym: return "Sym";
    case Algebra::QSym: return "QSym";
    case Algebra::WQSym: return "WQSym";
    case Algebra::TD: return "TD";
    case Algebra::TC: return "TC";
    case Algebra::PQSym: return "PQSym";
    }
    return "?";
}

std::vector<Algebra> all_algebras()
{
    return {Algebra::FQSym, Algebra::FSym, Algebra::PBT, Algebra::Sym, Algebra::QSym,
            Algebra::WQSym, Algebra::TD, Algebra::TC, Algebra::PQSym};
}

Report oracle_qsym(std::size_t max_total_degree)
{
    Report r;
    for (int da = 1; static_cast<std::size_t>(da) < max_total_degree; ++da)
        for (int db = 1; static_cast<std::size_t>(da + db) <= max_total_degree; ++db)
            for (const auto& I : all_compositions(da))
                for (const auto& J : all_compositions(db)) {
                    ++r.checked;
                    if (sym::qsym_sharp_F(I, J) != realization::qsym_duality_sharp(I, J)) {
                        r.fail("QSym F" + sym::to_string(I) + " # F" + sym::to_string(J) + " disagrees with the dual coproduct");
                        return r;
                    }
                }
    return r;
}

Report oracle(Algebra algebra, std::size_t max_total_degree)
{
    using namespace realization;
    switch (algebra) {
    case Algebra::FQSym: return oracle<FQSymWords>(max_total_degree);
    case Algebra::FSym: return oracle<FSymWords>(max_total_degree);
    case Algebra::PBT: return oracle<PBTWords>(max_total_degree);
    case Algebra::Sym: return oracle<SymWords>(max_total_degree);
    case Algebra::QSym: return oracle_qsym(max_total_degree);
    case Algebra::WQSym: return oracle<WQSymWords>(max_total_degree);
    case Algebra::TD: return oracle<TDWords>(max_total_degree);
    case Algebra::TC: return oracle<TCWords>(max_total_degree);
    case Algebra::PQSym: return oracle<PQSymWords>(max_total_degree);
    }
    return {};
}

std::vector<PermutationCounts> permutation_generator_counts(std::size_t max_n)
{
    std::vector<PermutationCounts> out;
    for (std::size_t n = 2; n <= max_n; ++n) {
        PermutationCounts c{n, 0, 0, 0};
        for (const auto& p : all_permutations(n)) {
            c.nonsecable += fqsym::is_nonsecable(p);
            c.noninterval += fqsym::is_noninterval(p);
            c.non_internal_interval += fqsym::is_non_internal_interval(p);
        }
        out.push_back(c);
    }
    return out;
}

std::vector<PackedCounts> packed_word_counts(std::size_t max_n)
{
    std::vector<PackedCounts> out;
    for (std::size_t n = 1; n <= max_n; ++n) {
        PackedCounts c{n, 0, 0};
        for (const auto& u : all_packed_words(n)) {
            ++c.packed;
            if (n >= 2)
                c.nonsecable += wqsym::is_nonsecable_pw(u);
        }
        out.push_back(c);
    }
    return out;
}

const std::vector<std::size_t>& reference_nonsecable_permutations()
{
    static const std::vector<std::size_t> v{2, 2, 8, 44, 296, 2312};
    return v;
}

const std::vector<std::size_t>& reference_packed_words()
{
    static const std::vector<std::size_t> v{1, 3, 13, 75, 541, 4683, 47293};
    return v;
}

const std::vector<std::size_t>& reference_nonsecable_packed()
{
    static const std::vector<std::size_t> v{3, 4, 24, 192, 1872, 21168};
    return v;
}

bool series_identity(const std::vector<std::size_t>& generators_from_2, const std::vector<Integer>& totals_from_1,
                     std::size_t order)
{
    if (generators_from_2.size() < order || totals_from_1.size() < order + 1)
        return false;
    Series g(order);
    for (std::size_t i = 1; i <= order; ++i)
        g[i] = generators_from_2[i - 1];
    Series total(order);
    for (std::size_t i = 0; i <= order; ++i)
        total[i] = totals_from_1[i];
    return series_geom_inverse(g) == total;
}

} // namespace sharp::verify
