#pragma once

#include "sharp/realization.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

/// Exhaustive checks shared by the command line and the test suites.
namespace sharp::verify {

struct Report {
    bool ok = true;
    std::size_t checked = 0;
    std::string counterexample;

    void fail(std::string what)
    {
        if (ok)
            counterexample = std::move(what);
        ok = false;
    }
};

/// Supports of G_a # G_b (resp. M_u # M_v) against the weak order
/// (resp. pseudo-permutohedron) interval, for |a| + |b| <= max_total_degree.
Report interval_fqsym(std::size_t max_total_degree);
Report interval_wqsym(std::size_t max_total_degree);

enum class Algebra { FQSym, FSym, PBT, Sym, QSym, WQSym, TD, TC, PQSym };

/// Case-insensitive names as printed by algebra_name.
std::optional<Algebra> parse_algebra(std::string_view name);
std::string algebra_name(Algebra a);
std::vector<Algebra> all_algebras();

/// Combinatorial # rule (and ordinary product where one is implemented)
/// against the realization oracle, for |a| + |b| <= max_total_degree.
template <class Tr>
Report oracle(std::size_t max_total_degree)
{
    Report r;
    for (std::size_t da = 1; da < max_total_degree; ++da) {
        const auto left = Tr::labels(da);
        for (std::size_t db = 1; da + db <= max_total_degree; ++db) {
            const auto right = Tr::labels(db);
            for (const auto& a : left)
                for (const auto& b : right) {
                    ++r.checked;
                    try {
                        if (Tr::sharp(a, b) != realization::oracle_sharp<Tr>(a, b)) {
                            r.fail(std::string(Tr::name) + " # differs at " + Tr::text(a) + ", " + Tr::text(b));
                            return r;
                        }
                        if constexpr (Tr::has_product) {
                            if (Tr::product(a, b) != realization::oracle_product<Tr>(a, b)) {
                                r.fail(std::string(Tr::name) + " product differs at " + Tr::text(a) + ", " + Tr::text(b));
                                return r;
                            }
                        }
                    } catch (const NotInAlgebra& e) {
                        r.fail(std::string(Tr::name) + " oracle left the algebra at " + Tr::text(a) + ", " + Tr::text(b)
                               + ": " + e.what());
                        return r;
                    }
                }
        }
    }
    return r;
}

Report oracle_qsym(std::size_t max_total_degree);
Report oracle(Algebra algebra, std::size_t max_total_degree);

struct PermutationCounts {
    std::size_t n;
    std::size_t nonsecable;
    std::size_t noninterval;
    std::size_t non_internal_interval;
};

/// Generator counts for n = 2..max_n.
std::vector<PermutationCounts> permutation_generator_counts(std::size_t max_n);

struct PackedCounts {
    std::size_t n;
    std::size_t packed;
    std::size_t nonsecable;
};

/// Packed words and non-secable packed words for n = 1..max_n (the
/// non-secable count is 0 at n = 1).
std::vector<PackedCounts> packed_word_counts(std::size_t max_n);

/// Reference prefixes: non-secable permutations for n = 2..7, packed words
/// for n = 1..7 and non-secable packed words for n = 2..7.
const std::vector<std::size_t>& reference_nonsecable_permutations();
const std::vector<std::size_t>& reference_packed_words();
const std::vector<std::size_t>& reference_nonsecable_packed();

/// 1/(1 - sum g_n t^(n-1)) == sum a_n t^(n-1) modulo t^(order+1), with
/// g the generator counts (from n = 2) and a the totals (from n = 1).
bool series_identity(const std::vector<std::size_t>& generators_from_2, const std::vector<Integer>& totals_from_1,
                     std::size_t order);

} // namespace sharp::verify
