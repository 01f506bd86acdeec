#include "sharp/patterns.hpp"
#include "sharp/realization.hpp"
#include "sharp/verify.hpp"
#include "sharp/wqsym.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <set>

using namespace sharp;
using namespace sharp::wqsym;
using testing::pw;

namespace {

Element sharp_oracle(const PackedWord& u, const PackedWord& v)
{
    const std::size_t k = u.size(), l = v.size();
    Element out;
    for (const auto& w : all_packed_words(k + l - 1))
        if (pack(testing::slice(w.letters(), 0, k)) == u && pack(testing::slice(w.letters(), k - 1, l)) == v)
            out.add_term(w, 1);
    return out;
}

Element product_oracle(const PackedWord& u, const PackedWord& v)
{
    const std::size_t k = u.size(), l = v.size();
    Element out;
    for (const auto& w : all_packed_words(k + l))
        if (pack(testing::slice(w.letters(), 0, k)) == u && pack(testing::slice(w.letters(), k, l)) == v)
            out.add_term(w, 1);
    return out;
}

// Generalized inversions with weight 1 for a descent pair and 1/2 for a tie,
// compared pair by pair (doubled to stay in integers).
bool pp_oracle(const PackedWord& a, const PackedWord& b)
{
    if (a.size() != b.size())
        return false;
    auto weight = [](Letter x, Letter y) { return x > y ? 2 : x == y ? 1 : 0; };
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (weight(a[i], a[j]) > weight(b[i], b[j]))
                return false;
    return true;
}

PackedWord extreme(const Element& x, bool maximum)
{
    const auto support = x.support();
    for (const auto& w : support) {
        bool ok = true;
        for (const auto& y : support)
            ok = ok && (maximum ? pp_oracle(y, w) : pp_oracle(w, y));
        if (ok)
            return w;
    }
    throw std::logic_error("no extreme element");
}

} // namespace

TEST_CASE("d_k on M")
{
    CHECK(dk_M(pw("11"), 1) == pw("1"));
    CHECK_FALSE(dk_M(pw("121"), 1));
    CHECK(dk_M(pw("1221"), 2) == pw("121"));

    using namespace sharp::realization;
    for (std::size_t n = 2; n <= 4; ++n)
        for (const auto& u : all_packed_words(n))
            for (std::size_t k = 1; k < n; ++k) {
                const auto N = static_cast<Letter>(n);
                const auto d = dk_M(u, k);
                REQUIRE(regroup<WQSymWords>(word_dk(expand<WQSymWords>(u, N), k), N) == (d ? Element::term(*d) : Element{}));
            }
}

TEST_CASE("M # M and M M")
{
    CHECK(sharp_M(pw("121"), pw("12")) == Element::term(pw("1212")) + Element::term(pw("1213")) + Element::term(pw("1312")));
    CHECK(sharp_M(pw("1"), pw("2131")) == Element::term(pw("2131")));
    CHECK(sharp_M(pw("11"), pw("11")) == Element::term(pw("111")));
    for (std::size_t k = 1; k <= 4; ++k)
        for (std::size_t l = 1; k + l <= 5; ++l)
            for (const auto& u : all_packed_words(k))
                for (const auto& v : all_packed_words(l)) {
                    REQUIRE(sharp_M(u, v) == sharp_oracle(u, v));
                    if (k + l <= 4)
                        REQUIRE(product_M(u, v) == product_oracle(u, v));
                }
}

TEST_CASE("pseudo-permutohedron order")
{
    for (std::size_t n = 1; n <= 4; ++n)
        for (const auto& a : all_packed_words(n))
            for (const auto& b : all_packed_words(n))
                REQUIRE(pp_leq(a, b) == pp_oracle(a, b));
    CHECK(HalfInversionTable(pw("1212")).at(2, 3) == 2);
    CHECK(HalfInversionTable(pw("1212")).at(1, 3) == 1);
    CHECK(HalfInversionTable(pw("1212")).at(1, 2) == 0);
}

TEST_CASE("join and meet")
{
    CHECK(vee_pw(pw("121"), pw("12")) == pw("1312"));
    // 1213 lies below 1212 (it lacks the tie at positions 2, 4)
    CHECK(wedge_pw(pw("121"), pw("12")) == pw("1213"));
    CHECK(vee_pw(pw("1"), pw("212")) == pw("212"));
    CHECK(sharp_S_pw(pw("121"), pw("12")) == pw("1312"));
    CHECK(sharp_E_pw(pw("121"), pw("12")) == pw("1213"));
    CHECK(sharp_S_pw(pw("1"), pw("2311")) == pw("2311"));
    for (std::size_t k = 1; k <= 4; ++k)
        for (std::size_t l = 1; k + l <= 5; ++l)
            for (const auto& u : all_packed_words(k))
                for (const auto& v : all_packed_words(l)) {
                    const auto x = sharp_oracle(u, v);
                    REQUIRE(vee_pw(u, v) == extreme(x, true));
                    REQUIRE(wedge_pw(u, v) == extreme(x, false));
                }
    const auto iv = sharp_interval(pw("121"), pw("12"));
    CHECK(iv.lo == pw("1213"));
    CHECK(iv.hi == pw("1312"));
    CHECK(testing::sum(iv.members) == sharp_M(pw("121"), pw("12")));
}

TEST_CASE("multiplicative bases")
{
    for (const auto& u : all_packed_words(3)) {
        Element below, above;
        for (const auto& v : all_packed_words(3)) {
            if (pp_oracle(v, u))
                below.add_term(v, 1);
            if (pp_oracle(u, v))
                above.add_term(v, 1);
        }
        CHECK(S_to_M(u) == below);
        CHECK(E_to_M(u) == above);
    }
    for (std::size_t k = 1; k <= 3; ++k)
        for (std::size_t l = 1; k + l <= 5; ++l)
            for (const auto& u : all_packed_words(k))
                for (const auto& v : all_packed_words(l)) {
                    REQUIRE(bilinear_extend(S_to_M(u), S_to_M(v), sharp_M) == S_to_M(vee_pw(u, v)));
                    REQUIRE(bilinear_extend(E_to_M(u), E_to_M(v), sharp_M) == E_to_M(wedge_pw(u, v)));
                }
}

TEST_CASE("non-secable packed words")
{
    CHECK_THROWS_AS(is_nonsecable_pw(pw("1")), std::domain_error);
    for (std::size_t n = 2; n <= 5; ++n) {
        std::set<PackedWord> joins;
        for (std::size_t k = 2; k < n; ++k)
            for (const auto& u : all_packed_words(k))
                for (const auto& v : all_packed_words(n + 1 - k))
                    joins.insert(extreme(sharp_oracle(u, v), true));
        for (const auto& u : all_packed_words(n))
            REQUIRE(is_nonsecable_pw(u) == (joins.count(u) == 0));
    }
    const auto counts = verify::packed_word_counts(6);
    std::vector<std::size_t> packed, nonsecable;
    for (const auto& c : counts) {
        packed.push_back(c.packed);
        nonsecable.push_back(c.nonsecable);
    }
    CHECK(packed == std::vector<std::size_t>{1, 3, 13, 75, 541, 4683});
    CHECK(nonsecable == std::vector<std::size_t>{0, 3, 4, 24, 192, 1872});
}

TEST_CASE("pattern classes closed under join and meet")
{
    const std::vector<std::vector<Letter>> td_s{{1, 3, 2}, {1, 2, 1}};
    // mirror image of the S-side set; TD is stable under reversal
    const std::vector<std::vector<Letter>> td_e{{2, 3, 1}, {1, 2, 1}};
    const std::vector<std::vector<Letter>> tc_s{{1, 3, 2}, {2, 1, 3}, {1, 2, 1}, {2, 1, 2}};
    // complement of the S-side set; TC is stable under w -> max + 1 - w
    const std::vector<std::vector<Letter>> tc_e{{3, 1, 2}, {2, 3, 1}, {2, 1, 2}, {1, 2, 1}};
    for (std::size_t k = 1; k <= 4; ++k)
        for (std::size_t l = 1; k + l <= 6; ++l)
            for (const auto& u : all_packed_words(k))
                for (const auto& v : all_packed_words(l)) {
                    const auto j = vee_pw(u, v).letters();
                    const auto m = wedge_pw(u, v).letters();
                    if (avoids_all(u.letters(), td_s) && avoids_all(v.letters(), td_s))
                        REQUIRE(avoids_all(j, td_s));
                    if (avoids_all(u.letters(), td_e) && avoids_all(v.letters(), td_e))
                        REQUIRE(avoids_all(m, td_e));
                    if (avoids_all(u.letters(), tc_s) && avoids_all(v.letters(), tc_s))
                        REQUIRE(avoids_all(j, tc_s));
                    if (avoids_all(u.letters(), tc_e) && avoids_all(v.letters(), tc_e))
                        REQUIRE(avoids_all(m, tc_e));
                }
}

TEST_CASE("TC pattern classes have 3^(n-1) members")
{
    const std::vector<std::vector<Letter>> tc_s{{1, 3, 2}, {2, 1, 3}, {1, 2, 1}, {2, 1, 2}};
    const std::vector<std::vector<Letter>> tc_e{{3, 1, 2}, {2, 3, 1}, {2, 1, 2}, {1, 2, 1}};
    std::size_t expected = 1;
    for (std::size_t n = 1; n <= 6; ++n, expected *= 3) {
        std::size_t s = 0, e = 0;
        for (const auto& u : all_packed_words(n)) {
            s += avoids_all(u.letters(), tc_s);
            e += avoids_all(u.letters(), tc_e);
        }
        CHECK(s == expected);
        CHECK(e == expected);
    }
}

TEST_CASE("TD pattern classes are counted by plane trees")
{
    const std::vector<std::vector<Letter>> td_s{{1, 3, 2}, {1, 2, 1}};
    const std::vector<std::vector<Letter>> td_e{{2, 3, 1}, {1, 2, 1}};
    const std::vector<std::size_t> schroeder{1, 3, 11, 45, 197, 903};
    for (std::size_t n = 1; n <= 6; ++n) {
        std::size_t s = 0, e = 0;
        for (const auto& u : all_packed_words(n)) {
            s += avoids_all(u.letters(), td_s);
            e += avoids_all(u.letters(), td_e);
        }
        CHECK(s == schroeder[n - 1]);
        CHECK(e == schroeder[n - 1]);
    }
}
