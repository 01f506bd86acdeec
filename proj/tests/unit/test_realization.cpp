#include "sharp/realization.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace sharp;
using namespace sharp::realization;
using testing::perm;

TEST_CASE("expand")
{
    // std(11) = std(22) = 12
    CHECK(expand<FQSymWords>(perm("12"), 2)
          == Expansion::term(Word{1, 1}) + Expansion::term(Word{1, 2}) + Expansion::term(Word{2, 2}));
    CHECK(expand<FQSymWords>(perm("21"), 2) == Expansion::term(Word{2, 1}));
    CHECK(expand<WQSymWords>(testing::pw("11"), 3)
          == Expansion::term(Word{1, 1}) + Expansion::term(Word{2, 2}) + Expansion::term(Word{3, 3}));
    CHECK(expand<SymWords>(sym::Composition{2}, 2)
          == Expansion::term(Word{1, 1}) + Expansion::term(Word{1, 2}) + Expansion::term(Word{2, 2}));
    CHECK_THROWS_AS(expand<FQSymWords>(perm("12"), 0), std::out_of_range);
}

TEST_CASE("expand counts fibers")
{
    // |{w in {1..N}^n : std(w) = sigma}| = binom(N + n - 1 - des(sigma^-1), n)
    for (const auto& s : all_permutations(4)) {
        const auto inv = s.inverse();
        unsigned des = 0;
        for (std::size_t i = 1; i < 4; ++i)
            des += inv.at(i) > inv.at(i + 1);
        CHECK(Integer(expand<FQSymWords>(s, 5).size()) == binomial(5 + 4 - 1 - des, 4));
    }
}

TEST_CASE("regroup")
{
    CHECK(regroup<FQSymWords>(expand<FQSymWords>(perm("132"), 4), 4) == fqsym::Element::term(perm("132")));
    CHECK(regroup<FQSymWords>(Expansion{}, 3).empty());
    const auto partial = Expansion::term(Word{1, 2});
    CHECK_THROWS_AS(regroup<FQSymWords>(partial, 3), NotInAlgebra);
}

TEST_CASE("d_1 of G_112 leaves PQSym")
{
    const auto x = expand<PQSymWords>(testing::pf("112"), 4);
    CHECK_THROWS_AS(regroup<PQSymWords>(word_dk(x, 1), 4), NotInAlgebra);
}

TEST_CASE("d_1 of S_t, t = [[1,2],[3,4]], leaves FSym")
{
    const fsym::Tableau t({{1, 2}, {3, 4}});
    const auto x = expand<FSymWords>(t, 4);
    CHECK_THROWS_AS(regroup<FSymWords>(word_dk(x, 1), 4), NotInAlgebra);
    // in FQSym it is G_2413 + G_3412 and d_1 gives G_312
    LinComb<Permutation> g;
    for (const auto& [sigma, c] : fsym::to_F(t))
        g.add_term(sigma.inverse(), c);
    CHECK(g == fqsym::Element::term(perm("2413")) + fqsym::Element::term(perm("3412")));
    const auto d1 = word_dk(expand<FQSymWords>(g, 4), 1);
    CHECK(regroup<FQSymWords>(d1, 4) == fqsym::Element::term(perm("312")));
}

TEST_CASE("oracle products")
{
    CHECK(oracle_sharp<FQSymWords>(perm("132"), perm("231")) == fqsym::sharp_G(perm("132"), perm("231")));
    CHECK(oracle_sharp<WQSymWords>(testing::pw("121"), testing::pw("12")) == wqsym::sharp_M(testing::pw("121"), testing::pw("12")));
    CHECK(oracle_product<FQSymWords>(perm("12"), perm("1")).size() == 3);
}

TEST_CASE("QSym by duality")
{
    const sym::Element x = qsym_duality_sharp({3}, {1, 2});
    CHECK(x.coefficient({1, 4}) == 3);
    CHECK(x.coefficient({2, 3}) == 2);
    CHECK(x.coefficient({3, 2}) == 1);
    CHECK(x.size() == 3);
}
