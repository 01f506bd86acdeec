#include "sharp/fsym.hpp"
#include "sharp/realization.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace sharp;
using namespace sharp::fsym;
using testing::perm;

namespace {

using Cell = std::pair<int, int>; // (row from the bottom, column)

// Rectification by inward jeu de taquin slides into inner corners.
Rows slide_rectify(const SkewTableau& sk)
{
    std::map<Cell, int> cells;
    std::set<Cell> inner;
    for (std::size_t r = 0; r < sk.rows.size(); ++r)
        for (std::size_t j = 0; j < sk.rows[r].size(); ++j) {
            const Cell c{static_cast<int>(r), static_cast<int>(j)};
            if (sk.rows[r][j] == 0)
                inner.insert(c);
            else
                cells[c] = sk.rows[r][j];
        }
    while (!inner.empty()) {
        Cell hole{};
        for (const auto& c : inner)
            if (!inner.count({c.first, c.second + 1}) && !inner.count({c.first + 1, c.second})) {
                hole = c;
                break;
            }
        inner.erase(hole);
        while (true) {
            const auto right = cells.find({hole.first, hole.second + 1});
            const auto up = cells.find({hole.first + 1, hole.second});
            if (right == cells.end() && up == cells.end())
                break;
            auto from = right;
            if (right == cells.end() || (up != cells.end() && up->second < right->second))
                from = up;
            const Cell next = from->first;
            cells[hole] = from->second;
            cells.erase(from);
            hole = next;
        }
    }
    Rows out;
    for (const auto& [c, v] : cells) {
        if (static_cast<std::size_t>(c.first) >= out.size())
            out.resize(c.first + 1);
        out[c.first].push_back(v);
    }
    return out;
}

std::size_t longest_increasing(const std::vector<Letter>& w)
{
    std::vector<std::size_t> best(w.size(), 1);
    std::size_t top = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j)
            if (w[j] < w[i])
                best[i] = std::max(best[i], best[j] + 1);
        top = std::max(top, best[i]);
    }
    return top;
}

Tableau T(Rows rows)
{
    return Tableau(std::move(rows));
}

Element sum(std::initializer_list<Rows> list)
{
    Element out;
    for (const auto& r : list)
        out.add_term(Tableau(r), 1);
    return out;
}

} // namespace

TEST_CASE("tableau invariants")
{
    CHECK_THROWS_AS(T({{2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(T({{1}, {2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(T({{1, 3}}), std::invalid_argument);
    CHECK(T({{1, 3}, {2}}).shape() == std::vector<std::size_t>{2, 1});
    CHECK(parse_tableau("[[1,2,3],[4]]") == T({{1, 2, 3}, {4}}));
    CHECK(to_string(T({{1, 2, 3}, {4}})) == "[[1,2,3],[4]]");
}

TEST_CASE("RSK")
{
    CHECK(rsk(perm("1234")).P == T({{1, 2, 3, 4}}));
    CHECK(rsk(perm("1234")).Q == T({{1, 2, 3, 4}}));
    CHECK(rsk(perm("321")).P == T({{1}, {2}, {3}}));
    CHECK(rsk(perm("321")).Q == T({{1}, {2}, {3}}));

    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto& s : all_permutations(n)) {
            const auto [P, Q] = rsk(s);
            REQUIRE(inverse_rsk(P, Q) == s);
            REQUIRE(rsk(s.inverse()).P == Q);
            REQUIRE(P.rows().front().size() == longest_increasing(s.letters()));
            REQUIRE(recording_tableau(s.letters()) == Q);
        }
    for_each_word(4, 3, [](const std::vector<Letter>& w) { REQUIRE(recording_tableau(w) == rsk(std_word(w)).Q); });
}

TEST_CASE("tableau enumeration")
{
    for (std::size_t n = 1; n <= 6; ++n) {
        std::size_t involutions = 0;
        for (const auto& s : all_permutations(n))
            involutions += s.inverse() == s;
        CHECK(all_tableaux(n).size() == involutions);
    }
    CHECK(count_of_shape({3, 2}) == 5);
    CHECK(Integer(tableaux_of_shape({3, 2, 1}).size()) == count_of_shape({3, 2, 1}));
    CHECK(tableaux_of_shape({2, 1}) == std::vector<Tableau>{T({{1, 2}, {3}}), T({{1, 3}, {2}})});
}

TEST_CASE("restriction and rectification")
{
    const Tableau t = T({{1, 2, 3}, {4, 5}, {6}});
    CHECK(restrict(t, {4, 5, 6}).rows == Rows{{0, 0, 0}, {1, 2}, {3}});
    CHECK(restrict(t, {1, 2, 3, 4, 5, 6}).rows == t.rows());
    CHECK(reading_word(restrict(t, {4, 5, 6})) == std::vector<Letter>{3, 1, 2});
    CHECK_THROWS_AS(restrict(t, {1, 3}), std::domain_error);
    CHECK(rectify(SkewTableau{t.rows()}) == t);

    // every interval restriction of every tableau of size <= 6
    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto& tab : all_tableaux(n))
            for (int a = 1; a <= static_cast<int>(n); ++a)
                for (int b = a; b <= static_cast<int>(n); ++b) {
                    std::vector<int> values;
                    for (int v = a; v <= b; ++v)
                        values.push_back(v);
                    const auto sk = restrict(tab, values);
                    REQUIRE(rectify(sk).rows() == slide_rectify(sk));
                }
}

TEST_CASE("dbar_k")
{
    CHECK(dbar_k(perm("123"), 1) == perm("12"));
    CHECK_FALSE(dbar_k(perm("213"), 1));
    for (std::size_t n = 2; n <= 5; ++n)
        for (const auto& s : all_permutations(n))
            for (std::size_t k = 1; k < n; ++k) {
                const auto d = fqsym::dk_G(s.inverse(), k);
                const auto bar = dbar_k(s, k);
                REQUIRE(bar.has_value() == d.has_value());
                if (bar) {
                    REQUIRE(*bar == d->inverse());
                    REQUIRE(dbar_k_inverse(*bar, k) == s);
                }
            }
}

TEST_CASE("S # S, worked examples")
{
    CHECK(sharp_S_t(T({{1, 3}, {2}}), T({{1}, {2}, {3}})) == sum({{{1, 3}, {2}, {4}, {5}}, {{1, 3}, {2, 4}, {5}}}));
    CHECK(sharp_S_t(T({{1, 2}, {3}}), T({{1}, {2}, {3}})) == sum({{{1, 2}, {3}, {4}, {5}}}));
    CHECK(sharp_S_t(T({{1}, {2}, {3}}), T({{1, 3}, {2}})) == sum({{{1, 5}, {2}, {3}, {4}}}));
    CHECK(sharp_S_t(T({{1}, {2}, {3}}), T({{1, 2}, {3}})) == sum({{{1, 4}, {2, 5}, {3}}, {{1, 4}, {2}, {3}, {5}}}));
    CHECK(sharp_S_t(T({{1, 2, 3}, {4}}), T({{1, 2}, {3}}))
          == sum({{{1, 2, 3}, {4, 5}, {6}}, {{1, 2, 3, 5}, {4}, {6}}, {{1, 2, 3, 5}, {4, 6}}}));
    CHECK(sharp_S_t(T({{1}}), T({{1, 3}, {2}})) == sum({{{1, 3}, {2}}}));
}

TEST_CASE("S # S against FQSym and the word realization")
{
    for (std::size_t k = 1; k <= 4; ++k)
        for (std::size_t l = 1; k + l <= 5; ++l)
            for (const auto& a : all_tableaux(k))
                for (const auto& b : all_tableaux(l)) {
                    const auto x = sharp_S_t(a, b);
                    REQUIRE(x == sharp_via_F(a, b));
                    REQUIRE(x == realization::oracle_sharp<realization::FSymWords>(a, b));
                    for (const auto& [t, c] : x)
                        REQUIRE(t.size() == k + l - 1);
                }
}

TEST_CASE("F regrouping")
{
    const Tableau t = T({{1, 3}, {2}});
    CHECK(from_F(to_F(t)) == Element::term(t));
    CHECK_THROWS_AS(from_F(LinComb<Permutation>::term(perm("132"))), NotInAlgebra);
}
