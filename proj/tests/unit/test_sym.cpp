#include "sharp/realization.hpp"
#include "sharp/sym.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <map>
#include <tuple>

using namespace sharp;
using namespace sharp::sym;

namespace {

using Triple = std::map<std::tuple<Composition, Composition, Composition>, Integer>;

// Words on {1..n} cut into blocks of the given lengths, each block weakly
// increasing (S) or strictly decreasing (Lambda), regrouped by descents.
Element block_words(const Composition& I, bool decreasing)
{
    const int n = degree(I);
    realization::Expansion e;
    for_each_word(static_cast<std::size_t>(n), n, [&](const std::vector<Letter>& w) {
        std::size_t pos = 0;
        for (int part : I) {
            for (int j = 1; j < part; ++j) {
                const Letter a = w[pos + j - 1], b = w[pos + j];
                if (decreasing ? !(a > b) : !(a <= b))
                    return;
            }
            pos += part;
        }
        e.add_term(Word(w), 1);
    });
    return realization::regroup<realization::SymWords>(e, n);
}

Tensor tensor_of(const Tensor& t, const std::function<Element(const Composition&)>& f)
{
    Tensor out;
    for (const auto& [pair, c] : t)
        for (const auto& [a, ca] : f(pair.first))
            for (const auto& [b, cb] : f(pair.second))
                out.add_term({a, b}, c * ca * cb);
    return out;
}

Triple left_twice(const Composition& I)
{
    Triple out;
    for (const auto& [p, c] : coproduct_R(I))
        for (const auto& [q, d] : coproduct_R(p.first))
            out[{q.first, q.second, p.second}] += c * d;
    return out;
}

Triple right_twice(const Composition& I)
{
    Triple out;
    for (const auto& [p, c] : coproduct_R(I))
        for (const auto& [q, d] : coproduct_R(p.second))
            out[{p.first, q.first, q.second}] += c * d;
    return out;
}

} // namespace

TEST_CASE("compositions")
{
    CHECK(descent_composition({1, 3, 2, 2, 1}) == Composition{2, 2, 1});
    CHECK(descent_composition({1, 1, 2}) == Composition{3});
    CHECK_THROWS_AS(validate({}), std::invalid_argument);
    CHECK_THROWS_AS(validate({1, 0}), std::invalid_argument);
    CHECK(parse_composition("[1,5,1,2]") == Composition{1, 5, 1, 2});
    CHECK(to_string(Composition{1, 5, 1, 2}) == "[1,5,1,2]");
}

TEST_CASE("R # R")
{
    CHECK(sharp_R({1, 5, 1, 2}, {4, 3}) == Composition{1, 5, 1, 5, 3});
    CHECK(sharp_S_I({4}, {3}) == Composition{6});
    CHECK(sharp_R({1}, {2, 1}) == Composition{2, 1});
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; n + m <= 6; ++m)
            for (const auto& I : all_compositions(n))
                for (const auto& J : all_compositions(m))
                    REQUIRE(Element::term(sharp_R(I, J)) == realization::oracle_sharp<realization::SymWords>(I, J));
}

TEST_CASE("binary codes")
{
    CHECK(binary_code({3}) == BinaryCode{0, 0});
    CHECK(binary_code({1, 2}) == BinaryCode{1, 0});
    for (int n = 1; n <= 6; ++n)
        for (const auto& I : all_compositions(n))
            REQUIRE(from_binary_code(binary_code(I)) == I);
}

TEST_CASE("words in the generators")
{
    CHECK(word_in_generators({1, 2}, Basis::R) == Element::term({1, 2}));
    for (int n = 1; n <= 5; ++n)
        for (const auto& I : all_compositions(n)) {
            REQUIRE(word_in_generators(I, Basis::R) == Element::term(I));
            REQUIRE(word_in_generators(I, Basis::S) == S_to_R(I));
            REQUIRE(S_to_R(I) == block_words(I, false));
            REQUIRE(word_in_generators(I, Basis::Lambda) == block_words(I, true));
        }
}

TEST_CASE("S and R bases")
{
    for (int n = 1; n <= 5; ++n)
        for (const auto& I : all_compositions(n)) {
            Element back;
            for (const auto& [K, c] : R_to_S(I))
                back += c * S_to_R(K);
            REQUIRE(back == Element::term(I));
        }
}

TEST_CASE("the maps S -> R and Lambda -> R commute with #")
{
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; n + m <= 6; ++m)
            for (const auto& I : all_compositions(n))
                for (const auto& J : all_compositions(m)) {
                    const auto K = glue(I, J);
                    REQUIRE(bilinear_extend(S_to_R(I), S_to_R(J), sharp_R) == S_to_R(K));
                    REQUIRE(bilinear_extend(word_in_generators(I, Basis::Lambda), word_in_generators(J, Basis::Lambda), sharp_R)
                            == word_in_generators(K, Basis::Lambda));
                }
}

TEST_CASE("coproduct")
{
    using P = std::pair<Composition, Composition>;
    CHECK(coproduct_R({2}) == Tensor::term(P{{2}, {1}}) + Tensor::term(P{{1}, {2}}));
    CHECK(coproduct_S_n(1) == Tensor::term(P{{1}, {1}}));
    CHECK(coproduct_S_n(2) == Tensor::term(P{{2}, {1}}) + Tensor::term(P{{1}, {2}}));
    CHECK(coproduct_S_n(3) == Tensor::term(P{{1}, {3}}) + Tensor::term(P{{2}, {2}}, 2) + Tensor::term(P{{3}, {1}}));

    for (int n = 1; n <= 6; ++n) {
        // S_n = R_n; push its coproduct to S (x) S
        const Tensor in_S = tensor_of(coproduct_R({n}), R_to_S);
        REQUIRE(in_S == coproduct_S_n(n));
        for (int i = 1; i <= n; ++i)
            REQUIRE(in_S.coefficient(P{{i}, {n + 1 - i}}) == binomial(n - 1, i - 1));
    }
}

TEST_CASE("coassociativity and counit")
{
    for (int n = 1; n <= 5; ++n)
        for (const auto& I : all_compositions(n)) {
            REQUIRE(left_twice(I) == right_twice(I));
            Element left, right;
            for (const auto& [p, c] : coproduct_R(I)) {
                left += (c * counit(Element::term(p.first))) * Element::term(p.second);
                right += (c * counit(Element::term(p.second))) * Element::term(p.first);
            }
            REQUIRE(left == Element::term(I));
            REQUIRE(right == Element::term(I));
        }
}

TEST_CASE("the maps S -> R and Lambda -> R commute with the coproduct")
{
    for (int n = 1; n <= 5; ++n)
        for (const auto& I : all_compositions(n)) {
            const Tensor dR = coproduct_R(I);
            REQUIRE(coproduct_R(S_to_R(I)) == tensor_of(dR, S_to_R));
            const auto lam = [](const Composition& K) { return word_in_generators(K, Basis::Lambda); };
            REQUIRE(coproduct_R(lam(I)) == tensor_of(dR, lam));
        }
}

TEST_CASE("QSym")
{
    CHECK(qsym_sharp_F({3}, {1, 2}) == Element::term({1, 4}, 3) + Element::term({2, 3}, 2) + Element::term({3, 2}));
    CHECK(qsym_sharp_F({1}, {2, 1}) == Element::term({2, 1}));
    CHECK(shuffle({1}, {0}) == LinComb<BinaryCode>::term({1, 0}) + LinComb<BinaryCode>::term({0, 1}));
    CHECK(shuffle({0}, {0}) == LinComb<BinaryCode>::term({0, 0}, 2));
    for (int n = 1; n <= 5; ++n)
        for (int m = 1; n + m <= 6; ++m)
            for (const auto& I : all_compositions(n))
                for (const auto& J : all_compositions(m))
                    REQUIRE(qsym_sharp_F(I, J) == realization::qsym_duality_sharp(I, J));
}
