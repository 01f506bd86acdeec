#include "helpers.hpp"

#include <doctest.h>

#include <algorithm>

using namespace sharp;
using testing::perm;

namespace {

// Standardization by sorting positions on (letter, position).
std::vector<Letter> std_oracle(const std::vector<Letter>& w)
{
    std::vector<std::size_t> idx(w.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return w[a] < w[b]; });
    std::vector<Letter> out(w.size());
    for (std::size_t r = 0; r < idx.size(); ++r)
        out[idx[r]] = static_cast<Letter>(r + 1);
    return out;
}

std::vector<Letter> pack_oracle(const std::vector<Letter>& w)
{
    std::vector<Letter> values = w;
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    std::vector<Letter> out;
    for (Letter x : w)
        out.push_back(static_cast<Letter>(std::lower_bound(values.begin(), values.end(), x) - values.begin() + 1));
    return out;
}

bool parking_oracle(std::vector<Letter> w)
{
    std::sort(w.begin(), w.end());
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] > static_cast<Letter>(i + 1))
            return false;
    return true;
}

} // namespace

TEST_CASE("std")
{
    CHECK(std_word(Word{3, 6, 5, 1, 8, 2, 1, 2, 2}) == perm("687193245"));
    CHECK(std_word(Word{1, 1}) == perm("12"));
    for (const auto& p : all_permutations(4))
        CHECK(std_word(p.letters()) == p);
    for_each_word(5, 4, [](const std::vector<Letter>& w) { REQUIRE(std_word(w).letters() == std_oracle(w)); });
}

TEST_CASE("pack")
{
    CHECK(pack(Word{4, 1, 5, 1}) == testing::pw("2131"));
    CHECK(pack(Word{9, 9, 9}) == testing::pw("111"));
    for (const auto& u : all_packed_words(4))
        CHECK(pack(u.letters()) == u);
    for_each_word(5, 5, [](const std::vector<Letter>& w) { REQUIRE(pack(w).letters() == pack_oracle(w)); });
}

TEST_CASE("park")
{
    CHECK(park(Word{3, 5, 1, 1, 11, 8, 8, 2}) == ParkingFunction{3, 5, 1, 1, 8, 6, 6, 2});
    for (const auto& a : all_parking_functions(4))
        CHECK(park(a.letters()) == a);
    for (const auto& p : all_permutations(4))
        CHECK(park(p.letters()).letters() == p.letters());
    // park(w) is a parking function and park(w) is again a fixed point
    for_each_word(4, 6, [](const std::vector<Letter>& w) {
        const auto a = park(w);
        REQUIRE(parking_oracle(a.letters()));
        REQUIRE(park(a.letters()) == a);
    });
}

TEST_CASE("class invariants")
{
    CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(PackedWord({1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(ParkingFunction({2, 2}), std::invalid_argument);
    CHECK(is_parking_function({1, 1, 3}));
    CHECK_FALSE(is_parking_function({1, 3, 3}));
}

TEST_CASE("restriction to windows")
{
    CHECK(restriction_check(NormalForm::Std, Word{3, 6, 5, 1, 8, 2, 1, 2, 2}, {1, 3, 5}));
    CHECK(restriction_check(NormalForm::Pack, Word{4, 1, 5, 1}, {2, 3, 4}));
    CHECK(restriction_check(NormalForm::Park, Word{3, 5, 1, 1, 11, 8, 8, 2}, {1, 2, 3, 4}));
    CHECK_THROWS_AS(restriction_check(NormalForm::Pack, Word{4, 1, 5, 1}, {1, 3}), std::out_of_range);
    CHECK_THROWS_AS(restriction_check(NormalForm::Std, Word{4, 1, 5, 1}, {1, 9}), std::out_of_range);

    for_each_word(5, 4, [](const std::vector<Letter>& w) {
        const Word u(w);
        for (std::size_t i = 1; i <= 5; ++i)
            for (std::size_t j = i; j <= 5; ++j) {
                std::vector<std::size_t> window;
                for (std::size_t p = i; p <= j; ++p)
                    window.push_back(p);
                REQUIRE(restriction_check(NormalForm::Std, u, window));
                REQUIRE(restriction_check(NormalForm::Pack, u, window));
            }
    });
}

TEST_CASE("park commutes with factors")
{
    for_each_word(5, 5, [](const std::vector<Letter>& w) {
        for (std::size_t i = 1; i <= 5; ++i)
            for (std::size_t j = i; j <= 5; ++j) {
                std::vector<std::size_t> window;
                for (std::size_t p = i; p <= j; ++p)
                    window.push_back(p);
                REQUIRE(restriction_check(NormalForm::Park, Word(w), window));
            }
    });
}
