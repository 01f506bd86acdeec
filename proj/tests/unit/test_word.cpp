#include "helpers.hpp"

#include <doctest.h>

using namespace sharp;

namespace {

std::vector<Word> all_words(std::size_t max_len, Letter N)
{
    std::vector<Word> out;
    for (std::size_t n = 1; n <= max_len; ++n)
        for_each_word(n, N, [&](const std::vector<Letter>& w) { out.emplace_back(w); });
    return out;
}

// a = 1, b = 2, ...
Word letters(const std::string& s)
{
    std::vector<Letter> w;
    for (char c : s)
        w.push_back(c - 'a' + 1);
    return Word(w);
}

} // namespace

TEST_CASE("path composition")
{
    CHECK(sharp_product(letters("baaca"), letters("adb")) == letters("baacadb"));
    CHECK_FALSE(sharp_product(letters("ab"), letters("cd")));
    CHECK(sharp_product(letters("a"), letters("a")) == letters("a"));
    CHECK(sharp_product(SemiResult{}, SemiResult{letters("a")}) == SemiResult{});
}

TEST_CASE("d_k")
{
    CHECK(d_k(letters("baaca"), 2) == letters("baca"));
    CHECK_FALSE(d_k(letters("abc"), 1));
    CHECK(d_k(letters("aa"), 1) == letters("a"));
    CHECK_THROWS_AS(d_k(letters("abc"), 0), std::out_of_range);
    CHECK_THROWS_AS(d_k(letters("abc"), 3), std::out_of_range);
}

TEST_CASE("concatenation")
{
    CHECK(concat(letters("ab"), letters("c")) == letters("abc"));
    CHECK(concat(letters("a"), letters("a")) == letters("aa"));
    CHECK(concat(letters("baa"), letters("ca")) == letters("baaca"));
}

TEST_CASE("u # v = d_|u|(uv) on {1..4}, |u|+|v| <= 8")
{
    const auto words = all_words(4, 4);
    std::size_t checked = 0;
    for (const auto& u : words)
        for (const auto& v : words) {
            if (u.size() + v.size() > 8)
                continue;
            REQUIRE(sharp_product(u, v) == d_k(concat(u, v), u.size()));
            ++checked;
        }
    CHECK(checked > 0);
}

TEST_CASE("associativity and grading")
{
    const auto words = all_words(3, 3);
    for (const auto& u : words)
        for (const auto& v : words)
            for (const auto& w : words) {
                const auto left = sharp_product(sharp_product(u, v), SemiResult{w});
                const auto right = sharp_product(SemiResult{u}, sharp_product(v, w));
                REQUIRE(left == right);
                if (left)
                    REQUIRE(left->size() == u.size() + v.size() + w.size() - 2);
            }
}

TEST_CASE("text forms")
{
    CHECK(to_string(Word{1, 2, 3}) == "123");
    CHECK(to_string(Word{1, 10, 3}) == "1,10,3");
    CHECK(parse_word("[1,10,3]") == Word{1, 10, 3});
    CHECK(parse_word("12321") == Word{1, 2, 3, 2, 1});
    CHECK_THROWS(parse_word(""));
}
