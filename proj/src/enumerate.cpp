#include "sharp/enumerate.hpp"

#include <algorithm>
#include <numeric>

namespace sharp {

void for_each_word(std::size_t n, Letter alphabet, const std::function<void(const std::vector<Letter>&)>& f)
{
    if (n == 0 || alphabet < 1)
        return;
    std::vector<Letter> w(n, 1);
    for (;;) {
        f(w);
        std::size_t i = n;
        while (i > 0 && w[i - 1] == alphabet)
            w[--i] = 1;
        if (i == 0)
            return;
        ++w[i - 1];
    }
}

std::vector<Permutation> all_permutations(std::size_t n)
{
    std::vector<Permutation> out;
    if (n == 0)
        return out;
    std::vector<Letter> p(n);
    std::iota(p.begin(), p.end(), 1);
    do
        out.emplace_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<PackedWord> all_packed_words(std::size_t n)
{
    std::vector<PackedWord> out;
    for_each_word(n, static_cast<Letter>(n), [&](const std::vector<Letter>& w) {
        if (is_packed(w))
            out.emplace_back(w);
    });
    return out;
}

std::vector<ParkingFunction> all_parking_functions(std::size_t n)
{
    std::vector<ParkingFunction> out;
    for_each_word(n, static_cast<Letter>(n), [&](const std::vector<Letter>& w) {
        if (is_parking_function(w))
            out.emplace_back(w);
    });
    return out;
}

std::vector<std::vector<int>> all_compositions(int n)
{
    std::vector<std::vector<int>> out;
    if (n < 1)
        return out;
    std::vector<int> current;
    std::function<void(int)> rec = [&](int remaining) {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        for (int part = 1; part <= remaining; ++part) {
            current.push_back(part);
            rec(remaining - part);
            current.pop_back();
        }
    };
    rec(n);
    return out;
}

std::vector<ChainMerge> chain_merges(std::size_t p, std::size_t q, bool allow_ties)
{
    std::vector<ChainMerge> out;
    ChainMerge current;
    std::function<void(std::size_t, std::size_t, Letter)> rec = [&](std::size_t i, std::size_t j, Letter rank) {
        if (i == p && j == q) {
            current.size = rank;
            out.push_back(current);
            return;
        }
        if (i < p) {
            current.left.push_back(rank + 1);
            rec(i + 1, j, rank + 1);
            current.left.pop_back();
        }
        if (j < q) {
            current.right.push_back(rank + 1);
            rec(i, j + 1, rank + 1);
            current.right.pop_back();
        }
        if (allow_ties && i < p && j < q) {
            current.left.push_back(rank + 1);
            current.right.push_back(rank + 1);
            rec(i + 1, j + 1, rank + 1);
            current.left.pop_back();
            current.right.pop_back();
        }
    };
    rec(0, 0, 0);
    return out;
}

Integer binomial(unsigned n, unsigned k)
{
    if (k > n)
        return 0;
    Integer r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

Integer factorial(unsigned n)
{
    Integer r = 1;
    for (unsigned i = 2; i <= n; ++i)
        r *= i;
    return r;
}

} // namespace sharp
