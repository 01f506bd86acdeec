#pragma once

#include "sharp/lincomb.hpp"
#include "sharp/normal_forms.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace sharp {

/// Calls f on every word of length n over {1..alphabet}, in lexicographic order.
void for_each_word(std::size_t n, Letter alphabet, const std::function<void(const std::vector<Letter>&)>& f);

std::vector<Permutation> all_permutations(std::size_t n);
std::vector<PackedWord> all_packed_words(std::size_t n);
std::vector<ParkingFunction> all_parking_functions(std::size_t n);

/// Compositions of n as part vectors, in lexicographic order.
std::vector<std::vector<int>> all_compositions(int n);

/// One way of merging two chains a_1 < ... < a_p and b_1 < ... < b_q into a
/// single chain 1 < ... < size. With ties allowed an a_i may be identified
/// with a b_j (quasi-shuffle); otherwise the merge is a plain shuffle.
struct ChainMerge {
    std::vector<Letter> left;  ///< merged rank of a_i
    std::vector<Letter> right; ///< merged rank of b_j
    Letter size = 0;
};

std::vector<ChainMerge> chain_merges(std::size_t p, std::size_t q, bool allow_ties);

Integer binomial(unsigned n, unsigned k);
Integer factorial(unsigned n);

} // namespace sharp
