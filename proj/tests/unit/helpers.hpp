#pragma once

#include "sharp/enumerate.hpp"
#include "sharp/lincomb.hpp"
#include "sharp/normal_forms.hpp"
#include "sharp/word.hpp"

#include <functional>
#include <string>
#include <vector>

namespace testing {

inline sharp::Permutation perm(const std::string& s)
{
    return sharp::Permutation(sharp::parse_letter_list(s));
}

inline sharp::PackedWord pw(const std::string& s)
{
    return sharp::PackedWord(sharp::parse_letter_list(s));
}

inline sharp::ParkingFunction pf(const std::string& s)
{
    return sharp::ParkingFunction(sharp::parse_letter_list(s));
}

template <class L>
sharp::LinComb<L> sum(const std::vector<L>& labels)
{
    sharp::LinComb<L> out;
    for (const auto& l : labels)
        out.add_term(l, 1);
    return out;
}

// Sum of labels over every word of length n on {1..N} satisfying pred.
inline std::vector<std::vector<sharp::Letter>> words_where(std::size_t n, sharp::Letter N,
                                                           const std::function<bool(const std::vector<sharp::Letter>&)>& pred)
{
    std::vector<std::vector<sharp::Letter>> out;
    sharp::for_each_word(n, N, [&](const std::vector<sharp::Letter>& w) {
        if (pred(w))
            out.push_back(w);
    });
    return out;
}

inline std::vector<sharp::Letter> slice(const std::vector<sharp::Letter>& w, std::size_t from, std::size_t len)
{
    return {w.begin() + static_cast<long>(from), w.begin() + static_cast<long>(from + len)};
}

} // namespace testing
