#pragma once

#include "sharp/word.hpp"

#include <vector>

namespace sharp {

/// True if some subsequence of w packs to `pattern` (classical pattern
/// containment for words; ties in the pattern require equal letters).
bool contains_pattern(const std::vector<Letter>& w, const std::vector<Letter>& pattern);

inline bool avoids_all(const std::vector<Letter>& w, const std::vector<std::vector<Letter>>& patterns)
{
    for (const auto& p : patterns)
        if (contains_pattern(w, p))
            return false;
    return true;
}

} // namespace sharp
