#include "sharp/patterns.hpp"

#include "sharp/normal_forms.hpp"

#include <functional>

namespace sharp {

bool contains_pattern(const std::vector<Letter>& w, const std::vector<Letter>& pattern)
{
    const std::size_t m = pattern.size();
    if (m == 0)
        return true;
    if (m > w.size())
        return false;
    const auto target = pack(pattern).letters();
    std::vector<Letter> chosen;
    chosen.reserve(m);
    std::function<bool(std::size_t)> rec = [&](std::size_t start) -> bool {
        if (chosen.size() == m)
            return pack(chosen).letters() == target;
        for (std::size_t i = start; i + (m - chosen.size()) <= w.size(); ++i) {
            chosen.push_back(w[i]);
            if (rec(i + 1))
                return true;
            chosen.pop_back();
        }
        return false;
    };
    return rec(0);
}

} // namespace sharp
