#include "sharp/normal_forms.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sharp {

bool is_permutation(const std::vector<Letter>& letters)
{
    const auto n = static_cast<Letter>(letters.size());
    std::vector<bool> seen(letters.size() + 1, false);
    for (Letter a : letters) {
        if (a < 1 || a > n || seen[static_cast<std::size_t>(a)])
            return false;
        seen[static_cast<std::size_t>(a)] = true;
    }
    return !letters.empty();
}

bool is_packed(const std::vector<Letter>& letters)
{
    if (letters.empty())
        return false;
    const Letter m = *std::max_element(letters.begin(), letters.end());
    if (m > static_cast<Letter>(letters.size()))
        return false;
    std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
    for (Letter a : letters) {
        if (a < 1)
            return false;
        seen[static_cast<std::size_t>(a)] = true;
    }
    return std::all_of(seen.begin() + 1, seen.end(), [](bool b) { return b; });
}

bool is_parking_function(const std::vector<Letter>& letters)
{
    if (letters.empty())
        return false;
    std::vector<Letter> sorted = letters;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] < 1 || sorted[i] > static_cast<Letter>(i + 1))
            return false;
    return true;
}

Permutation::Permutation(std::vector<Letter> letters) : letters_(std::move(letters))
{
    if (!is_permutation(letters_))
        throw std::invalid_argument("not a permutation: [" + join_letters(letters_) + "]");
}

Permutation Permutation::identity(std::size_t n)
{
    std::vector<Letter> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v), Trusted{});
}

Permutation Permutation::inverse() const
{
    std::vector<Letter> inv(letters_.size());
    for (std::size_t i = 0; i < letters_.size(); ++i)
        inv[static_cast<std::size_t>(letters_[i] - 1)] = static_cast<Letter>(i + 1);
    return Permutation(std::move(inv), Trusted{});
}

PackedWord::PackedWord(std::vector<Letter> letters) : letters_(std::move(letters))
{
    if (!is_packed(letters_))
        throw std::invalid_argument("not a packed word: [" + join_letters(letters_) + "]");
    max_ = *std::max_element(letters_.begin(), letters_.end());
}

ParkingFunction::ParkingFunction(std::vector<Letter> letters) : letters_(std::move(letters))
{
    if (!is_parking_function(letters_))
        throw std::invalid_argument("not a parking function: [" + join_letters(letters_) + "]");
}

Permutation std_word(const std::vector<Letter>& w)
{
    if (w.empty())
        throw std::invalid_argument("std of the empty word");
    std::vector<std::size_t> order(w.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return w[a] < w[b]; });
    std::vector<Letter> out(w.size());
    for (std::size_t r = 0; r < order.size(); ++r)
        out[order[r]] = static_cast<Letter>(r + 1);
    return Permutation(std::move(out), Permutation::Trusted{});
}

PackedWord pack(const std::vector<Letter>& w)
{
    std::vector<Letter> values = w;
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    std::vector<Letter> out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        out[i] = static_cast<Letter>(std::lower_bound(values.begin(), values.end(), w[i]) - values.begin() + 1);
    return PackedWord(std::move(out));
}

std::size_t parking_defect(const std::vector<Letter>& w)
{
    const std::size_t n = w.size();
    std::vector<std::size_t> count(n + 2, 0);
    for (Letter a : w)
        if (a >= 1 && static_cast<std::size_t>(a) <= n)
            ++count[static_cast<std::size_t>(a)];
    std::size_t below = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        below += count[i];
        if (below < i)
            return i;
    }
    return n + 1;
}

ParkingFunction park(const std::vector<Letter>& input)
{
    if (input.empty())
        throw std::invalid_argument("park of the empty word");
    std::vector<Letter> w = input;
    const std::size_t n = w.size();
    for (;;) {
        const std::size_t d = parking_defect(w);
        if (d == n + 1)
            return ParkingFunction(std::move(w));
        const auto dl = static_cast<Letter>(d);
        // While no letter equals d+1 the defect stays at d, so those unit
        // decrements are collapsed into one shift.
        Letter next = 0;
        for (Letter a : w)
            if (a > dl && (next == 0 || a < next))
                next = a;
        const Letter shift = next > dl + 1 ? next - dl - 1 : 1;
        for (Letter& a : w)
            if (a > dl)
                a -= shift;
    }
}

std::vector<Letter> restrict_positions(const std::vector<Letter>& w, const std::vector<std::size_t>& positions)
{
    std::vector<Letter> out;
    out.reserve(positions.size());
    for (std::size_t p : positions)
        out.push_back(w.at(p));
    return out;
}

bool restriction_check(NormalForm map, const Word& u, const std::vector<std::size_t>& window)
{
    if (window.empty())
        throw std::out_of_range("restriction window is empty");
    for (std::size_t i = 0; i < window.size(); ++i) {
        if (window[i] < 1 || window[i] > u.size())
            throw std::out_of_range("restriction window position out of range");
        if (i > 0 && window[i] <= window[i - 1])
            throw std::out_of_range("restriction window must be strictly increasing");
        if (i > 0 && map != NormalForm::Std && window[i] != window[i - 1] + 1)
            throw std::out_of_range("pack/park restrictions require a contiguous factor");
    }
    std::vector<std::size_t> positions;
    for (std::size_t p : window)
        positions.push_back(p - 1);

    const auto& w = u.letters();
    switch (map) {
    case NormalForm::Std:
        return std_word(restrict_positions(w, positions)) ==
               std_word(restrict_positions(std_word(w).letters(), positions));
    case NormalForm::Pack:
        return pack(restrict_positions(w, positions)) ==
               pack(restrict_positions(pack(w).letters(), positions));
    case NormalForm::Park:
        return park(restrict_positions(w, positions)) ==
               park(restrict_positions(park(w).letters(), positions));
    }
    return false;
}

std::string to_string(const Permutation& p) { return "[" + join_letters(p.letters()) + "]"; }

std::string to_string(const PackedWord& u)
{
    if (u.size() > 9)
        return "[" + join_letters(u.letters()) + "]";
    return to_string(u.word());
}

std::string to_string(const ParkingFunction& a) { return "[" + join_letters(a.letters()) + "]"; }

} // namespace sharp
