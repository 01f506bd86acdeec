#pragma once

#include "sharp/word.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace sharp {

bool is_permutation(const std::vector<Letter>& letters);
bool is_packed(const std::vector<Letter>& letters);
bool is_parking_function(const std::vector<Letter>& letters);

/// Permutation of {1..n} in one-line notation.
class Permutation {
public:
    /// Throws std::invalid_argument if the letters are not exactly {1..n}.
    explicit Permutation(std::vector<Letter> letters);
    Permutation(std::initializer_list<Letter> letters)
        : Permutation(std::vector<Letter>(letters)) {}

    static Permutation identity(std::size_t n);

    std::size_t size() const noexcept { return letters_.size(); }
    Letter at(std::size_t i) const { return letters_.at(i - 1); }
    Letter operator[](std::size_t i) const noexcept { return letters_[i]; }
    const std::vector<Letter>& letters() const noexcept { return letters_; }
    Word word() const { return Word(letters_); }

    Permutation inverse() const;

    friend auto operator<=>(const Permutation&, const Permutation&) = default;
    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    struct Trusted {};
    Permutation(std::vector<Letter> letters, Trusted) : letters_(std::move(letters)) {}
    friend Permutation std_word(const std::vector<Letter>&);

    std::vector<Letter> letters_;
};

/// Word whose letter set is {1..max}.
class PackedWord {
public:
    explicit PackedWord(std::vector<Letter> letters);
    PackedWord(std::initializer_list<Letter> letters)
        : PackedWord(std::vector<Letter>(letters)) {}

    std::size_t size() const noexcept { return letters_.size(); }
    Letter at(std::size_t i) const { return letters_.at(i - 1); }
    Letter operator[](std::size_t i) const noexcept { return letters_[i]; }
    Letter max_letter() const noexcept { return max_; }
    const std::vector<Letter>& letters() const noexcept { return letters_; }
    Word word() const { return Word(letters_); }

    friend auto operator<=>(const PackedWord& a, const PackedWord& b) { return a.letters_ <=> b.letters_; }
    friend bool operator==(const PackedWord& a, const PackedWord& b) { return a.letters_ == b.letters_; }

private:
    std::vector<Letter> letters_;
    Letter max_ = 0;
};

/// Word a_1..a_n whose sorted rearrangement satisfies a'_i <= i.
class ParkingFunction {
public:
    explicit ParkingFunction(std::vector<Letter> letters);
    ParkingFunction(std::initializer_list<Letter> letters)
        : ParkingFunction(std::vector<Letter>(letters)) {}

    std::size_t size() const noexcept { return letters_.size(); }
    Letter at(std::size_t i) const { return letters_.at(i - 1); }
    Letter operator[](std::size_t i) const noexcept { return letters_[i]; }
    const std::vector<Letter>& letters() const noexcept { return letters_; }
    Word word() const { return Word(letters_); }

    friend auto operator<=>(const ParkingFunction&, const ParkingFunction&) = default;
    friend bool operator==(const ParkingFunction&, const ParkingFunction&) = default;

private:
    std::vector<Letter> letters_;
};

/// Standardization: occurrences of the smallest letter are numbered first,
/// left to right, then the next letter, and so on.
Permutation std_word(const std::vector<Letter>& w);
inline Permutation std_word(const Word& w) { return std_word(w.letters()); }

/// Relabels the letters to {1..r} preserving their relative order.
PackedWord pack(const std::vector<Letter>& w);
inline PackedWord pack(const Word& w) { return pack(w.letters()); }

/// Smallest i such that fewer than i letters are <= i; n+1 for a parking function.
std::size_t parking_defect(const std::vector<Letter>& w);

/// Parkization: repeatedly decrements letters above the defect until the
/// word becomes a parking function. Reduces to std on repetition-free words.
ParkingFunction park(const std::vector<Letter>& w);
inline ParkingFunction park(const Word& w) { return park(w.letters()); }

enum class NormalForm { Std, Pack, Park };

/// Checks map(u|window) == map(map(u)|window). `window` lists 1-based
/// positions; any increasing subsequence is accepted for Std, only
/// contiguous factors for Pack and Park. Throws std::out_of_range otherwise.
bool restriction_check(NormalForm map, const Word& u, const std::vector<std::size_t>& window);

std::string to_string(const Permutation& p);
std::string to_string(const PackedWord& u);
std::string to_string(const ParkingFunction& a);

/// Subword at the given 0-based positions.
std::vector<Letter> restrict_positions(const std::vector<Letter>& w, const std::vector<std::size_t>& positions);

} // namespace sharp
