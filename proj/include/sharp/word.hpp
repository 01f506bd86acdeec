#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sharp {

/// Letter of the totally ordered alphabet, identified with its rank (>= 1).
using Letter = int;

/// Nonempty finite word over the positive integers.
///
/// Words are the carrier of every realization in this library: each basis
/// element of the algebras is a formal sum of words.
class Word {
public:
    Word(std::initializer_list<Letter> letters);
    explicit Word(std::vector<Letter> letters);

    std::size_t size() const noexcept { return letters_.size(); }
    /// 1-based access, matching the usual combinatorial indexing.
    Letter at(std::size_t i) const { return letters_.at(i - 1); }
    Letter operator[](std::size_t i) const noexcept { return letters_[i]; }

    Letter front() const noexcept { return letters_.front(); }
    Letter back() const noexcept { return letters_.back(); }
    Letter max_letter() const noexcept;

    const std::vector<Letter>& letters() const noexcept { return letters_; }
    auto begin() const noexcept { return letters_.begin(); }
    auto end() const noexcept { return letters_.end(); }

    /// Factor w_i .. w_j, 1-based inclusive.
    Word factor(std::size_t i, std::size_t j) const;

    friend auto operator<=>(const Word&, const Word&) = default;
    friend bool operator==(const Word&, const Word&) = default;

private:
    std::vector<Letter> letters_;
};

/// An element of the path semigroup: a word, or the annihilator (nullopt).
using SemiResult = std::optional<Word>;

/// Path composition: ua # av = uav, and zero when the junction letters differ.
SemiResult sharp_product(const Word& u, const Word& v);
SemiResult sharp_product(const SemiResult& u, const SemiResult& v);

/// Deletes position k+1 when w_k = w_{k+1}; zero otherwise.
/// Throws std::out_of_range unless 1 <= k <= |w|-1.
SemiResult d_k(const Word& w, std::size_t k);

Word concat(const Word& u, const Word& v);
SemiResult concat(const SemiResult& u, const SemiResult& v);

/// Plain digit string when every letter is < 10, comma-joined otherwise.
std::string to_string(const Word& w);

/// Comma-joined letters, no brackets.
std::string join_letters(const std::vector<Letter>& letters);

/// Accepts "12321", "1,10,3" and "[1,10,3]".
Word parse_word(std::string_view text);

/// Parses a comma separated list of integers, optionally wrapped in
/// brackets. A bracket-free run of digits without commas is split into
/// single digits.
std::vector<Letter> parse_letter_list(std::string_view text);

} // namespace sharp
