#include "sharp/word.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace sharp {

namespace {

void check_letters(const std::vector<Letter>& letters)
{
    if (letters.empty())
        throw std::invalid_argument("a word must have at least one letter");
    for (Letter a : letters)
        if (a < 1)
            throw std::invalid_argument("letters must be positive integers");
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

} // namespace

Word::Word(std::initializer_list<Letter> letters) : letters_(letters)
{
    check_letters(letters_);
}

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters))
{
    check_letters(letters_);
}

Letter Word::max_letter() const noexcept
{
    return *std::max_element(letters_.begin(), letters_.end());
}

Word Word::factor(std::size_t i, std::size_t j) const
{
    if (i < 1 || j < i || j > size())
        throw std::out_of_range("factor bounds out of range");
    return Word(std::vector<Letter>(letters_.begin() + static_cast<long>(i - 1),
                                    letters_.begin() + static_cast<long>(j)));
}

SemiResult sharp_product(const Word& u, const Word& v)
{
    if (u.back() != v.front())
        return std::nullopt;
    std::vector<Letter> out = u.letters();
    out.insert(out.end(), v.begin() + 1, v.end());
    return Word(std::move(out));
}

SemiResult sharp_product(const SemiResult& u, const SemiResult& v)
{
    if (!u || !v)
        return std::nullopt;
    return sharp_product(*u, *v);
}

SemiResult d_k(const Word& w, std::size_t k)
{
    if (k < 1 || k + 1 > w.size())
        throw std::out_of_range("d_k: k must satisfy 1 <= k <= |w|-1");
    if (w.at(k) != w.at(k + 1))
        return std::nullopt;
    std::vector<Letter> out = w.letters();
    out.erase(out.begin() + static_cast<long>(k));
    return Word(std::move(out));
}

Word concat(const Word& u, const Word& v)
{
    std::vector<Letter> out = u.letters();
    out.insert(out.end(), v.begin(), v.end());
    return Word(std::move(out));
}

SemiResult concat(const SemiResult& u, const SemiResult& v)
{
    if (!u || !v)
        return std::nullopt;
    return concat(*u, *v);
}

std::string join_letters(const std::vector<Letter>& letters)
{
    std::string out;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(letters[i]);
    }
    return out;
}

std::string to_string(const Word& w)
{
    const bool small = std::all_of(w.begin(), w.end(), [](Letter a) { return a < 10; });
    if (!small)
        return join_letters(w.letters());
    std::string out;
    for (Letter a : w)
        out += static_cast<char>('0' + a);
    return out;
}

std::vector<Letter> parse_letter_list(std::string_view text)
{
    text = trim(text);
    if (!text.empty() && text.front() == '[') {
        if (text.back() != ']')
            throw std::invalid_argument("unbalanced brackets in letter list");
        text = trim(text.substr(1, text.size() - 2));
    }
    if (text.empty())
        throw std::invalid_argument("empty letter list");

    std::vector<Letter> out;
    if (text.find(',') == std::string_view::npos) {
        for (char c : text) {
            if (std::isspace(static_cast<unsigned char>(c)))
                continue;
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument(std::string("unexpected character '") + c + "' in letter list");
            out.push_back(c - '0');
        }
        return out;
    }

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string_view::npos)
            next = text.size();
        std::string_view item = trim(text.substr(pos, next - pos));
        if (item.empty() || !std::all_of(item.begin(), item.end(),
                                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw std::invalid_argument("malformed integer in letter list: '" + std::string(item) + "'");
        out.push_back(std::stoi(std::string(item)));
        pos = next + 1;
    }
    return out;
}

Word parse_word(std::string_view text)
{
    return Word(parse_letter_list(text));
}

} // namespace sharp
