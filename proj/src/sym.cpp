#include "sharp/sym.hpp"

#include "sharp/enumerate.hpp"

#include <functional>
#include <stdexcept>

namespace sharp::sym {

void validate(const Composition& c)
{
    if (c.empty())
        throw std::invalid_argument("composition must have at least one part");
    for (int p : c)
        if (p < 1)
            throw std::invalid_argument("composition parts must be positive: " + to_string(c));
}

int degree(const Composition& c)
{
    int n = 0;
    for (int p : c)
        n += p;
    return n;
}

Composition descent_composition(const std::vector<Letter>& w)
{
    Composition out;
    int part = 1;
    for (std::size_t i = 1; i < w.size(); ++i) {
        if (w[i - 1] > w[i]) {
            out.push_back(part);
            part = 1;
        } else {
            ++part;
        }
    }
    out.push_back(part);
    return out;
}

Composition glue(const Composition& I, const Composition& J)
{
    validate(I);
    validate(J);
    Composition out(I.begin(), I.end() - 1);
    out.push_back(I.back() + J.front() - 1);
    out.insert(out.end(), J.begin() + 1, J.end());
    return out;
}

BinaryCode binary_code(const Composition& I)
{
    validate(I);
    BinaryCode b;
    for (std::size_t j = 0; j < I.size(); ++j) {
        if (j > 0)
            b.push_back(1);
        for (int z = 1; z < I[j]; ++z)
            b.push_back(0);
    }
    return b;
}

Composition from_binary_code(const BinaryCode& b)
{
    Composition out{1};
    for (int bit : b) {
        if (bit == 1)
            out.push_back(1);
        else if (bit == 0)
            ++out.back();
        else
            throw std::invalid_argument("binary code letters must be 0 or 1");
    }
    return out;
}

Element word_in_generators(const Composition& I, Basis basis)
{
    const Element x = Element::term({2});
    const Element y = Element::term({1, 1});
    const Element xy = x + y;
    const Element* zero = basis == Basis::Lambda ? &y : &x;
    const Element* one = basis == Basis::R ? &y : &xy;

    Element acc = Element::term({1});
    for (int bit : binary_code(I))
        acc = bilinear_extend(acc, bit ? *one : *zero, glue);
    return acc;
}

namespace {

/// Every composition obtained by merging runs of adjacent parts of I.
void coarsenings(const Composition& I, const std::function<void(const Composition&, std::size_t)>& f)
{
    const std::size_t gaps = I.size() - 1;
    for (unsigned long mask = 0; mask < (1UL << gaps); ++mask) {
        Composition J{I[0]};
        for (std::size_t g = 0; g < gaps; ++g) {
            if (mask & (1UL << g))
                J.back() += I[g + 1];
            else
                J.push_back(I[g + 1]);
        }
        f(J, J.size());
    }
}

} // namespace

Element S_to_R(const Composition& I)
{
    validate(I);
    Element out;
    coarsenings(I, [&](const Composition& J, std::size_t) { out.add_term(J, 1); });
    return out;
}

Element R_to_S(const Composition& J)
{
    validate(J);
    Element out;
    coarsenings(J, [&](const Composition& K, std::size_t len) {
        out.add_term(K, (J.size() - len) % 2 == 0 ? 1 : -1);
    });
    return out;
}

Tensor coproduct_R(const Composition& I)
{
    const BinaryCode b = binary_code(I);
    Tensor out;
    for (unsigned long mask = 0; mask < (1UL << b.size()); ++mask) {
        BinaryCode l;
        BinaryCode r;
        for (std::size_t i = 0; i < b.size(); ++i)
            ((mask >> i) & 1UL ? r : l).push_back(b[i]);
        out.add_term({from_binary_code(l), from_binary_code(r)}, 1);
    }
    return out;
}

Tensor coproduct_R(const Element& x)
{
    Tensor out;
    for (const auto& [I, c] : x)
        out += c * coproduct_R(I);
    return out;
}

Tensor coproduct_S_n(int n)
{
    if (n < 1)
        throw std::invalid_argument("coproduct_S_n: n must be positive");
    Tensor out;
    for (int i = 1; i <= n; ++i)
        out.add_term({{i}, {n + 1 - i}}, binomial(static_cast<unsigned>(n - 1), static_cast<unsigned>(i - 1)));
    return out;
}

Integer counit(const Element& x)
{
    return x.coefficient({1});
}

LinComb<BinaryCode> shuffle(const BinaryCode& u, const BinaryCode& v)
{
    LinComb<BinaryCode> out;
    BinaryCode w;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t j) {
        if (i == u.size() && j == v.size()) {
            out.add_term(w, 1);
            return;
        }
        if (i < u.size()) {
            w.push_back(u[i]);
            rec(i + 1, j);
            w.pop_back();
        }
        if (j < v.size()) {
            w.push_back(v[j]);
            rec(i, j + 1);
            w.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

Element qsym_sharp_F(const Composition& I, const Composition& J)
{
    return linear_extend(shuffle(binary_code(I), binary_code(J)), from_binary_code);
}

std::string to_string(const Composition& c)
{
    std::string out = "[";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(c[i]);
    }
    return out + "]";
}

Composition parse_composition(std::string_view text)
{
    Composition c = parse_letter_list(text);
    validate(c);
    return c;
}

} // namespace sharp::sym
