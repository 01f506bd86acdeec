#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace sharp {

using Integer = boost::multiprecision::cpp_int;

/// Finite linear combination of basis labels with exact coefficients.
/// Zero coefficients are never stored.
template <class Label, class Scalar = Integer>
class LinComb {
public:
    using label_type = Label;
    using scalar_type = Scalar;
    using map_type = std::map<Label, Scalar>;
    using const_iterator = typename map_type::const_iterator;

    LinComb() = default;

    static LinComb term(Label label, Scalar coeff = Scalar(1))
    {
        LinComb out;
        out.add_term(std::move(label), std::move(coeff));
        return out;
    }

    void add_term(const Label& label, const Scalar& coeff)
    {
        if (coeff == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(label, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    Scalar coefficient(const Label& label) const
    {
        auto it = terms_.find(label);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    bool contains(const Label& label) const { return terms_.count(label) != 0; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }
    const_iterator begin() const noexcept { return terms_.begin(); }
    const_iterator end() const noexcept { return terms_.end(); }
    const map_type& terms() const noexcept { return terms_; }

    std::vector<Label> support() const
    {
        std::vector<Label> out;
        out.reserve(terms_.size());
        for (const auto& [label, c] : terms_)
            out.push_back(label);
        return out;
    }

    /// Sum of all coefficients.
    Scalar total() const
    {
        Scalar s = 0;
        for (const auto& [label, c] : terms_)
            s += c;
        return s;
    }

    LinComb& operator+=(const LinComb& other)
    {
        for (const auto& [label, c] : other.terms_)
            add_term(label, c);
        return *this;
    }

    LinComb& operator-=(const LinComb& other)
    {
        for (const auto& [label, c] : other.terms_)
            add_term(label, -c);
        return *this;
    }

    LinComb& operator*=(const Scalar& s)
    {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [label, c] : terms_)
            c *= s;
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator-(LinComb a) { return a *= Scalar(-1); }
    friend LinComb operator*(const Scalar& s, LinComb a) { return a *= s; }
    friend LinComb operator*(LinComb a, const Scalar& s) { return a *= s; }

    friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

private:
    map_type terms_;
};

namespace detail {

template <class Out, class Result>
void accumulate_into(Out& out, const Result& r, const typename Out::scalar_type& c)
{
    if constexpr (requires { r.has_value(); *r; }) {
        if (r)
            out.add_term(*r, c);
    } else if constexpr (requires { r.terms(); }) {
        for (const auto& [label, rc] : r)
            out.add_term(label, rc * c);
    } else {
        out.add_term(r, c);
    }
}

template <class T>
struct result_label {
    using type = T;
};
template <class T>
struct result_label<std::optional<T>> {
    using type = T;
};
template <class L, class S>
struct result_label<LinComb<L, S>> {
    using type = L;
};

} // namespace detail

/// Extends a map on labels linearly. `f` may return a label, an optional
/// label (nullopt meaning zero) or a linear combination.
template <class Label, class Scalar, class F>
auto linear_extend(const LinComb<Label, Scalar>& x, F&& f)
{
    using R = std::decay_t<std::invoke_result_t<F, const Label&>>;
    using Out = LinComb<typename detail::result_label<R>::type, Scalar>;
    Out out;
    for (const auto& [label, c] : x)
        detail::accumulate_into(out, std::invoke(f, label), c);
    return out;
}

/// Extends a basis-level product bilinearly to linear combinations.
template <class A, class B, class Scalar, class F>
auto bilinear_extend(const LinComb<A, Scalar>& x, const LinComb<B, Scalar>& y, F&& f)
{
    using R = std::decay_t<std::invoke_result_t<F, const A&, const B&>>;
    using Out = LinComb<typename detail::result_label<R>::type, Scalar>;
    Out out;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y)
            detail::accumulate_into(out, std::invoke(f, a, b), ca * cb);
    return out;
}

/// Renders "3·F[1,4] + 2·F[2,3] + F[3,2]": terms sorted by their label text,
/// unit coefficients elided, "0" for the empty combination.
template <class Label, class Scalar, class AtomText>
std::string format(const LinComb<Label, Scalar>& x, AtomText&& atom_text)
{
    if (x.empty())
        return "0";
    std::vector<std::pair<std::string, Scalar>> items;
    for (const auto& [label, c] : x)
        items.emplace_back(std::invoke(atom_text, label), c);
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

    std::string out;
    bool first = true;
    for (const auto& [text, c] : items) {
        Scalar mag = c < 0 ? Scalar(-c) : c;
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (mag != 1) {
            std::ostringstream os;
            os << mag;
            out += os.str() + "·";
        }
        out += text;
        first = false;
    }
    return out;
}

/// Truncated formal power series with integer coefficients, arithmetic
/// taken modulo t^(order+1).
class Series {
public:
    explicit Series(std::size_t order) : coeffs_(order + 1, 0) {}
    Series(std::size_t order, const std::vector<Integer>& coeffs);

    static Series one(std::size_t order);
    static Series t(std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const Integer& operator[](std::size_t i) const { return coeffs_.at(i); }
    Integer& operator[](std::size_t i) { return coeffs_.at(i); }
    const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }

    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Series& b);
    friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<Integer> coeffs_;
};

/// Sum of f^j for j >= 0, i.e. 1/(1 - f). Throws std::domain_error when
/// f has a nonzero constant term.
Series series_geom_inverse(const Series& f);

std::string to_string(const Series& s);

} // namespace sharp
