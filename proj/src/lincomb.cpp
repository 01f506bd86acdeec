#include "sharp/lincomb.hpp"

#include <sstream>
#include <stdexcept>

namespace sharp {

Series::Series(std::size_t order, const std::vector<Integer>& coeffs) : coeffs_(order + 1, 0)
{
    for (std::size_t i = 0; i < coeffs.size() && i <= order; ++i)
        coeffs_[i] = coeffs[i];
}

Series Series::one(std::size_t order)
{
    Series s(order);
    s.coeffs_[0] = 1;
    return s;
}

Series Series::t(std::size_t order)
{
    Series s(order);
    if (order >= 1)
        s.coeffs_[1] = 1;
    return s;
}

namespace {

void check_orders(const Series& a, const Series& b)
{
    if (a.order() != b.order())
        throw std::invalid_argument("series truncation orders differ");
}

} // namespace

Series operator+(const Series& a, const Series& b)
{
    check_orders(a, b);
    Series out(a.order());
    for (std::size_t i = 0; i <= a.order(); ++i)
        out.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return out;
}

Series operator-(const Series& a, const Series& b)
{
    check_orders(a, b);
    Series out(a.order());
    for (std::size_t i = 0; i <= a.order(); ++i)
        out.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    return out;
}

Series operator*(const Series& a, const Series& b)
{
    check_orders(a, b);
    Series out(a.order());
    for (std::size_t i = 0; i <= a.order(); ++i)
        for (std::size_t j = 0; i + j <= a.order(); ++j)
            out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return out;
}

Series series_geom_inverse(const Series& f)
{
    if (f[0] != 0)
        throw std::domain_error("series_geom_inverse: constant term must vanish");
    // 1 + f + f^2 + ... ; f^j vanishes mod t^(D+1) once j > D.
    Series sum = Series::one(f.order());
    Series power = Series::one(f.order());
    for (std::size_t j = 1; j <= f.order(); ++j) {
        power = power * f;
        sum = sum + power;
    }
    return sum;
}

std::string to_string(const Series& s)
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i <= s.order(); ++i) {
        if (s[i] == 0)
            continue;
        if (!first)
            os << " + ";
        os << s[i];
        if (i == 1)
            os << "t";
        else if (i > 1)
            os << "t^" << i;
        first = false;
    }
    os << " + O(t^" << s.order() + 1 << ")";
    return first ? "0 + O(t^" + std::to_string(s.order() + 1) + ")" : os.str();
}

} // namespace sharp
