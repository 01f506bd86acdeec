#include "sharp/pqsym.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

namespace sharp::pqsym {

namespace {

/// Words c of length |a|+|b|-overlap over {1..n} with park(c_1..c_k) = a and
/// park of the tail starting at position k+1-overlap equal to b.
Element glue_search(const ParkingFunction& a, const ParkingFunction& b, std::size_t overlap)
{
    const std::size_t k = a.size();
    const std::size_t n = k + b.size() - overlap;
    const auto max_letter = static_cast<Letter>(n);
    Element out;
    std::vector<Letter> c;
    c.reserve(n);
    std::function<void()> rec = [&]() {
        if (c.size() == k && park(c) != a)
            return;
        if (c.size() == n) {
            if (!is_parking_function(c))
                return;
            std::vector<Letter> tail(c.begin() + static_cast<long>(k - overlap), c.end());
            if (park(tail) == b)
                out.add_term(ParkingFunction(c), 1);
            return;
        }
        for (Letter x = 1; x <= max_letter; ++x) {
            c.push_back(x);
            rec();
            c.pop_back();
        }
    };
    rec();
    return out;
}

} // namespace

Element product_PF(const ParkingFunction& a, const ParkingFunction& b)
{
    return glue_search(a, b, 0);
}

Element sharp_PF(const ParkingFunction& a, const ParkingFunction& b)
{
    return glue_search(a, b, 1);
}

std::optional<ParkingFunction> dprime_k(const ParkingFunction& c, std::size_t k)
{
    if (k < 1 || k >= c.size())
        throw std::out_of_range("dprime_k: k must satisfy 1 <= k < n");
    if (c.at(k) != c.at(k + 1))
        return std::nullopt;
    std::vector<Letter> rest = c.letters();
    rest.erase(rest.begin() + static_cast<long>(k));
    if (!is_parking_function(rest))
        return std::nullopt;
    return ParkingFunction(std::move(rest));
}

} // namespace sharp::pqsym
