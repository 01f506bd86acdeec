#pragma once

#include "sharp/lincomb.hpp"
#include "sharp/normal_forms.hpp"

#include <cstddef>
#include <optional>

/// Parking quasi-symmetric functions: G_a is the sum of all words whose
/// parkization is a.
namespace sharp::pqsym {

using Element = LinComb<ParkingFunction>;

/// G_a G_b: parking functions c = uv with park(u) = a and park(v) = b.
Element product_PF(const ParkingFunction& a, const ParkingFunction& b);

/// G_a # G_b: parking functions c of length k+l-1 with park(c_1..c_k) = a
/// and park(c_k..c_{k+l-1}) = b.
Element sharp_PF(const ParkingFunction& a, const ParkingFunction& b);

/// d'_k: deletes position k+1 when c_k = c_{k+1} and the result is still a
/// parking function. Requires 1 <= k < |c|.
std::optional<ParkingFunction> dprime_k(const ParkingFunction& c, std::size_t k);

} // namespace sharp::pqsym
