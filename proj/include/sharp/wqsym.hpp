#pragma once

#include "sharp/lincomb.hpp"
#include "sharp/normal_forms.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

/// Word quasi-symmetric functions: M_u is the sum of all words packing to u.
namespace sharp::wqsym {

using Element = LinComb<PackedWord>;

/// Generalized inversions stored doubled: 2 for w_i > w_j, 1 for w_i = w_j,
/// 0 otherwise (pairs i < j).
class HalfInversionTable {
public:
    explicit HalfInversionTable(const std::vector<Letter>& w);
    explicit HalfInversionTable(const PackedWord& u) : HalfInversionTable(u.letters()) {}

    std::size_t size() const noexcept { return n_; }
    /// 1-based positions, i < j.
    int at(std::size_t i, std::size_t j) const;
    /// Pointwise domination; tables of different sizes are incomparable.
    bool leq(const HalfInversionTable& other) const;

private:
    std::size_t n_;
    std::vector<std::uint8_t> cells_;
};

/// Pseudo-permutohedron order.
bool pp_leq(const PackedWord& u, const PackedWord& v);

/// Deletes position k+1 when u_k = u_{k+1}. Requires 1 <= k < |u|.
std::optional<PackedWord> dk_M(const PackedWord& u, std::size_t k);

/// Ordinary product: packed words w = u'v' with pack(u') = u, pack(v') = v.
Element product_M(const PackedWord& u, const PackedWord& v);

/// M_u # M_v: packed w with pack(w_1..w_k) = u and pack(w_k..w_{k+l-1}) = v.
Element sharp_M(const PackedWord& u, const PackedWord& v);

PackedWord vee_pw(const PackedWord& u, const PackedWord& v);
PackedWord wedge_pw(const PackedWord& u, const PackedWord& v);
inline PackedWord sharp_S_pw(const PackedWord& u, const PackedWord& v) { return vee_pw(u, v); }
inline PackedWord sharp_E_pw(const PackedWord& u, const PackedWord& v) { return wedge_pw(u, v); }

struct PackedInterval {
    PackedWord lo;
    PackedWord hi;
    std::vector<PackedWord> members;
};

/// [u ^ v, u v v] in the pseudo-permutohedron order, by filtering all
/// packed words of the right length.
PackedInterval sharp_interval(const PackedWord& u, const PackedWord& v);

/// S^u = sum of M_v over v <= u; E^u over v >= u.
Element S_to_M(const PackedWord& u);
Element E_to_M(const PackedWord& u);

/// Free generators of (WQSym, #). Throws std::domain_error for size < 2.
bool is_nonsecable_pw(const PackedWord& u);

} // namespace sharp::wqsym
