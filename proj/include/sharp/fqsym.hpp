#pragma once

#include "sharp/lincomb.hpp"
#include "sharp/normal_forms.hpp"

#include <cstddef>
#include <optional>
#include <vector>

/// Free quasi-symmetric functions. Elements are stored in the G basis,
/// G_sigma being the sum of all words whose standardization is sigma.
namespace sharp::fqsym {

using Element = LinComb<Permutation>;

/// Inversions (i, j), i < j, sigma_i > sigma_j, as a strict upper triangle
/// bit matrix over positions.
class InversionSet {
public:
    explicit InversionSet(const std::vector<Letter>& w);
    explicit InversionSet(const Permutation& p) : InversionSet(p.letters()) {}

    std::size_t size() const noexcept { return n_; }
    /// 1-based positions.
    bool contains(std::size_t i, std::size_t j) const;
    std::size_t count() const;
    bool subset_of(const InversionSet& other) const;

private:
    std::size_t n_;
    std::vector<bool> bits_;
};

/// Left weak order: Inv(a) is contained in Inv(b).
bool weak_leq(const Permutation& a, const Permutation& b);

/// d_k on G_sigma: std(sigma without position k) when sigma_{k+1} = sigma_k + 1.
std::optional<Permutation> dk_G(const Permutation& sigma, std::size_t k);

/// Inverse of the bijection {sigma in S_n : sigma_{k+1} = sigma_k + 1} -> S_{n-1}.
/// Requires 1 <= k <= |tau|.
Permutation dk_G_inverse(const Permutation& tau, std::size_t k);

/// d_k on F_sigma: deletes k+1 when it immediately follows k, then standardizes.
std::optional<Permutation> dk_F(const Permutation& sigma, std::size_t k);

/// Ordinary product G_alpha G_beta: the convolution alpha * beta.
Element convolution(const Permutation& alpha, const Permutation& beta);

/// G_alpha # G_beta: all nu with std(nu_1..nu_k) = alpha and std(nu_k..nu_{k+l-1}) = beta.
Element sharp_G(const Permutation& alpha, const Permutation& beta);

/// The same product read in the F basis (F_sigma = G_{sigma^-1}); the
/// result is keyed by F-labels.
Element sharp_F(const Permutation& alpha, const Permutation& beta);

/// Two-phase relabelings defining the join and meet; they only use
/// comparisons, so they apply verbatim to packed words as well.
std::vector<Letter> vee_scan(const std::vector<Letter>& a, const std::vector<Letter>& b);
std::vector<Letter> wedge_scan(const std::vector<Letter>& a, const std::vector<Letter>& b);

Permutation vee(const Permutation& alpha, const Permutation& beta);
Permutation wedge(const Permutation& alpha, const Permutation& beta);

struct WeakInterval {
    Permutation lo;
    Permutation hi;
    std::vector<Permutation> members;
};

/// [alpha ^ beta, alpha v beta] in the left weak order, members listed in
/// lexicographic order.
WeakInterval sharp_interval(const Permutation& alpha, const Permutation& beta);

/// Multiplicative bases: S^a # S^b = S^{a v b}, E^a # E^b = E^{a ^ b}.
inline Permutation sharp_S(const Permutation& a, const Permutation& b) { return vee(a, b); }
inline Permutation sharp_E(const Permutation& a, const Permutation& b) { return wedge(a, b); }

/// S^sigma = sum of G_tau over tau <= sigma; E^sigma over tau >= sigma.
Element S_to_G(const Permutation& sigma);
Element E_to_G(const Permutation& sigma);
/// F_sigma = G_{sigma^-1}.
inline Element F_to_G(const Permutation& sigma) { return Element::term(sigma.inverse()); }

/// Free generators of (FQSym, #). All three throw std::domain_error for size < 2.
bool is_nonsecable(const Permutation& alpha);
bool is_noninterval(const Permutation& alpha);
bool is_non_internal_interval(const Permutation& alpha);

/// The unique element of sigma # tau whose first |sigma| values form an interval.
Permutation bullet(const Permutation& sigma, const Permutation& tau);

/// Positions p, 2 <= p < n, where {alpha_1..alpha_p} is an interval of integers.
std::vector<std::size_t> interval_breakpoints(const Permutation& alpha);

/// Maximal bullet decomposition; factors are non-interval permutations.
/// Empty for the size-1 permutation (the unit).
std::vector<Permutation> bullet_factorize(const Permutation& alpha);

/// Number of factors of the maximal bullet decomposition.
std::size_t interval_factor_count(const Permutation& alpha);

} // namespace sharp::fqsym
