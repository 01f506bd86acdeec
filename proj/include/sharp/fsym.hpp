#pragma once

#include "sharp/lincomb.hpp"
#include "sharp/normal_forms.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

/// Free symmetric functions: the coplactic classes S_t inside FQSym.
///
/// Tableaux use the French convention. Rows are stored bottom-up, so row 0
/// is the longest one and columns increase upwards.
namespace sharp::fsym {

using Rows = std::vector<std::vector<int>>;

class Tableau {
public:
    /// Throws std::invalid_argument unless the rows form a standard Young
    /// tableau with entries 1..n.
    explicit Tableau(Rows rows);

    std::size_t size() const noexcept { return size_; }
    const Rows& rows() const noexcept { return rows_; }
    std::vector<std::size_t> shape() const;

    friend auto operator<=>(const Tableau& a, const Tableau& b) { return a.rows_ <=> b.rows_; }
    friend bool operator==(const Tableau& a, const Tableau& b) { return a.rows_ == b.rows_; }

private:
    Rows rows_;
    std::size_t size_ = 0;
};

/// Skew tableau: 0 marks a cell of the removed inner shape.
struct SkewTableau {
    Rows rows;

    friend bool operator==(const SkewTableau&, const SkewTableau&) = default;
};

using Element = LinComb<Tableau>;

struct RSKPair {
    Tableau P;
    Tableau Q;
};

/// Row-insertion Robinson-Schensted.
RSKPair rsk(const Permutation& sigma);

/// Insertion tableau of an arbitrary word (semistandard when letters repeat).
Rows insertion_rows(const std::vector<Letter>& w);

/// Recording tableau Q(w); Q(w) = Q(std(w)).
Tableau recording_tableau(const std::vector<Letter>& w);

Permutation inverse_rsk(const Tableau& P, const Tableau& Q);

/// Standard tableaux of a partition shape (row lengths, weakly decreasing).
std::vector<Tableau> tableaux_of_shape(const std::vector<std::size_t>& shape);
std::vector<Tableau> all_tableaux(std::size_t n);

/// Number of standard tableaux of the shape, by the hook length formula.
Integer count_of_shape(const std::vector<std::size_t>& shape);

/// std(u k v) when sigma = u k (k+1) v, zero otherwise; equals d_k(sigma^-1)^-1.
std::optional<Permutation> dbar_k(const Permutation& sigma, std::size_t k);

/// Inserts k+1 right after k (shifting larger values). Requires 1 <= k <= |tau|.
Permutation dbar_k_inverse(const Permutation& tau, std::size_t k);

/// Cells of T with entries in `values`, standardized to 1..|values|.
/// Throws std::domain_error unless `values` is an interval inside 1..|T|.
SkewTableau restrict(const Tableau& T, const std::vector<int>& values);

/// Rows read from the top row down, each left to right.
std::vector<Letter> reading_word(const SkewTableau& sk);

/// Straight-shape tableau plactically equivalent to sk.
Tableau rectify(const SkewTableau& sk);

/// S_{t1} # S_{t2}: tableaux T with T|{1..k} = t1 and T|{k..k+l-1} equivalent to t2.
Element sharp_S_t(const Tableau& t1, const Tableau& t2);

/// S_t = sum of F_sigma over P(sigma) = t.
LinComb<Permutation> to_F(const Tableau& t);

/// Regroups a combination of F_sigma by P-symbol. Throws NotInAlgebra when
/// some class is incomplete or carries unequal coefficients.
Element from_F(const LinComb<Permutation>& x);

/// Same product computed inside FQSym and regrouped.
Element sharp_via_F(const Tableau& t1, const Tableau& t2);

/// "[[1,2,3],[4]]", rows bottom-up.
std::string to_string(const Tableau& t);
std::string to_string(const SkewTableau& sk);
Tableau parse_tableau(std::string_view text);

} // namespace sharp::fsym
