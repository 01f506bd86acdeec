#pragma once

#include "sharp/lincomb.hpp"
#include "sharp/normal_forms.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

/// Noncommutative symmetric functions under # (elements kept in the ribbon
/// basis R) and their dual, quasi-symmetric functions in the F basis.
namespace sharp::sym {

using Composition = std::vector<int>;
using BinaryCode = std::vector<int>;

using Element = LinComb<Composition>;
using Tensor = LinComb<std::pair<Composition, Composition>>;

/// Throws std::invalid_argument on an empty composition or a part < 1.
void validate(const Composition& c);
int degree(const Composition& c);

/// Descent composition of a word: w_i > w_{i+1} ends a part. R_I is the sum
/// of all words with descent composition I.
Composition descent_composition(const std::vector<Letter>& w);

/// Gluing of the last part of I with the first part of J minus one; the
/// rule for both R_I # R_J and S^I # S^J.
Composition glue(const Composition& I, const Composition& J);
inline Composition sharp_R(const Composition& I, const Composition& J) { return glue(I, J); }
inline Composition sharp_S_I(const Composition& I, const Composition& J) { return glue(I, J); }

/// b(I) = 0^{i_1-1} 1 0^{i_2-1} 1 ... 0^{i_r-1}, of length n-1.
BinaryCode binary_code(const Composition& I);
Composition from_binary_code(const BinaryCode& b);

enum class Basis { R, S, Lambda };

/// Reads b(I) as a #-product of the generators x = R_2 and y = R_11,
/// substituting 0 -> x|x|y and 1 -> y|x+y|x+y for R, S and Lambda. The
/// result is expressed in the R basis.
Element word_in_generators(const Composition& I, Basis basis);

/// S^I = sum of R_J over the compositions J coarser than I.
Element S_to_R(const Composition& I);
/// R_J = sum over K coarser than J of (-1)^{l(J)-l(K)} S^K, as S-labels.
Element R_to_S(const Composition& J);

/// Coproduct for which x and y are primitive, on R_I: each letter of b(I)
/// goes to the left or to the right factor.
Tensor coproduct_R(const Composition& I);
Tensor coproduct_R(const Element& x);

/// Sum of binom(n-1, i-1) S_i (x) S_{n+1-i}, labels in the S basis.
Tensor coproduct_S_n(int n);

/// Coefficient of the unit R_1.
Integer counit(const Element& x);

/// F_I # F_J in QSym: shuffles of b(I) and b(J), with multiplicities.
Element qsym_sharp_F(const Composition& I, const Composition& J);

/// Shuffle product of two binary words, with multiplicities.
LinComb<BinaryCode> shuffle(const BinaryCode& u, const BinaryCode& v);

/// "[1,5,1,2]"
std::string to_string(const Composition& c);
Composition parse_composition(std::string_view text);

} // namespace sharp::sym
