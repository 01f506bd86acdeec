#pragma once

#include "sharp/realization.hpp"
#include "sharp/verify.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

/// Expression language over the basis atoms of every algebra.
///
///   expr   := term (('+' | '-') term)*
///   term   := factor (('#' | '*' | '·') factor)*
///   factor := INT | atom | '(' expr ')' | '-' factor
///   atom   := [ALGEBRA '.'] BASIS '[' payload ']'
namespace sharp::expr {

using verify::Algebra;

class SyntaxError : public std::invalid_argument {
public:
    SyntaxError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at offset " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Operands from different algebras, or an operation the algebra lacks.
class TypeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Payload that fails the invariant of its label family.
class InvalidLabel : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using Data = std::variant<std::monostate, fqsym::Element, fsym::Element, pbt::Element, sym::Element, wqsym::Element,
                          trialg::TDElement, trialg::TCElement, pqsym::Element>;

/// Either an integer scalar (no algebra) or an element of one algebra,
/// stored in that algebra's canonical basis: G for FQSym and PQSym, S for
/// FSym, P for PBT, R for Sym, F for QSym, M for WQSym, TD and TC.
struct Value {
    std::optional<Algebra> algebra;
    Integer scalar = 0;
    Data data;

    bool is_scalar() const noexcept { return !algebra.has_value(); }
};

Value parse_and_eval(std::string_view input);

/// Canonical rendering; parse_and_eval(render(v)) reproduces v.
std::string render(const Value& v);

/// (atom text, coefficient) pairs in rendering order.
std::vector<std::pair<std::string, Integer>> terms(const Value& v);

/// Word expansion over {1..N}. Throws TypeError for scalars and QSym.
realization::Expansion expand_value(const Value& v, Letter N);

} // namespace sharp::expr
