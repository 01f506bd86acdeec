#include "sharp/expr.hpp"

#include <algorithm>
#include <cctype>

namespace sharp::expr {

namespace {

std::string name(Algebra a)
{
    return verify::algebra_name(a);
}

template <class E>
Value element(Algebra a, E e)
{
    Value v;
    v.algebra = a;
    v.data = std::move(e);
    return v;
}

Value scalar(Integer s)
{
    Value v;
    v.scalar = std::move(s);
    return v;
}

bool tree_payload(std::string_view p)
{
    if (p.empty())
        return false;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const char c = p[i];
        if (c == '(' || c == ')' || c == '.' || c == ' ')
            continue;
        if (p.substr(i, 2) == "·") {
            ++i;
            continue;
        }
        return false;
    }
    return true;
}

Algebra default_algebra(const std::string& basis, std::string_view payload, std::size_t pos)
{
    if (basis == "G" || basis == "E")
        return Algebra::FQSym;
    if (basis == "F")
        return Algebra::QSym;
    if (basis == "S")
        return !payload.empty() && payload.front() == '[' ? Algebra::FSym : Algebra::FQSym;
    if (basis == "M") {
        if (tree_payload(payload))
            return Algebra::TD;
        if ((!payload.empty() && payload.front() == '(') || payload.find('|') != std::string_view::npos)
            return Algebra::TC;
        return Algebra::WQSym;
    }
    if (basis == "R" || basis == "L" || basis == "Λ")
        return Algebra::Sym;
    if (basis == "P" || basis == "H")
        return Algebra::PBT;
    throw SyntaxError("unknown basis '" + basis + "'", pos);
}

Value make_atom(const std::string& qualifier, const std::string& basis, const std::string& payload, std::size_t pos)
{
    Algebra alg;
    if (qualifier.empty()) {
        alg = default_algebra(basis, payload, pos);
    } else {
        auto parsed = verify::parse_algebra(qualifier);
        if (!parsed)
            throw SyntaxError("unknown algebra '" + qualifier + "'", pos);
        alg = *parsed;
    }
    const std::string atom_text = (qualifier.empty() ? "" : qualifier + ".") + basis + "[" + payload + "]";
    auto unsupported = [&]() -> Value {
        throw TypeError("basis " + basis + " is not available in " + name(alg));
    };

    try {
        switch (alg) {
        case Algebra::FQSym: {
            const Permutation p(parse_letter_list(payload));
            if (basis == "G")
                return element(alg, fqsym::Element::term(p));
            if (basis == "F")
                return element(alg, fqsym::F_to_G(p));
            if (basis == "S")
                return element(alg, fqsym::S_to_G(p));
            if (basis == "E")
                return element(alg, fqsym::E_to_G(p));
            return unsupported();
        }
        case Algebra::FSym:
            if (basis != "S")
                return unsupported();
            return element(alg, fsym::Element::term(fsym::parse_tableau("[" + payload + "]")));
        case Algebra::PBT: {
            const pbt::BinaryTree t = pbt::parse_tree(payload);
            if (t.empty())
                throw std::invalid_argument("the empty tree is not a basis label");
            if (basis == "P")
                return element(alg, pbt::Element::term(t));
            if (basis == "H")
                return element(alg, pbt::from_G(fqsym::S_to_G(pbt::h_basis_label(t))));
            return unsupported();
        }
        case Algebra::Sym: {
            const sym::Composition I = sym::parse_composition(payload);
            if (basis == "R")
                return element(alg, sym::Element::term(I));
            if (basis == "S")
                return element(alg, sym::S_to_R(I));
            if (basis == "L" || basis == "Λ")
                return element(alg, sym::word_in_generators(I, sym::Basis::Lambda));
            return unsupported();
        }
        case Algebra::QSym:
            if (basis != "F")
                return unsupported();
            return element(alg, sym::Element::term(sym::parse_composition(payload)));
        case Algebra::WQSym: {
            const PackedWord u(parse_letter_list(payload));
            if (basis == "M")
                return element(alg, wqsym::Element::term(u));
            if (basis == "S")
                return element(alg, wqsym::S_to_M(u));
            if (basis == "E")
                return element(alg, wqsym::E_to_M(u));
            return unsupported();
        }
        case Algebra::TD: {
            if (basis != "M")
                return unsupported();
            const trialg::PlaneTree t = trialg::parse_plane_tree(payload);
            if (t.is_leaf())
                throw std::invalid_argument("a single leaf is not a basis label");
            return element(alg, trialg::TDElement::term(t));
        }
        case Algebra::TC:
            if (basis != "M")
                return unsupported();
            return element(alg, trialg::TCElement::term(trialg::parse_segmented(payload)));
        case Algebra::PQSym:
            if (basis != "G")
                return unsupported();
            return element(alg, pqsym::Element::term(ParkingFunction(parse_letter_list(payload))));
        }
    } catch (const TypeError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw InvalidLabel(atom_text + " in " + name(alg) + ": " + e.what());
    }
    return unsupported();
}

void require_same(const Value& a, const Value& b, const char* op)
{
    if (a.is_scalar() || b.is_scalar())
        throw TypeError(std::string("operator ") + op + " needs two algebra elements");
    if (*a.algebra != *b.algebra)
        throw TypeError(std::string("operator ") + op + " mixes " + name(*a.algebra) + " and " + name(*b.algebra));
}

Value add(const Value& a, const Value& b, bool subtract)
{
    if (a.is_scalar() && b.is_scalar())
        return scalar(subtract ? Integer(a.scalar - b.scalar) : Integer(a.scalar + b.scalar));
    require_same(a, b, subtract ? "-" : "+");
    Value out = a;
    std::visit(
        [&](auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (!std::is_same_v<T, std::monostate>) {
                const auto& y = std::get<T>(b.data);
                if (subtract)
                    x -= y;
                else
                    x += y;
            }
        },
        out.data);
    return out;
}

Value scale(Value v, const Integer& s)
{
    if (v.is_scalar())
        return scalar(v.scalar * s);
    std::visit(
        [&](auto& x) {
            if constexpr (!std::is_same_v<std::decay_t<decltype(x)>, std::monostate>)
                x *= s;
        },
        v.data);
    return v;
}

Value sharp(const Value& a, const Value& b)
{
    require_same(a, b, "#");
    const Algebra alg = *a.algebra;
    switch (alg) {
    case Algebra::FQSym:
        return element(alg, bilinear_extend(std::get<fqsym::Element>(a.data), std::get<fqsym::Element>(b.data), fqsym::sharp_G));
    case Algebra::FSym:
        return element(alg, bilinear_extend(std::get<fsym::Element>(a.data), std::get<fsym::Element>(b.data), fsym::sharp_S_t));
    case Algebra::PBT:
        return element(alg, bilinear_extend(std::get<pbt::Element>(a.data), std::get<pbt::Element>(b.data), pbt::sharp_P));
    case Algebra::Sym:
        return element(alg, bilinear_extend(std::get<sym::Element>(a.data), std::get<sym::Element>(b.data), sym::sharp_R));
    case Algebra::QSym:
        return element(alg, bilinear_extend(std::get<sym::Element>(a.data), std::get<sym::Element>(b.data), sym::qsym_sharp_F));
    case Algebra::WQSym:
        return element(alg, bilinear_extend(std::get<wqsym::Element>(a.data), std::get<wqsym::Element>(b.data), wqsym::sharp_M));
    case Algebra::TD:
        return element(alg, bilinear_extend(std::get<trialg::TDElement>(a.data), std::get<trialg::TDElement>(b.data), trialg::sharp_TD));
    case Algebra::TC:
        return element(alg, bilinear_extend(std::get<trialg::TCElement>(a.data), std::get<trialg::TCElement>(b.data), trialg::sharp_TC));
    case Algebra::PQSym:
        return element(alg, bilinear_extend(std::get<pqsym::Element>(a.data), std::get<pqsym::Element>(b.data), pqsym::sharp_PF));
    }
    throw TypeError("unknown algebra");
}

Value product(const Value& a, const Value& b)
{
    if (a.is_scalar())
        return scale(b, a.scalar);
    if (b.is_scalar())
        return scale(a, b.scalar);
    require_same(a, b, "*");
    const Algebra alg = *a.algebra;
    switch (alg) {
    case Algebra::FQSym:
        return element(alg, bilinear_extend(std::get<fqsym::Element>(a.data), std::get<fqsym::Element>(b.data), fqsym::convolution));
    case Algebra::WQSym:
        return element(alg, bilinear_extend(std::get<wqsym::Element>(a.data), std::get<wqsym::Element>(b.data), wqsym::product_M));
    case Algebra::TC:
        return element(alg, bilinear_extend(std::get<trialg::TCElement>(a.data), std::get<trialg::TCElement>(b.data), trialg::product_TC));
    case Algebra::PQSym:
        return element(alg, bilinear_extend(std::get<pqsym::Element>(a.data), std::get<pqsym::Element>(b.data), pqsym::product_PF));
    default:
        throw TypeError("the ordinary product is not implemented for " + name(alg));
    }
}

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    Value run()
    {
        Value v = expr();
        skip();
        if (i_ != s_.size())
            throw SyntaxError("unexpected character '" + std::string(1, s_[i_]) + "'", i_);
        return v;
    }

private:
    void skip()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
            ++i_;
    }

    bool at_middle_dot() const { return s_.substr(i_, 2) == "·"; }

    Value expr()
    {
        Value v = term();
        while (true) {
            skip();
            if (i_ < s_.size() && (s_[i_] == '+' || s_[i_] == '-')) {
                const bool minus = s_[i_] == '-';
                ++i_;
                v = add(v, term(), minus);
            } else {
                return v;
            }
        }
    }

    Value term()
    {
        Value v = factor();
        while (true) {
            skip();
            if (i_ < s_.size() && s_[i_] == '#') {
                ++i_;
                v = sharp(v, factor());
            } else if (i_ < s_.size() && s_[i_] == '*') {
                ++i_;
                v = product(v, factor());
            } else if (at_middle_dot()) {
                i_ += 2;
                v = product(v, factor());
            } else {
                return v;
            }
        }
    }

    Value factor()
    {
        skip();
        if (i_ >= s_.size())
            throw SyntaxError("unexpected end of input", i_);
        const char c = s_[i_];
        if (c == '-') {
            ++i_;
            return scale(factor(), -1);
        }
        if (c == '(') {
            ++i_;
            Value v = expr();
            skip();
            if (i_ >= s_.size() || s_[i_] != ')')
                throw SyntaxError("expected ')'", i_);
            ++i_;
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
                ++i_;
            return scalar(Integer(std::string(s_.substr(start, i_ - start))));
        }
        return atom();
    }

    Value atom()
    {
        const std::size_t start = i_;
        std::string ident;
        while (i_ < s_.size()) {
            if (std::isalpha(static_cast<unsigned char>(s_[i_])) || s_[i_] == '.') {
                ident += s_[i_++];
            } else if (s_.substr(i_, 2) == "Λ") {
                ident += "Λ";
                i_ += 2;
            } else {
                break;
            }
        }
        if (ident.empty())
            throw SyntaxError("expected a number, '(' or a basis atom", start);
        if (i_ >= s_.size() || s_[i_] != '[')
            throw SyntaxError("expected '[' after '" + ident + "'", i_);
        const std::size_t open = i_;
        int depth = 0;
        for (; i_ < s_.size(); ++i_) {
            if (s_[i_] == '[')
                ++depth;
            else if (s_[i_] == ']' && --depth == 0)
                break;
        }
        if (i_ >= s_.size())
            throw SyntaxError("unclosed '['", open);
        const std::string payload(s_.substr(open + 1, i_ - open - 1));
        ++i_;

        std::string qualifier;
        std::string basis = ident;
        if (const auto dot = ident.rfind('.'); dot != std::string::npos) {
            qualifier = ident.substr(0, dot);
            basis = ident.substr(dot + 1);
        }
        return make_atom(qualifier, basis, payload, start);
    }

    std::string_view s_;
    std::size_t i_ = 0;
};

std::string atom_text(Algebra alg, const Permutation& p)
{
    return alg == Algebra::FQSym ? "G" + to_string(p) : to_string(p);
}

template <class E, class F>
std::vector<std::pair<std::string, Integer>> collect(const E& e, F&& text)
{
    std::vector<std::pair<std::string, Integer>> out;
    for (const auto& [label, c] : e)
        out.emplace_back(text(label), c);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

} // namespace

Value parse_and_eval(std::string_view input)
{
    return Parser(input).run();
}

std::vector<std::pair<std::string, Integer>> terms(const Value& v)
{
    if (v.is_scalar())
        return {{"", v.scalar}};
    switch (*v.algebra) {
    case Algebra::FQSym:
        return collect(std::get<fqsym::Element>(v.data), [](const Permutation& p) { return atom_text(Algebra::FQSym, p); });
    case Algebra::FSym:
        return collect(std::get<fsym::Element>(v.data), [](const fsym::Tableau& t) { return "S" + fsym::to_string(t); });
    case Algebra::PBT:
        return collect(std::get<pbt::Element>(v.data), [](const pbt::BinaryTree& t) { return "P[" + pbt::to_string(t) + "]"; });
    case Algebra::Sym:
        return collect(std::get<sym::Element>(v.data), [](const sym::Composition& c) { return "R" + sym::to_string(c); });
    case Algebra::QSym:
        return collect(std::get<sym::Element>(v.data), [](const sym::Composition& c) { return "F" + sym::to_string(c); });
    case Algebra::WQSym:
        return collect(std::get<wqsym::Element>(v.data), [](const PackedWord& u) { return "M[" + join_letters(u.letters()) + "]"; });
    case Algebra::TD:
        return collect(std::get<trialg::TDElement>(v.data), [](const trialg::PlaneTree& t) { return "M[" + trialg::to_string(t) + "]"; });
    case Algebra::TC:
        return collect(std::get<trialg::TCElement>(v.data),
                       [](const trialg::SegmentedComposition& c) { return "M[" + trialg::to_string(c) + "]"; });
    case Algebra::PQSym:
        return collect(std::get<pqsym::Element>(v.data), [](const ParkingFunction& a) { return "PQSym.G" + to_string(a); });
    }
    return {};
}

std::string render(const Value& v)
{
    if (v.is_scalar()) {
        std::ostringstream os;
        os << v.scalar;
        return os.str();
    }
    LinComb<std::string> x;
    for (auto& [text, c] : terms(v))
        x.add_term(text, c);
    return format(x, [](const std::string& s) { return s; });
}

realization::Expansion expand_value(const Value& v, Letter N)
{
    using namespace realization;
    if (v.is_scalar())
        throw TypeError("a scalar has no word expansion");
    switch (*v.algebra) {
    case Algebra::FQSym: return expand<FQSymWords>(std::get<fqsym::Element>(v.data), N);
    case Algebra::FSym: return expand<FSymWords>(std::get<fsym::Element>(v.data), N);
    case Algebra::PBT: return expand<PBTWords>(std::get<pbt::Element>(v.data), N);
    case Algebra::Sym: return expand<SymWords>(std::get<sym::Element>(v.data), N);
    case Algebra::WQSym: return expand<WQSymWords>(std::get<wqsym::Element>(v.data), N);
    case Algebra::TD: return expand<TDWords>(std::get<trialg::TDElement>(v.data), N);
    case Algebra::TC: return expand<TCWords>(std::get<trialg::TCElement>(v.data), N);
    case Algebra::PQSym: return expand<PQSymWords>(std::get<pqsym::Element>(v.data), N);
    case Algebra::QSym: break;
    }
    throw TypeError("QSym has no word realization");
}

} // namespace sharp::expr
