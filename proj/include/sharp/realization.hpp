#pragma once

#include "sharp/enumerate.hpp"
#include "sharp/errors.hpp"
#include "sharp/fqsym.hpp"
#include "sharp/fsym.hpp"
#include "sharp/lincomb.hpp"
#include "sharp/pbt.hpp"
#include "sharp/pqsym.hpp"
#include "sharp/sym.hpp"
#include "sharp/trialg.hpp"
#include "sharp/word.hpp"
#include "sharp/wqsym.hpp"

#include <cstddef>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

/// Polynomial realizations: every basis element is the sum of the words in
/// its fiber under a labelling map. Products computed on words and regrouped
/// give an oracle independent of the combinatorial rules.
namespace sharp::realization {

using Expansion = LinComb<Word>;

/// Word-level # (u # v = d_{|u|}(uv)) extended bilinearly.
Expansion word_sharp(const Expansion& x, const Expansion& y);
Expansion word_concat(const Expansion& x, const Expansion& y);
Expansion word_dk(const Expansion& x, std::size_t k);

// Each traits struct names the label type of an algebra, the map sending a
// word to the label of its fiber, and the combinatorial rules under test.

struct FQSymWords {
    using Label = Permutation;
    static constexpr const char* name = "FQSym";
    static Label label(const std::vector<Letter>& w) { return std_word(w); }
    static std::size_t degree(const Label& a) { return a.size(); }
    static std::vector<Label> labels(std::size_t n) { return all_permutations(n); }
    static LinComb<Label> sharp(const Label& a, const Label& b) { return fqsym::sharp_G(a, b); }
    static LinComb<Label> product(const Label& a, const Label& b) { return fqsym::convolution(a, b); }
    static constexpr bool has_product = true;
    static std::string text(const Label& a) { return to_string(a); }
};

struct FSymWords {
    using Label = fsym::Tableau;
    static constexpr const char* name = "FSym";
    static Label label(const std::vector<Letter>& w) { return fsym::recording_tableau(w); }
    static std::size_t degree(const Label& a) { return a.size(); }
    static std::vector<Label> labels(std::size_t n) { return fsym::all_tableaux(n); }
    static LinComb<Label> sharp(const Label& a, const Label& b) { return fsym::sharp_S_t(a, b); }
    static LinComb<Label> product(const Label&, const Label&) { throw std::logic_error("no product rule"); }
    static constexpr bool has_product = false;
    static std::string text(const Label& a) { return fsym::to_string(a); }
};

struct PBTWords {
    using Label = pbt::BinaryTree;
    static constexpr const char* name = "PBT";
    static Label label(const std::vector<Letter>& w) { return pbt::decreasing_tree_shape(w); }
    static std::size_t degree(const Label& a) { return a.size(); }
    static std::vector<Label> labels(std::size_t n) { return pbt::all_trees(n); }
    static LinComb<Label> sharp(const Label& a, const Label& b) { return pbt::sharp_P(a, b); }
    static LinComb<Label> product(const Label&, const Label&) { throw std::logic_error("no product rule"); }
    static constexpr bool has_product = false;
    static std::string text(const Label& a) { return pbt::to_string(a); }
};

struct SymWords {
    using Label = sym::Composition;
    static constexpr const char* name = "Sym";
    static Label label(const std::vector<Letter>& w) { return sym::descent_composition(w); }
    static std::size_t degree(const Label& a) { return static_cast<std::size_t>(sym::degree(a)); }
    static std::vector<Label> labels(std::size_t n) { return all_compositions(static_cast<int>(n)); }
    static LinComb<Label> sharp(const Label& a, const Label& b) { return LinComb<Label>::term(sym::sharp_R(a, b)); }
    static LinComb<Label> product(const Label&, const Label&) { throw std::logic_error("no product rule"); }
    static constexpr bool has_product = false;
    static std::string text(const Label& a) { return sym::to_string(a); }
};

struct WQSymWords {
    using Label = PackedWord;
    static constexpr const char* name = "WQSym";
    static Label label(const std::vector<Letter>& w) { return pack(w); }
    static std::size_t degree(const Label& a) { return a.size(); }
    static std::vector<Label> labels(std::size_t n) { return all_packed_words(n); }
    static LinComb<Label> sharp(const Label& a, const Label& b) { return wqsym::sharp_M(a, b); }
    static LinComb<Label> product(const Label& a, const Label& b) { return wqsym::product_M(a, b); }
    static constexpr bool has_product = true;
    static std::string text(const Label& a) { return to_string(a); }
};

struct TDWords {
    using Label = trialg::PlaneTree;
    static constexpr const char* name = "TD";
    static Label label(const std::vector<Letter>& w) { return trialg::plane_tree_of_word(w); }
    static std::size_t degree(const Label& a) { return a.sectors(); }
    static std::vector<Label> labels(std::size_t n) { return trialg::all_plane_trees(n); }
    static LinComb<Label> sharp(const Label& a, const Label& b) { return trialg::sharp_TD(a, b); }
    static LinComb<Label> product(const Label&, const Label&) { throw std::logic_error("no product rule"); }
    static constexpr bool has_product = false;
    static std::string text(const Label& a) { return trialg::to_string(a); }
};

struct TCWords {
    using Label = trialg::SegmentedComposition;
    static constexpr const char* name = "TC";
    static Label label(const std::vector<Letter>& w) { return trialg::segmented_of_word(w); }
    static std::size_t degree(const Label& a) { return a.degree(); }
    static std::vector<Label> labels(std::size_t n) { return trialg::all_segmented(n); }
    static LinComb<Label> sharp(const Label& a, const Label& b) { return LinComb<Label>::term(trialg::sharp_TC(a, b)); }
    static LinComb<Label> product(const Label& a, const Label& b) { return trialg::product_TC(a, b); }
    static constexpr bool has_product = true;
    static std::string text(const Label& a) { return trialg::to_string(a); }
};

struct PQSymWords {
    using Label = ParkingFunction;
    static constexpr const char* name = "PQSym";
    static Label label(const std::vector<Letter>& w) { return park(w); }
    static std::size_t degree(const Label& a) { return a.size(); }
    static std::vector<Label> labels(std::size_t n) { return all_parking_functions(n); }
    static LinComb<Label> sharp(const Label& a, const Label& b) { return pqsym::sharp_PF(a, b); }
    static LinComb<Label> product(const Label& a, const Label& b) { return pqsym::product_PF(a, b); }
    static constexpr bool has_product = true;
    static std::string text(const Label& a) { return to_string(a); }
};

/// All words of length n over {1..N}, grouped by label. Built once per
/// (n, N) and shared.
template <class Tr>
const std::map<typename Tr::Label, std::vector<Word>>& fiber_table(std::size_t n, Letter N)
{
    using Table = std::map<typename Tr::Label, std::vector<Word>>;
    static std::mutex guard;
    static std::map<std::pair<std::size_t, Letter>, Table> cache;
    std::lock_guard<std::mutex> lock(guard);
    const auto key = std::make_pair(n, N);
    auto it = cache.find(key);
    if (it != cache.end())
        return it->second;
    Table table;
    for_each_word(n, N, [&](const std::vector<Letter>& w) { table[Tr::label(w)].emplace_back(w); });
    return cache.emplace(key, std::move(table)).first->second;
}

/// Sum of the words of the fiber of `label` over the alphabet {1..N}.
template <class Tr>
Expansion expand(const typename Tr::Label& label, Letter N)
{
    if (N < 1)
        throw std::out_of_range("expand: the alphabet size must be at least 1");
    Expansion out;
    const auto& table = fiber_table<Tr>(Tr::degree(label), N);
    auto it = table.find(label);
    if (it != table.end())
        for (const auto& w : it->second)
            out.add_term(w, 1);
    return out;
}

template <class Tr>
Expansion expand(const LinComb<typename Tr::Label>& x, Letter N)
{
    Expansion out;
    for (const auto& [label, c] : x)
        out += c * expand<Tr>(label, N);
    return out;
}

/// Inverse of expand over {1..N}. Throws NotInAlgebra unless e is a
/// combination of complete fibers.
template <class Tr>
LinComb<typename Tr::Label> regroup(const Expansion& e, Letter N)
{
    using Label = typename Tr::Label;
    LinComb<Label> out;
    if (e.empty())
        return out;
    const std::size_t n = e.begin()->first.size();
    std::map<Label, std::pair<Integer, std::size_t>> seen;
    for (const auto& [w, c] : e) {
        if (w.size() != n)
            throw NotInAlgebra(std::string("regroup in ") + Tr::name + ": words of different lengths");
        if (w.max_letter() > N)
            throw std::invalid_argument("regroup: letter outside the alphabet");
        Label label = Tr::label(w.letters());
        auto [it, fresh] = seen.try_emplace(label, c, 0);
        if (!fresh && it->second.first != c)
            throw NotInAlgebra(std::string("regroup in ") + Tr::name + ": unequal coefficients in the fiber of "
                               + Tr::text(label));
        ++it->second.second;
    }
    const auto& table = fiber_table<Tr>(n, N);
    for (const auto& [label, info] : seen) {
        if (table.at(label).size() != info.second)
            throw NotInAlgebra(std::string("regroup in ") + Tr::name + ": incomplete fiber of " + Tr::text(label));
        out.add_term(label, info.first);
    }
    return out;
}

/// Expand both at N = deg(a) + deg(b) - 1, take word-level #, regroup.
template <class Tr>
LinComb<typename Tr::Label> oracle_sharp(const typename Tr::Label& a, const typename Tr::Label& b)
{
    const auto N = static_cast<Letter>(Tr::degree(a) + Tr::degree(b) - 1);
    return regroup<Tr>(word_sharp(expand<Tr>(a, N), expand<Tr>(b, N)), N);
}

/// Expand both at N = deg(a) + deg(b), concatenate, regroup.
template <class Tr>
LinComb<typename Tr::Label> oracle_product(const typename Tr::Label& a, const typename Tr::Label& b)
{
    const auto N = static_cast<Letter>(Tr::degree(a) + Tr::degree(b));
    return regroup<Tr>(word_concat(expand<Tr>(a, N), expand<Tr>(b, N)), N);
}

/// QSym has no word realization here; its # product is checked by duality
/// with Sym: the coefficient of F_K in F_I # F_J is the coefficient of
/// R_I (x) R_J in the coproduct of R_K.
sym::Element qsym_duality_sharp(const sym::Composition& I, const sym::Composition& J);

} // namespace sharp::realization
