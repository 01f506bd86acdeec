#pragma once

#include "sharp/lincomb.hpp"
#include "sharp/normal_forms.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

/// Two trialgebras living inside WQSym: the free tridendriform algebra TD on
/// plane trees and the free cubical algebra TC on segmented compositions.
namespace sharp::trialg {

/// Ordered rooted tree, every internal vertex having at least two children.
/// A tree with n+1 leaves has n sectors (gaps between consecutive children).
class PlaneTree {
public:
    /// The single leaf (tree of the empty word).
    PlaneTree() : code_{0} {}
    /// Throws std::invalid_argument if a child count is 1 or the list is not
    /// a complete preorder encoding.
    explicit PlaneTree(std::vector<int> preorder_child_counts);

    static PlaneTree graft(const std::vector<PlaneTree>& children);
    static PlaneTree corolla(std::size_t sectors);

    bool is_leaf() const noexcept { return code_.size() == 1; }
    std::size_t sectors() const;
    std::vector<PlaneTree> children() const;
    const std::vector<int>& code() const noexcept { return code_; }

    friend auto operator<=>(const PlaneTree&, const PlaneTree&) = default;
    friend bool operator==(const PlaneTree&, const PlaneTree&) = default;

private:
    std::vector<int> code_;
};

using TDElement = LinComb<PlaneTree>;

/// Grafting at the occurrences of the maximal letter, recursively.
PlaneTree plane_tree_of_word(const std::vector<Letter>& w);

/// Same construction, also returning the letter carried by each internal
/// vertex (in preorder).
struct ValuedPlaneTree {
    PlaneTree tree;
    std::vector<Letter> vertex_values;
};
ValuedPlaneTree valued_plane_tree(const std::vector<Letter>& w);

/// Left-to-right reading of the sectors, each reporting its vertex value.
std::vector<Letter> sector_reading(const ValuedPlaneTree& t);

/// Preorder index of the internal vertex owning each sector, 1..n.
std::vector<std::size_t> sector_owners(const PlaneTree& t);

/// d_k(M_T): nonzero iff sectors k and k+1 hang on the same vertex; they are
/// then merged. Requires 1 <= k < sectors.
std::optional<PlaneTree> dk_tree(const PlaneTree& t, std::size_t k);

std::vector<PlaneTree> all_plane_trees(std::size_t sectors);

/// M_T expanded over packed words, and the inverse regrouping (throws
/// NotInAlgebra on an incomplete fiber).
LinComb<PackedWord> to_M(const PlaneTree& t);
TDElement from_M(const LinComb<PackedWord>& x);

/// M_{T1} # M_{T2}, computed through WQSym.
TDElement sharp_TD(const PlaneTree& t1, const PlaneTree& t2);

/// Nested parentheses with "·" for a leaf, e.g. "(·(···)·)"; "." is also
/// accepted on input.
std::string to_string(const PlaneTree& t);
PlaneTree parse_plane_tree(std::string_view text);

/// Segmented composition, stored as its sequence of signs over '<', '=', '>':
/// '<' inside a part, '=' for a comma, '>' for a bar.
class SegmentedComposition {
public:
    /// Degree 1, the composition (1).
    SegmentedComposition() = default;
    explicit SegmentedComposition(std::string signs);

    std::size_t degree() const noexcept { return signs_.size() + 1; }
    const std::string& signs() const noexcept { return signs_; }

    friend auto operator<=>(const SegmentedComposition&, const SegmentedComposition&) = default;
    friend bool operator==(const SegmentedComposition&, const SegmentedComposition&) = default;

private:
    std::string signs_;
};

using TCElement = LinComb<SegmentedComposition>;

/// Comparison signs between consecutive letters.
SegmentedComposition segmented_of_word(const std::vector<Letter>& w);

/// Parts and separators (',' or '|').
struct PartsView {
    std::vector<int> parts;
    std::string separators;
};
PartsView parts_of(const SegmentedComposition& c);
SegmentedComposition from_parts(const std::vector<int>& parts, const std::string& separators);

/// Ordinary product: the three ways of joining, glued / ',' / '|'.
TCElement product_TC(const SegmentedComposition& a, const SegmentedComposition& b);

/// M_I # M_J: concatenation of the sign sequences.
SegmentedComposition sharp_TC(const SegmentedComposition& a, const SegmentedComposition& b);

/// The same product through part gluing: last part of a plus first part of
/// b minus one; a vanishing first part hands its separator to the junction.
SegmentedComposition sharp_TC_glue(const SegmentedComposition& a, const SegmentedComposition& b);

/// d_k(M_I): nonzero iff sign k is '=', which is then deleted.
/// Requires 1 <= k < degree.
std::optional<SegmentedComposition> dk_TC(const SegmentedComposition& c, std::size_t k);

std::vector<SegmentedComposition> all_segmented(std::size_t degree);

/// The degree-2 generators M_2, M_{1,1}, M_{1|1}.
std::vector<SegmentedComposition> tc_generators();

/// Factors over tc_generators(), in product order; the empty list for (1).
std::vector<SegmentedComposition> tc_factorize(const SegmentedComposition& c);

/// Unique factorization and 3^(n-1) labels for every degree up to max_degree.
bool tc_generators_check(std::size_t max_degree);

/// "(2,1|2|1,2)"
std::string to_string(const SegmentedComposition& c);
SegmentedComposition parse_segmented(std::string_view text);

} // namespace sharp::trialg
