#pragma once

#include "sharp/lincomb.hpp"
#include "sharp/normal_forms.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

/// The Loday-Ronco algebra of planar binary trees, realized inside FQSym by
/// the sylvester classes: P_T is the sum of G_sigma over the permutations
/// whose decreasing tree has shape T.
namespace sharp::pbt {

class BinaryTree {
public:
    /// The empty tree.
    BinaryTree() = default;

    static BinaryTree node(const BinaryTree& left, const BinaryTree& right);
    static BinaryTree left_comb(std::size_t n);
    static BinaryTree right_comb(std::size_t n);

    std::size_t size() const noexcept { return code_.size(); }
    bool empty() const noexcept { return code_.empty(); }
    BinaryTree left() const;
    BinaryTree right() const;

    /// Preorder list of left-subtree sizes; determines the tree.
    const std::vector<int>& code() const noexcept { return code_; }

    friend auto operator<=>(const BinaryTree&, const BinaryTree&) = default;
    friend bool operator==(const BinaryTree&, const BinaryTree&) = default;

private:
    explicit BinaryTree(std::vector<int> code) : code_(std::move(code)) {}
    std::vector<int> code_;
};

using Element = LinComb<BinaryTree>;

/// Shape of the decreasing tree: root at the largest letter, subtrees from
/// the factors on its left and right. Repeated letters are read through std.
BinaryTree decreasing_tree_shape(const std::vector<Letter>& w);
inline BinaryTree decreasing_tree_shape(const Permutation& sigma) { return decreasing_tree_shape(sigma.letters()); }

/// Binary search tree labelling; vertices are named by their labels 1..n,
/// 0 stands for a missing child.
struct LabeledTree {
    int root = 0;
    std::vector<int> left;  ///< indexed by label, entry 0 unused
    std::vector<int> right;
};

LabeledTree bst_labeling(const BinaryTree& t);
BinaryTree shape_of(const LabeledTree& t);

/// d_k(P_T): nonzero iff k is the left child of k+1 in the search tree; the
/// edge is then contracted. Requires 1 <= k < n.
std::optional<BinaryTree> dk_P(const BinaryTree& t, std::size_t k);

/// Linear extensions of the search tree read as a poset with the root on
/// top, listed as words (children before parents). P_T = sum of F over them.
std::vector<Permutation> linear_extensions(const BinaryTree& t);

/// Hook formula: n! over the product of subtree sizes.
Integer linear_extension_count(const BinaryTree& t);

/// P_T expanded in the G basis of FQSym.
LinComb<Permutation> to_G(const BinaryTree& t);

/// P_{T1} # P_{T2}, from the poset obtained by identifying the last vertex of
/// the first search tree with the first vertex of the second.
Element sharp_P(const BinaryTree& t1, const BinaryTree& t2);

std::vector<BinaryTree> all_trees(std::size_t n);

/// Tamari order, generated by right rotations (A x B) y C -> A x (B y C);
/// the left comb is the minimum.
bool tamari_leq(const BinaryTree& a, const BinaryTree& b);

/// Maximal and minimal permutations of the sylvester class of t in the weak
/// order. The maximum avoids 132 and labels the projective element H_T = S^max.
Permutation h_basis_label(const BinaryTree& t);
Permutation sylvester_min(const BinaryTree& t);

/// "(L)(R)" with "·" (or ".") for the empty tree.
std::string to_string(const BinaryTree& t);
BinaryTree parse_tree(std::string_view text);

} // namespace sharp::pbt

namespace sharp::pbt {

/// Regroups G_sigma by decreasing-tree shape. Throws NotInAlgebra on an
/// incomplete sylvester class or unequal coefficients.
Element from_G(const LinComb<Permutation>& x);

} // namespace sharp::pbt
