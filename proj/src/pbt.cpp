#include "sharp/pbt.hpp"

#include "sharp/enumerate.hpp"
#include "sharp/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace sharp::pbt {

BinaryTree BinaryTree::node(const BinaryTree& left, const BinaryTree& right)
{
    std::vector<int> code;
    code.reserve(left.size() + right.size() + 1);
    code.push_back(static_cast<int>(left.size()));
    code.insert(code.end(), left.code_.begin(), left.code_.end());
    code.insert(code.end(), right.code_.begin(), right.code_.end());
    return BinaryTree(std::move(code));
}

BinaryTree BinaryTree::left_comb(std::size_t n)
{
    BinaryTree t;
    for (std::size_t i = 0; i < n; ++i)
        t = node(t, BinaryTree());
    return t;
}

BinaryTree BinaryTree::right_comb(std::size_t n)
{
    BinaryTree t;
    for (std::size_t i = 0; i < n; ++i)
        t = node(BinaryTree(), t);
    return t;
}

BinaryTree BinaryTree::left() const
{
    if (empty())
        throw std::logic_error("left() of the empty tree");
    return BinaryTree(std::vector<int>(code_.begin() + 1, code_.begin() + 1 + code_[0]));
}

BinaryTree BinaryTree::right() const
{
    if (empty())
        throw std::logic_error("right() of the empty tree");
    return BinaryTree(std::vector<int>(code_.begin() + 1 + code_[0], code_.end()));
}

namespace {

BinaryTree shape_rec(const std::vector<Letter>& w, std::size_t lo, std::size_t hi)
{
    if (lo == hi)
        return BinaryTree();
    // Among equal maxima the rightmost is the largest after standardization.
    std::size_t m = lo;
    for (std::size_t i = lo; i < hi; ++i)
        if (w[i] >= w[m])
            m = i;
    return BinaryTree::node(shape_rec(w, lo, m), shape_rec(w, m + 1, hi));
}

int label_rec(const BinaryTree& t, int offset, LabeledTree& out)
{
    if (t.empty())
        return 0;
    const BinaryTree l = t.left();
    const int label = offset + static_cast<int>(l.size()) + 1;
    out.left[static_cast<std::size_t>(label)] = label_rec(l, offset, out);
    out.right[static_cast<std::size_t>(label)] = label_rec(t.right(), label, out);
    return label;
}

BinaryTree shape_from(const LabeledTree& t, int v)
{
    if (v == 0)
        return BinaryTree();
    return BinaryTree::node(shape_from(t, t.left[static_cast<std::size_t>(v)]),
                            shape_from(t, t.right[static_cast<std::size_t>(v)]));
}

/// Words listing 1..n in which every vertex comes after all of its children.
std::vector<Permutation> extensions(const std::vector<std::vector<int>>& children)
{
    const std::size_t n = children.size() - 1;
    std::vector<int> missing(n + 1, 0);
    std::vector<std::vector<int>> parents(n + 1);
    for (std::size_t v = 1; v <= n; ++v)
        for (int c : children[v]) {
            ++missing[v];
            parents[static_cast<std::size_t>(c)].push_back(static_cast<int>(v));
        }
    std::vector<Permutation> out;
    std::vector<Letter> word;
    std::vector<bool> used(n + 1, false);
    std::function<void()> rec = [&]() {
        if (word.size() == n) {
            out.emplace_back(word);
            return;
        }
        for (std::size_t v = 1; v <= n; ++v) {
            if (used[v] || missing[v] != 0)
                continue;
            used[v] = true;
            word.push_back(static_cast<Letter>(v));
            for (int p : parents[v])
                --missing[static_cast<std::size_t>(p)];
            rec();
            for (int p : parents[v])
                ++missing[static_cast<std::size_t>(p)];
            word.pop_back();
            used[v] = false;
        }
    };
    rec();
    return out;
}

std::vector<std::vector<int>> children_of(const LabeledTree& t, std::size_t n, int shift)
{
    std::vector<std::vector<int>> ch(n + 1);
    const std::size_t m = t.left.size() - 1;
    for (std::size_t v = 1; v <= m; ++v) {
        auto& dst = ch[v + static_cast<std::size_t>(shift)];
        if (t.left[v])
            dst.push_back(t.left[v] + shift);
        if (t.right[v])
            dst.push_back(t.right[v] + shift);
    }
    return ch;
}

void subtree_sizes(const BinaryTree& t, Integer& product)
{
    if (t.empty())
        return;
    product *= static_cast<unsigned>(t.size());
    subtree_sizes(t.left(), product);
    subtree_sizes(t.right(), product);
}

} // namespace

BinaryTree decreasing_tree_shape(const std::vector<Letter>& w)
{
    return shape_rec(w, 0, w.size());
}

LabeledTree bst_labeling(const BinaryTree& t)
{
    LabeledTree out;
    out.left.assign(t.size() + 1, 0);
    out.right.assign(t.size() + 1, 0);
    out.root = label_rec(t, 0, out);
    return out;
}

BinaryTree shape_of(const LabeledTree& t)
{
    return shape_from(t, t.root);
}

std::optional<BinaryTree> dk_P(const BinaryTree& t, std::size_t k)
{
    if (k < 1 || k >= t.size())
        throw std::out_of_range("dk_P: k must satisfy 1 <= k < n");
    LabeledTree lt = bst_labeling(t);
    const int kk = static_cast<int>(k);
    if (lt.left[k + 1] != kk)
        return std::nullopt;
    lt.left[k + 1] = lt.left[k];
    return shape_of(lt);
}

std::vector<Permutation> linear_extensions(const BinaryTree& t)
{
    return extensions(children_of(bst_labeling(t), t.size(), 0));
}

Integer linear_extension_count(const BinaryTree& t)
{
    Integer sizes = 1;
    subtree_sizes(t, sizes);
    return factorial(static_cast<unsigned>(t.size())) / sizes;
}

LinComb<Permutation> to_G(const BinaryTree& t)
{
    LinComb<Permutation> out;
    for (const auto& pi : linear_extensions(t))
        out.add_term(pi.inverse(), 1);
    return out;
}

Element sharp_P(const BinaryTree& t1, const BinaryTree& t2)
{
    const std::size_t k = t1.size();
    const std::size_t n = k + t2.size() - 1;
    auto ch = children_of(bst_labeling(t1), n, 0);
    const auto ch2 = children_of(bst_labeling(t2), n, static_cast<int>(k) - 1);
    for (std::size_t v = k; v <= n; ++v)
        ch[v].insert(ch[v].end(), ch2[v].begin(), ch2[v].end());

    std::map<BinaryTree, Integer> counts;
    for (const auto& pi : extensions(ch))
        ++counts[decreasing_tree_shape(pi.inverse())];

    Element out;
    for (const auto& [shape, c] : counts) {
        const Integer full = linear_extension_count(shape);
        if (c % full != 0)
            throw NotInAlgebra("sharp_P: incomplete sylvester class " + to_string(shape));
        out.add_term(shape, c / full);
    }
    return out;
}

std::vector<BinaryTree> all_trees(std::size_t n)
{
    std::vector<std::vector<BinaryTree>> by_size(n + 1);
    by_size[0].push_back(BinaryTree());
    for (std::size_t m = 1; m <= n; ++m)
        for (std::size_t l = 0; l < m; ++l)
            for (const auto& a : by_size[l])
                for (const auto& b : by_size[m - 1 - l])
                    by_size[m].push_back(BinaryTree::node(a, b));
    auto out = by_size[n];
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void right_rotations(const BinaryTree& t, std::vector<BinaryTree>& out)
{
    if (t.empty())
        return;
    const BinaryTree l = t.left();
    const BinaryTree r = t.right();
    if (!l.empty())
        out.push_back(BinaryTree::node(l.left(), BinaryTree::node(l.right(), r)));
    std::vector<BinaryTree> sub;
    right_rotations(l, sub);
    for (const auto& s : sub)
        out.push_back(BinaryTree::node(s, r));
    sub.clear();
    right_rotations(r, sub);
    for (const auto& s : sub)
        out.push_back(BinaryTree::node(l, s));
}

using UpSets = std::map<BinaryTree, std::set<BinaryTree>>;

const UpSets& up_sets(std::size_t n)
{
    static std::mutex guard;
    static std::map<std::size_t, UpSets> cache;
    std::lock_guard<std::mutex> lock(guard);
    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;
    UpSets ups;
    std::function<const std::set<BinaryTree>&(const BinaryTree&)> up = [&](const BinaryTree& t) -> const std::set<BinaryTree>& {
        auto found = ups.find(t);
        if (found != ups.end())
            return found->second;
        std::set<BinaryTree> s{t};
        std::vector<BinaryTree> next;
        right_rotations(t, next);
        for (const auto& u : next) {
            const auto& su = up(u);
            s.insert(su.begin(), su.end());
        }
        return ups.emplace(t, std::move(s)).first->second;
    };
    for (const auto& t : all_trees(n))
        up(t);
    return cache.emplace(n, std::move(ups)).first->second;
}

Permutation sylvester_extreme(const BinaryTree& t, bool maximum)
{
    std::vector<Letter> out(t.size());
    std::function<void(const BinaryTree&, std::size_t, Letter)> fill = [&](const BinaryTree& s, std::size_t pos, Letter low) {
        if (s.empty())
            return;
        const BinaryTree l = s.left();
        const BinaryTree r = s.right();
        const std::size_t root_pos = pos + l.size();
        out[root_pos] = low + static_cast<Letter>(s.size()) - 1;
        if (maximum) {
            fill(l, pos, low + static_cast<Letter>(r.size()));
            fill(r, root_pos + 1, low);
        } else {
            fill(l, pos, low);
            fill(r, root_pos + 1, low + static_cast<Letter>(l.size()));
        }
    };
    fill(t, 0, 1);
    return Permutation(std::move(out));
}

} // namespace

bool tamari_leq(const BinaryTree& a, const BinaryTree& b)
{
    if (a.size() != b.size())
        return false;
    const auto& ups = up_sets(a.size());
    return ups.at(a).count(b) != 0;
}

Permutation h_basis_label(const BinaryTree& t)
{
    return sylvester_extreme(t, true);
}

Permutation sylvester_min(const BinaryTree& t)
{
    return sylvester_extreme(t, false);
}

std::string to_string(const BinaryTree& t)
{
    if (t.empty())
        return "·";
    return "(" + to_string(t.left()) + ")(" + to_string(t.right()) + ")";
}

BinaryTree parse_tree(std::string_view text)
{
    std::size_t i = 0;
    auto fail = [&](const char* what) -> BinaryTree {
        throw std::invalid_argument(std::string("tree text: ") + what + " at offset " + std::to_string(i));
    };
    auto skip = [&] {
        while (i < text.size() && text[i] == ' ')
            ++i;
    };
    std::function<BinaryTree()> tree = [&]() -> BinaryTree {
        skip();
        if (i < text.size() && text[i] == '.') {
            ++i;
            return BinaryTree();
        }
        if (text.substr(i, 2) == "·") {
            i += 2;
            return BinaryTree();
        }
        if (i >= text.size() || text[i] != '(')
            return fail("expected '(' or '·'");
        ++i;
        BinaryTree l = tree();
        skip();
        if (i >= text.size() || text[i] != ')')
            return fail("expected ')'");
        ++i;
        skip();
        if (i >= text.size() || text[i] != '(')
            return fail("expected '('");
        ++i;
        BinaryTree r = tree();
        skip();
        if (i >= text.size() || text[i] != ')')
            return fail("expected ')'");
        ++i;
        return BinaryTree::node(l, r);
    };
    BinaryTree t = tree();
    skip();
    if (i != text.size())
        fail("trailing characters");
    return t;
}

} // namespace sharp::pbt

namespace sharp::pbt {

Element from_G(const LinComb<Permutation>& x)
{
    std::map<BinaryTree, std::pair<Integer, Integer>> classes;
    for (const auto& [sigma, c] : x) {
        auto [it, fresh] = classes.try_emplace(decreasing_tree_shape(sigma), c, 0);
        if (!fresh && it->second.first != c)
            throw NotInAlgebra("unequal coefficients in the sylvester class of " + to_string(it->first));
        ++it->second.second;
    }
    Element out;
    for (const auto& [t, info] : classes) {
        if (info.second != linear_extension_count(t))
            throw NotInAlgebra("incomplete sylvester class of " + to_string(t));
        out.add_term(t, info.first);
    }
    return out;
}

} // namespace sharp::pbt
