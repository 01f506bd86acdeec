#include "sharp/trialg.hpp"

#include "sharp/enumerate.hpp"
#include "sharp/errors.hpp"
#include "sharp/wqsym.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace sharp::trialg {

namespace {

struct Node {
    std::vector<Node> kids;
};

Node decode(const std::vector<int>& code, std::size_t& pos)
{
    if (pos >= code.size())
        throw std::invalid_argument("plane tree code ends early");
    const int c = code[pos++];
    if (c == 1 || c < 0)
        throw std::invalid_argument("plane tree vertices need 0 or at least 2 children");
    Node n;
    for (int i = 0; i < c; ++i)
        n.kids.push_back(decode(code, pos));
    return n;
}

void encode(const Node& n, std::vector<int>& out)
{
    out.push_back(static_cast<int>(n.kids.size()));
    for (const auto& k : n.kids)
        encode(k, out);
}

Node to_node(const PlaneTree& t)
{
    std::size_t pos = 0;
    return decode(t.code(), pos);
}

PlaneTree from_node(const Node& n)
{
    std::vector<int> code;
    encode(n, code);
    return PlaneTree(std::move(code));
}

void build(const std::vector<Letter>& w, std::size_t lo, std::size_t hi, std::vector<int>& code, std::vector<Letter>& values)
{
    if (lo == hi) {
        code.push_back(0);
        return;
    }
    const Letter m = *std::max_element(w.begin() + static_cast<long>(lo), w.begin() + static_cast<long>(hi));
    std::vector<std::size_t> cuts;
    for (std::size_t i = lo; i < hi; ++i)
        if (w[i] == m)
            cuts.push_back(i);
    code.push_back(static_cast<int>(cuts.size() + 1));
    values.push_back(m);
    std::size_t start = lo;
    for (std::size_t c : cuts) {
        build(w, start, c, code, values);
        start = c + 1;
    }
    build(w, start, hi, code, values);
}

} // namespace

PlaneTree::PlaneTree(std::vector<int> preorder_child_counts) : code_(std::move(preorder_child_counts))
{
    std::size_t pos = 0;
    decode(code_, pos);
    if (pos != code_.size())
        throw std::invalid_argument("plane tree code has trailing entries");
}

PlaneTree PlaneTree::graft(const std::vector<PlaneTree>& children)
{
    if (children.size() < 2)
        throw std::invalid_argument("graft needs at least two children");
    std::vector<int> code{static_cast<int>(children.size())};
    for (const auto& c : children)
        code.insert(code.end(), c.code_.begin(), c.code_.end());
    return PlaneTree(std::move(code));
}

PlaneTree PlaneTree::corolla(std::size_t sectors)
{
    if (sectors == 0)
        return PlaneTree();
    return graft(std::vector<PlaneTree>(sectors + 1));
}

std::size_t PlaneTree::sectors() const
{
    std::size_t leaves = 0;
    for (int c : code_)
        if (c == 0)
            ++leaves;
    return leaves - 1;
}

std::vector<PlaneTree> PlaneTree::children() const
{
    std::vector<PlaneTree> out;
    for (const auto& k : to_node(*this).kids)
        out.push_back(from_node(k));
    return out;
}

ValuedPlaneTree valued_plane_tree(const std::vector<Letter>& w)
{
    std::vector<int> code;
    std::vector<Letter> values;
    build(w, 0, w.size(), code, values);
    return {PlaneTree(std::move(code)), std::move(values)};
}

PlaneTree plane_tree_of_word(const std::vector<Letter>& w)
{
    return valued_plane_tree(w).tree;
}

namespace {

template <class Emit>
void walk_sectors(const std::vector<int>& code, std::size_t& pos, std::size_t& vertex, Emit&& emit)
{
    const int c = code[pos++];
    if (c == 0)
        return;
    const std::size_t me = vertex++;
    for (int i = 0; i < c; ++i) {
        walk_sectors(code, pos, vertex, emit);
        if (i + 1 < c)
            emit(me);
    }
}

} // namespace

std::vector<Letter> sector_reading(const ValuedPlaneTree& t)
{
    std::vector<Letter> out;
    std::size_t pos = 0;
    std::size_t vertex = 0;
    walk_sectors(t.tree.code(), pos, vertex, [&](std::size_t v) { out.push_back(t.vertex_values.at(v)); });
    return out;
}

std::vector<std::size_t> sector_owners(const PlaneTree& t)
{
    std::vector<std::size_t> out;
    std::size_t pos = 0;
    std::size_t vertex = 0;
    walk_sectors(t.code(), pos, vertex, [&](std::size_t v) { out.push_back(v + 1); });
    return out;
}

std::optional<PlaneTree> dk_tree(const PlaneTree& t, std::size_t k)
{
    const std::size_t n = t.sectors();
    if (k < 1 || k >= n)
        throw std::out_of_range("dk_tree: k must satisfy 1 <= k < sectors");
    const auto owners = sector_owners(t);
    if (owners[k - 1] != owners[k])
        return std::nullopt;

    Node root = to_node(t);
    std::size_t seen = 0;
    bool done = false;
    std::function<void(Node&)> visit = [&](Node& v) {
        for (std::size_t i = 0; i < v.kids.size() && !done; ++i) {
            visit(v.kids[i]);
            if (done || i + 1 == v.kids.size())
                continue;
            if (++seen == k) {
                // The child between sectors k and k+1 of one vertex is a leaf.
                v.kids.erase(v.kids.begin() + static_cast<long>(i + 1));
                done = true;
            }
        }
    };
    visit(root);
    return from_node(root);
}

std::vector<PlaneTree> all_plane_trees(std::size_t sectors)
{
    // Forests of given total sector count, then graft.
    std::map<std::size_t, std::vector<PlaneTree>> trees;
    trees[0] = {PlaneTree()};
    for (std::size_t n = 1; n <= sectors; ++n) {
        std::vector<PlaneTree> out;
        std::vector<PlaneTree> kids;
        // A root with c children contributes c-1 sectors; children share the rest.
        std::function<void(std::size_t)> rec = [&](std::size_t remaining) {
            if (kids.size() >= 2 && remaining == kids.size() - 1)
                out.push_back(PlaneTree::graft(kids));
            if (remaining < kids.size())
                return;
            for (std::size_t s = 0; s + kids.size() <= remaining; ++s)
                for (const auto& t : trees[s]) {
                    kids.push_back(t);
                    rec(remaining - s);
                    kids.pop_back();
                }
        };
        rec(n);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        trees[n] = std::move(out);
    }
    return trees[sectors];
}

namespace {

const std::map<PlaneTree, std::vector<PackedWord>>& packed_by_tree(std::size_t n)
{
    static std::mutex guard;
    static std::map<std::size_t, std::map<PlaneTree, std::vector<PackedWord>>> cache;
    std::lock_guard<std::mutex> lock(guard);
    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;
    std::map<PlaneTree, std::vector<PackedWord>> table;
    for (auto& u : all_packed_words(n))
        table[plane_tree_of_word(u.letters())].push_back(u);
    return cache.emplace(n, std::move(table)).first->second;
}

} // namespace

LinComb<PackedWord> to_M(const PlaneTree& t)
{
    LinComb<PackedWord> out;
    const auto& table = packed_by_tree(t.sectors());
    auto it = table.find(t);
    if (it != table.end())
        for (const auto& u : it->second)
            out.add_term(u, 1);
    return out;
}

TDElement from_M(const LinComb<PackedWord>& x)
{
    std::map<PlaneTree, std::pair<Integer, std::size_t>> classes;
    for (const auto& [u, c] : x) {
        PlaneTree t = plane_tree_of_word(u.letters());
        auto [it, fresh] = classes.try_emplace(t, c, 0);
        if (!fresh && it->second.first != c)
            throw NotInAlgebra("unequal coefficients in the fiber of " + to_string(t));
        ++it->second.second;
    }
    TDElement out;
    for (const auto& [t, info] : classes) {
        if (info.second != packed_by_tree(t.sectors()).at(t).size())
            throw NotInAlgebra("incomplete fiber of " + to_string(t));
        out.add_term(t, info.first);
    }
    return out;
}

TDElement sharp_TD(const PlaneTree& t1, const PlaneTree& t2)
{
    return from_M(bilinear_extend(to_M(t1), to_M(t2), wqsym::sharp_M));
}

std::string to_string(const PlaneTree& t)
{
    std::string out;
    std::function<void(const Node&)> rec = [&](const Node& n) {
        if (n.kids.empty()) {
            out += "·";
            return;
        }
        out += "(";
        for (const auto& k : n.kids)
            rec(k);
        out += ")";
    };
    rec(to_node(t));
    return out;
}

PlaneTree parse_plane_tree(std::string_view text)
{
    std::size_t i = 0;
    auto fail = [&](const char* what) {
        throw std::invalid_argument(std::string("plane tree text: ") + what + " at offset " + std::to_string(i));
    };
    std::function<void(std::vector<int>&)> rec = [&](std::vector<int>& code) {
        while (i < text.size() && text[i] == ' ')
            ++i;
        if (i < text.size() && text[i] == '.') {
            ++i;
            code.push_back(0);
            return;
        }
        if (text.substr(i, 2) == "·") {
            i += 2;
            code.push_back(0);
            return;
        }
        if (i >= text.size() || text[i] != '(')
            fail("expected '(' or a leaf");
        ++i;
        const std::size_t slot = code.size();
        code.push_back(0);
        int count = 0;
        while (true) {
            while (i < text.size() && text[i] == ' ')
                ++i;
            if (i < text.size() && text[i] == ')')
                break;
            if (i >= text.size())
                fail("unbalanced parentheses");
            rec(code);
            ++count;
        }
        ++i;
        if (count < 2)
            fail("a vertex needs at least two children");
        code[slot] = count;
    };
    std::vector<int> code;
    rec(code);
    while (i < text.size() && text[i] == ' ')
        ++i;
    if (i != text.size())
        fail("trailing characters");
    return PlaneTree(std::move(code));
}

SegmentedComposition::SegmentedComposition(std::string signs) : signs_(std::move(signs))
{
    for (char c : signs_)
        if (c != '<' && c != '=' && c != '>')
            throw std::invalid_argument("segmented composition signs must be '<', '=' or '>'");
}

SegmentedComposition segmented_of_word(const std::vector<Letter>& w)
{
    if (w.empty())
        throw std::invalid_argument("segmented_of_word: empty word");
    std::string s;
    for (std::size_t i = 1; i < w.size(); ++i)
        s += w[i - 1] < w[i] ? '<' : (w[i - 1] == w[i] ? '=' : '>');
    return SegmentedComposition(std::move(s));
}

PartsView parts_of(const SegmentedComposition& c)
{
    PartsView v{{1}, {}};
    for (char s : c.signs()) {
        if (s == '<') {
            ++v.parts.back();
        } else {
            v.separators += s == '=' ? ',' : '|';
            v.parts.push_back(1);
        }
    }
    return v;
}

SegmentedComposition from_parts(const std::vector<int>& parts, const std::string& separators)
{
    if (parts.empty() || separators.size() + 1 != parts.size())
        throw std::invalid_argument("segmented composition: parts and separators do not match");
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1)
            throw std::invalid_argument("segmented composition parts must be positive");
        s.append(static_cast<std::size_t>(parts[i] - 1), '<');
        if (i < separators.size()) {
            const char sep = separators[i];
            if (sep != ',' && sep != '|')
                throw std::invalid_argument("separators must be ',' or '|'");
            s += sep == ',' ? '=' : '>';
        }
    }
    return SegmentedComposition(std::move(s));
}

TCElement product_TC(const SegmentedComposition& a, const SegmentedComposition& b)
{
    TCElement out;
    for (char junction : {'<', '=', '>'})
        out.add_term(SegmentedComposition(a.signs() + junction + b.signs()), 1);
    return out;
}

SegmentedComposition sharp_TC(const SegmentedComposition& a, const SegmentedComposition& b)
{
    return SegmentedComposition(a.signs() + b.signs());
}

SegmentedComposition sharp_TC_glue(const SegmentedComposition& a, const SegmentedComposition& b)
{
    const PartsView pa = parts_of(a);
    const PartsView pb = parts_of(b);
    std::vector<int> parts(pa.parts.begin(), pa.parts.end() - 1);
    parts.push_back(pa.parts.back() + pb.parts.front() - 1);
    parts.insert(parts.end(), pb.parts.begin() + 1, pb.parts.end());
    return from_parts(parts, pa.separators + pb.separators);
}

std::optional<SegmentedComposition> dk_TC(const SegmentedComposition& c, std::size_t k)
{
    if (k < 1 || k >= c.degree())
        throw std::out_of_range("dk_TC: k must satisfy 1 <= k < degree");
    if (c.signs()[k - 1] != '=')
        return std::nullopt;
    std::string s = c.signs();
    s.erase(k - 1, 1);
    return SegmentedComposition(std::move(s));
}

std::vector<SegmentedComposition> all_segmented(std::size_t degree)
{
    std::vector<SegmentedComposition> out;
    if (degree == 0)
        return out;
    std::string s(degree - 1, '<');
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == s.size()) {
            out.emplace_back(s);
            return;
        }
        for (char c : {'<', '=', '>'}) {
            s[i] = c;
            rec(i + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SegmentedComposition> tc_generators()
{
    return {SegmentedComposition("<"), SegmentedComposition("="), SegmentedComposition(">")};
}

std::vector<SegmentedComposition> tc_factorize(const SegmentedComposition& c)
{
    std::vector<SegmentedComposition> out;
    for (char s : c.signs())
        out.emplace_back(std::string(1, s));
    return out;
}

bool tc_generators_check(std::size_t max_degree)
{
    const auto gens = tc_generators();
    for (std::size_t n = 1; n <= max_degree; ++n) {
        const auto labels = all_segmented(n);
        std::size_t expected = 1;
        for (std::size_t i = 1; i < n; ++i)
            expected *= 3;
        if (labels.size() != expected)
            return false;

        // Every word of length n-1 in the generators gives a distinct label.
        std::set<SegmentedComposition> reached;
        std::vector<std::size_t> idx(n - 1, 0);
        while (true) {
            SegmentedComposition p;
            for (std::size_t i : idx)
                p = sharp_TC(p, gens[i]);
            reached.insert(p);
            std::size_t j = idx.size();
            while (j > 0 && idx[j - 1] == 2)
                idx[--j] = 0;
            if (j == 0)
                break;
            ++idx[j - 1];
        }
        if (reached.size() != expected)
            return false;

        for (const auto& c : labels) {
            SegmentedComposition p;
            for (const auto& f : tc_factorize(c)) {
                if (std::find(gens.begin(), gens.end(), f) == gens.end())
                    return false;
                p = sharp_TC(p, f);
            }
            if (p != c)
                return false;
        }
    }
    return true;
}

std::string to_string(const SegmentedComposition& c)
{
    const PartsView v = parts_of(c);
    std::string out = "(";
    for (std::size_t i = 0; i < v.parts.size(); ++i) {
        out += std::to_string(v.parts[i]);
        if (i < v.separators.size())
            out += v.separators[i];
    }
    return out + ")";
}

SegmentedComposition parse_segmented(std::string_view text)
{
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            s += ch;
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')')
        s = s.substr(1, s.size() - 2);
    std::vector<int> parts;
    std::string seps;
    std::size_t i = 0;
    while (true) {
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
            ++j;
        if (j == i)
            throw std::invalid_argument("segmented composition text: expected a part at offset " + std::to_string(i));
        parts.push_back(std::stoi(s.substr(i, j - i)));
        i = j;
        if (i == s.size())
            break;
        if (s[i] != ',' && s[i] != '|')
            throw std::invalid_argument("segmented composition text: unexpected character at offset " + std::to_string(i));
        seps += s[i++];
    }
    return from_parts(parts, seps);
}

} // namespace sharp::trialg
