#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "catorb/orbits.hpp"
#include "catorb/partition.hpp"

namespace catorb {

struct MixedFixedness : std::invalid_argument {
    MixedFixedness() : std::invalid_argument("compare_roots needs both roots tau-fixed or both not") {}
};

// Either Pair(i,j) or Single(r); the first entry is the node's child count.
struct NodeLabel {
    bool is_pair;
    int a;
    int b;  // unused for Single

    static NodeLabel pair(int i, int j) { return {true, i, j}; }
    static NodeLabel single(int r) { return {false, r, 0}; }
    int child_count() const { return a; }
    std::string str() const {
        return is_pair ? "(" + std::to_string(a) + "," + std::to_string(b) + ")"
                       : "(" + std::to_string(a) + ")";
    }
    friend bool operator==(const NodeLabel&, const NodeLabel&) = default;
};

enum class NodeKind { Root, DType, TauType };

inline const char* kind_name(NodeKind k) {
    switch (k) {
        case NodeKind::Root: return "root";
        case NodeKind::DType: return "d";
        default: return "tau";
    }
}

struct TreeNode {
    Partition partition;
    int level;
    NodeKind kind;
    NodeLabel label;
    std::vector<TreeNode> children;
};

// T_lambda for a tau-fixed root, otherwise the two-tree forest; `roots` holds
// one or two trees and no synthetic vertex ever appears in exports.
struct OrbitTree {
    bool forest = false;
    std::vector<TreeNode> roots;
};

namespace detail {

inline NodeLabel orbit_label(const Partition& mu, int level, NodeKind kind) {
    if (kind == NodeKind::Root) return NodeLabel::pair(2, 2);
    if (kind == NodeKind::DType) return NodeLabel::pair(mu.last() + 1, level + 2 - mu.first());
    return NodeLabel::single(mu.last() + 1);
}

inline TreeNode expand_orbit(const Partition& mu, int level, NodeKind kind, int depth) {
    TreeNode node{mu, level, kind, orbit_label(mu, level, kind), {}};
    if (depth > 0) {
        node.children.reserve(static_cast<std::size_t>(mu.last()) + 1);
        for (int j = 1; j <= mu.last(); ++j)
            node.children.push_back(expand_orbit(append_part(mu, j), level + 1, NodeKind::DType, depth - 1));
        node.children.push_back(
            expand_orbit(tau_complement(append_part(mu, 1), level + 1), level + 1, NodeKind::TauType, depth - 1));
    }
    return node;
}

}  // namespace detail

inline OrbitTree build_orbit_tree(const Partition& lam, int k, int depth) {
    if (!is_square(lam, k)) throw std::invalid_argument("build_orbit_tree: root must be square");
    if (depth < 0) throw std::invalid_argument("build_orbit_tree: depth must be >= 0");
    OrbitTree t;
    Partition mate = tau_complement(lam, k);
    t.forest = mate != lam;
    t.roots.push_back(detail::expand_orbit(lam, k, NodeKind::Root, depth));
    if (t.forest) t.roots.push_back(detail::expand_orbit(mate, k, NodeKind::Root, depth));
    return t;
}

struct CanonicalNode {
    NodeLabel label;
    std::vector<CanonicalNode> children;
};

namespace detail {

inline CanonicalNode expand_canonical(NodeLabel label, int depth) {
    CanonicalNode node{label, {}};
    if (depth > 0) {
        int n = label.child_count();
        int j = label.is_pair ? label.b : 2;  // Single(r) propagates like Pair(r,2)
        node.children.reserve(static_cast<std::size_t>(n));
        for (int i = 2; i <= n; ++i) node.children.push_back(expand_canonical(NodeLabel::pair(i, j + 1), depth - 1));
        node.children.push_back(expand_canonical(NodeLabel::single(j + 1), depth - 1));
    }
    return node;
}

}  // namespace detail

// The abstract tree T: root (2,2); a vertex (i,j) has children (2,j+1), ...,
// (i,j+1), (j+1); a vertex (r) has children (2,3), ..., (r,3), (3).
inline CanonicalNode build_canonical_tree(int depth) {
    if (depth < 0) throw std::invalid_argument("build_canonical_tree: depth must be >= 0");
    return detail::expand_canonical(NodeLabel::pair(2, 2), depth);
}

inline std::vector<std::vector<NodeLabel>> label_levels(const TreeNode& root) {
    std::vector<std::vector<NodeLabel>> levels;
    std::vector<const TreeNode*> cur{&root};
    while (!cur.empty()) {
        std::vector<NodeLabel> row;
        std::vector<const TreeNode*> next;
        for (const TreeNode* n : cur) {
            row.push_back(n->label);
            for (const TreeNode& c : n->children) next.push_back(&c);
        }
        levels.push_back(std::move(row));
        cur = std::move(next);
    }
    return levels;
}

inline std::vector<std::vector<NodeLabel>> label_levels(const CanonicalNode& root) {
    std::vector<std::vector<NodeLabel>> levels;
    std::vector<const CanonicalNode*> cur{&root};
    while (!cur.empty()) {
        std::vector<NodeLabel> row;
        std::vector<const CanonicalNode*> next;
        for (const CanonicalNode* n : cur) {
            row.push_back(n->label);
            for (const CanonicalNode& c : n->children) next.push_back(&c);
        }
        levels.push_back(std::move(row));
        cur = std::move(next);
    }
    return levels;
}

struct IsoReport {
    bool isomorphic = true;
    int first_part_offset = 0;
    std::string mismatch;  // empty when isomorphic
};

// Level-by-level, in child order, every tree of the forest must print the
// canonical labels.
inline IsoReport check_label_isomorphism(const Partition& lam, int k, int depth) {
    OrbitTree t = build_orbit_tree(lam, k, depth);
    auto canon = label_levels(build_canonical_tree(depth));
    IsoReport rep;
    for (std::size_t ti = 0; ti < t.roots.size(); ++ti) {
        auto got = label_levels(t.roots[ti]);
        for (std::size_t lv = 0; lv < canon.size(); ++lv) {
            if (got[lv].size() != canon[lv].size()) {
                rep.isomorphic = false;
                rep.mismatch = "tree " + std::to_string(ti) + " level " + std::to_string(lv) + ": " +
                               std::to_string(got[lv].size()) + " labels, canonical has " +
                               std::to_string(canon[lv].size());
                return rep;
            }
            for (std::size_t i = 0; i < canon[lv].size(); ++i)
                if (!(got[lv][i] == canon[lv][i])) {
                    rep.isomorphic = false;
                    rep.mismatch = "tree " + std::to_string(ti) + " level " + std::to_string(lv) + " position " +
                                   std::to_string(i) + ": got " + got[lv][i].str() + ", canonical " +
                                   canon[lv][i].str();
                    return rep;
                }
        }
    }
    return rep;
}

namespace detail {

inline bool compare_nodes(const TreeNode& a, const TreeNode& b, int offset, std::string& mismatch) {
    if (a.partition.first() - b.partition.first() != offset) {
        mismatch = "first parts of " + a.partition.str() + " and " + b.partition.str() + " differ by " +
                   std::to_string(a.partition.first() - b.partition.first()) + ", expected " + std::to_string(offset);
        return false;
    }
    if (a.partition.last() != b.partition.last()) {
        mismatch = "last parts of " + a.partition.str() + " and " + b.partition.str() + " differ";
        return false;
    }
    if (a.children.size() != b.children.size()) {
        mismatch = "child counts of " + a.partition.str() + " and " + b.partition.str() + " differ";
        return false;
    }
    for (std::size_t i = 0; i < a.children.size(); ++i)
        if (!compare_nodes(a.children[i], b.children[i], offset, mismatch)) return false;
    return true;
}

}  // namespace detail

// The root-to-root isomorphism: matched nodes satisfy mu_1 - mu'_1 = k1 - k2
// and equal last parts, pairwise in child order.
inline IsoReport compare_roots(const Partition& lam1, int k1, const Partition& lam2, int k2, int depth) {
    if (!is_square(lam1, k1) || !is_square(lam2, k2))
        throw std::invalid_argument("compare_roots: both roots must be square");
    if (is_tau_fixed(lam1, k1) != is_tau_fixed(lam2, k2)) throw MixedFixedness{};
    OrbitTree t1 = build_orbit_tree(lam1, k1, depth);
    OrbitTree t2 = build_orbit_tree(lam2, k2, depth);
    IsoReport rep;
    rep.first_part_offset = k1 - k2;
    for (std::size_t i = 0; i < t1.roots.size(); ++i)
        if (!detail::compare_nodes(t1.roots[i], t2.roots[i], k1 - k2, rep.mismatch)) {
            rep.isomorphic = false;
            return rep;
        }
    return rep;
}

namespace detail {

inline void dot_node(const TreeNode& n, std::string& out, int& counter, int parent) {
    int id = counter++;
    out += "  n" + std::to_string(id) + " [label=\"(" + n.partition.str() + ") | " + n.label.str() + "\"];\n";
    if (parent >= 0) out += "  n" + std::to_string(parent) + " -> n" + std::to_string(id) + ";\n";
    for (const TreeNode& c : n.children) dot_node(c, out, counter, id);
}

inline void dot_node(const CanonicalNode& n, std::string& out, int& counter, int parent) {
    int id = counter++;
    out += "  n" + std::to_string(id) + " [label=\"" + n.label.str() + "\"];\n";
    if (parent >= 0) out += "  n" + std::to_string(parent) + " -> n" + std::to_string(id) + ";\n";
    for (const CanonicalNode& c : n.children) dot_node(c, out, counter, id);
}

}  // namespace detail

inline std::string to_dot(const OrbitTree& t) {
    std::string out = "digraph orbit_tree {\n";
    int counter = 0;
    for (const TreeNode& r : t.roots) detail::dot_node(r, out, counter, -1);
    out += "}\n";
    return out;
}

inline std::string to_dot(const CanonicalNode& root) {
    std::string out = "digraph canonical_tree {\n";
    int counter = 0;
    detail::dot_node(root, out, counter, -1);
    out += "}\n";
    return out;
}

}  // namespace catorb
