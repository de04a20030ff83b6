#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fractiso/kernel.hpp"

namespace fractiso {

/// Rooted tree in canonical form: children are kept sorted by structural
/// key, so the balanced-parentheses key ("()" for a leaf) is unique per
/// isomorphism class of rooted trees.
class RootedTree {
public:
    RootedTree();
    explicit RootedTree(std::vector<RootedTree> children);

    /// Parses a balanced-parentheses tree like "(()(()))" and canonicalizes.
    static RootedTree parse(std::string_view text);

    const std::string& key() const { return key_; }
    int height() const { return height_; }
    int vertex_count() const { return vertex_count_; }
    const std::vector<RootedTree>& children() const { return children_; }

    friend bool operator==(const RootedTree& a, const RootedTree& b) { return a.key_ == b.key_; }
    friend bool operator<(const RootedTree& a, const RootedTree& b) {
        if (a.vertex_count_ != b.vertex_count_) return a.vertex_count_ < b.vertex_count_;
        return a.key_ < b.key_;
    }

private:
    std::vector<RootedTree> children_;
    std::string key_;
    int height_ = 0;
    int vertex_count_ = 1;
};

/// Undirected edge list of a rooted tree; vertices are numbered in preorder
/// with the root at 0.
std::pair<int, std::vector<std::pair<int, int>>> tree_edges(const RootedTree& t);

/// The same free tree rooted at the given vertex of its preorder numbering.
RootedTree reroot(const RootedTree& t, int new_root);

/// Canonical representative of the underlying free tree: rooted at a
/// centroid, ties broken by the smaller canonical key.
RootedTree centroid_canonical(const RootedTree& t);

inline constexpr long default_tree_budget = 100000;

/// One canonical representative per rooted-tree isomorphism class with at
/// most max_vertices vertices, ordered by (size, key).
std::vector<RootedTree> enumerate_rooted_trees(int max_vertices, long budget = default_tree_budget);

/// One centroid-rooted representative per free-tree isomorphism class with
/// at most max_vertices vertices, ordered by (size, key).
std::vector<RootedTree> enumerate_free_trees(int max_vertices, long budget = default_tree_budget);

/// f^W_T: the leaf is the constant one function, otherwise the pointwise
/// product over children of T_W applied to the child's function. Exact.
RatioVec tree_function(const StepKernel& w, const RootedTree& t);

/// t(T,W) = sum_i masses(i) f^W_T(i) for symmetric W. Root independence is
/// asserted by integrating a second rooting of the same free tree.
Ratio tree_density(const StepKernel& w, const RootedTree& t);

/// |Hom(T,G)| / |V(G)|^|V(T)| by exhaustive enumeration of all vertex maps.
/// Independent of the kernel path; T must be a tree with at most 7 vertices.
Ratio hom_count_oracle(const FiniteGraph& tree, const FiniteGraph& g);

/// Expression over the tree-function combinators: the unit function, the
/// integral lift F against the next-level measure, and the pointwise
/// product G.
class TreeCombinator {
public:
    enum class Kind { unit, lift, product };

    static TreeCombinator unit();
    static TreeCombinator lift(TreeCombinator inner);
    static TreeCombinator lift(TreeCombinator inner, int level);
    static TreeCombinator product(std::vector<TreeCombinator> factors);

    Kind kind() const { return kind_; }
    int factor_level() const { return factor_level_; }
    const TreeCombinator& inner() const { return parts_.front(); }
    const std::vector<TreeCombinator>& factors() const { return parts_; }

private:
    TreeCombinator(Kind kind, int level, std::vector<TreeCombinator> parts)
        : kind_(kind), factor_level_(level), parts_(std::move(parts)) {}

    Kind kind_;
    int factor_level_;
    std::vector<TreeCombinator> parts_;
};

/// The rooted tree whose tree function realizes the expression: the unit is
/// a leaf, a lift hangs its tree under a fresh root, a product glues the
/// factors' roots into one.
RootedTree combinator_to_tree(const TreeCombinator& e);

/// Evaluates an expression on the classes of a DIDM-derived (or quotient)
/// kernel: lifts integrate against the kernel's rows, products multiply
/// pointwise.
RatioVec eval_combinator(const StepKernel& q, const TreeCombinator& e);

/// First free tree with at most max_vertices vertices whose densities in w
/// and u differ, scanning in enumeration order. std::nullopt means no
/// witness below the bound, which does not certify fractional isomorphism.
std::optional<RootedTree> find_witness_tree(const StepKernel& w, const StepKernel& u, int max_vertices);

/// The underlying free tree as a FiniteGraph (preorder vertex numbering).
FiniteGraph rooted_tree_to_graph(const RootedTree& t);

} // namespace fractiso
