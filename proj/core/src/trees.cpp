#include "fractiso/trees.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <stdexcept>

namespace fractiso {

RootedTree::RootedTree() : key_("()") {}

RootedTree::RootedTree(std::vector<RootedTree> children) : children_(std::move(children)) {
    std::sort(children_.begin(), children_.end(),
              [](const RootedTree& a, const RootedTree& b) { return a.key_ < b.key_; });
    key_ = "(";
    for (const RootedTree& c : children_) {
        key_ += c.key_;
        height_ = std::max(height_, c.height_ + 1);
        vertex_count_ += c.vertex_count_;
    }
    key_ += ")";
}

RootedTree RootedTree::parse(std::string_view text) {
    std::size_t pos = 0;
    std::function<RootedTree()> parse_node = [&]() -> RootedTree {
        if (pos >= text.size() || text[pos] != '(') fail(errc::parse_error, "expected '(' in tree literal");
        ++pos;
        std::vector<RootedTree> children;
        while (pos < text.size() && text[pos] == '(') children.push_back(parse_node());
        if (pos >= text.size() || text[pos] != ')') fail(errc::parse_error, "expected ')' in tree literal");
        ++pos;
        return children.empty() ? RootedTree() : RootedTree(std::move(children));
    };
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    RootedTree t = parse_node();
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos != text.size()) fail(errc::parse_error, "trailing characters after tree literal");
    return t;
}

std::pair<int, std::vector<std::pair<int, int>>> tree_edges(const RootedTree& t) {
    std::vector<std::pair<int, int>> edges;
    int next = 0; // last assigned preorder id, root is 0
    std::function<void(const RootedTree&, int)> walk = [&](const RootedTree& node, int id) {
        for (const RootedTree& c : node.children()) {
            const int child_id = ++next;
            edges.emplace_back(id, child_id);
            walk(c, child_id);
        }
    };
    walk(t, 0);
    return {t.vertex_count(), edges};
}

namespace {

std::vector<std::vector<int>> adjacency(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    return adj;
}

RootedTree build_rooted(const std::vector<std::vector<int>>& adj, int v, int parent) {
    std::vector<RootedTree> children;
    for (int u : adj[static_cast<std::size_t>(v)])
        if (u != parent) children.push_back(build_rooted(adj, u, v));
    return children.empty() ? RootedTree() : RootedTree(std::move(children));
}

std::vector<int> centroids(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> size(static_cast<std::size_t>(n), 1);
    std::vector<int> heaviest(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> walk = [&](int v, int parent) {
        for (int u : adj[static_cast<std::size_t>(v)]) {
            if (u == parent) continue;
            walk(u, v);
            size[static_cast<std::size_t>(v)] += size[static_cast<std::size_t>(u)];
            heaviest[static_cast<std::size_t>(v)] =
                std::max(heaviest[static_cast<std::size_t>(v)], size[static_cast<std::size_t>(u)]);
        }
        heaviest[static_cast<std::size_t>(v)] = std::max(heaviest[static_cast<std::size_t>(v)],
                                                         n - size[static_cast<std::size_t>(v)]);
    };
    walk(0, -1);
    const int best = *std::min_element(heaviest.begin(), heaviest.end());
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (heaviest[static_cast<std::size_t>(v)] == best) out.push_back(v);
    return out;
}

} // namespace

RootedTree reroot(const RootedTree& t, int new_root) {
    auto [n, edges] = tree_edges(t);
    if (new_root < 0 || new_root >= n) fail(errc::parse_error, "reroot vertex out of range");
    return build_rooted(adjacency(n, edges), new_root, -1);
}

RootedTree centroid_canonical(const RootedTree& t) {
    auto [n, edges] = tree_edges(t);
    const auto adj = adjacency(n, edges);
    std::optional<RootedTree> best;
    for (int c : centroids(adj)) {
        RootedTree candidate = build_rooted(adj, c, -1);
        if (!best || candidate.key() < best->key()) best = std::move(candidate);
    }
    return *best;
}

std::vector<RootedTree> enumerate_rooted_trees(int max_vertices, long budget) {
    if (max_vertices < 1) fail(errc::parse_error, "max_vertices must be at least 1");
    // all[i] holds every canonical rooted tree with i vertices (key-sorted);
    // child multisets are generated as non-increasing sequences in the
    // global (size, key) order, so each tree appears exactly once
    std::vector<std::vector<RootedTree>> by_size(static_cast<std::size_t>(max_vertices) + 1);
    by_size[1] = {RootedTree()};
    long produced = 1;
    std::vector<RootedTree> flat = {RootedTree()};

    for (int s = 2; s <= max_vertices; ++s) {
        std::vector<RootedTree> batch;
        std::vector<RootedTree> chosen;
        std::function<void(int, std::size_t)> extend = [&](int remaining, std::size_t max_index) {
            if (remaining == 0) {
                if (++produced > budget) fail(errc::budget_exceeded, "rooted tree budget exceeded");
                batch.push_back(RootedTree(chosen));
                return;
            }
            for (std::size_t idx = std::min(max_index, flat.size()); idx-- > 0;) {
                if (flat[idx].vertex_count() > remaining) continue;
                chosen.push_back(flat[idx]);
                extend(remaining - flat[idx].vertex_count(), idx + 1);
                chosen.pop_back();
            }
        };
        extend(s - 1, flat.size());
        std::sort(batch.begin(), batch.end(),
                  [](const RootedTree& a, const RootedTree& b) { return a.key() < b.key(); });
        by_size[static_cast<std::size_t>(s)] = batch;
        flat.insert(flat.end(), batch.begin(), batch.end());
    }
    return flat;
}

std::vector<RootedTree> enumerate_free_trees(int max_vertices, long budget) {
    std::map<std::string, RootedTree> seen;
    for (const RootedTree& t : enumerate_rooted_trees(max_vertices, budget)) {
        RootedTree canon = centroid_canonical(t);
        seen.try_emplace(canon.key(), std::move(canon));
    }
    std::vector<RootedTree> out;
    out.reserve(seen.size());
    for (auto& [key, tree] : seen) out.push_back(std::move(tree));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

RatioVec tree_function_memo(const StepKernel& w, const RootedTree& t, std::map<std::string, RatioVec>& memo) {
    if (auto it = memo.find(t.key()); it != memo.end()) return it->second;
    RatioVec f(static_cast<std::size_t>(w.class_count()), ratio_one());
    for (const RootedTree& c : t.children()) {
        const RatioVec child = w.apply(tree_function_memo(w, c, memo));
        for (std::size_t i = 0; i < f.size(); ++i) f[i] *= child[i];
    }
    memo.emplace(t.key(), f);
    return f;
}

} // namespace

RatioVec tree_function(const StepKernel& w, const RootedTree& t) {
    std::map<std::string, RatioVec> memo;
    return tree_function_memo(w, t, memo);
}

Ratio tree_density(const StepKernel& w, const RootedTree& t) {
    if (!w.symmetric()) fail(errc::asymmetric_kernel, "tree density needs a graphon");
    const RatioVec ones(static_cast<std::size_t>(w.class_count()), ratio_one());
    const Ratio density = w.inner(tree_function(w, t), ones);
    if (t.vertex_count() >= 2) {
        // integrate one alternative rooting of the same free tree
        const RootedTree other = reroot(t, 1);
        if (other.key() != t.key()) {
            const Ratio again = w.inner(tree_function(w, other), ones);
            if (again != density) throw std::logic_error("tree density depends on the rooting");
        }
    }
    return density;
}

Ratio hom_count_oracle(const FiniteGraph& tree, const FiniteGraph& g) {
    const int nt = tree.vertex_count();
    if (nt > 7) fail(errc::too_large, "oracle tree has more than 7 vertices");
    if (static_cast<int>(tree.edges().size()) != nt - 1)
        fail(errc::not_a_tree, "edge count differs from |V|-1");
    {
        // connectivity
        std::vector<int> stack = {0}, seen(static_cast<std::size_t>(nt), 0);
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u = 0; u < nt; ++u)
                if (tree.adjacent(v, u) && !seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = 1;
                    ++reached;
                    stack.push_back(u);
                }
        }
        if (reached != nt) fail(errc::not_a_tree, "graph is disconnected");
    }
    const int ng = g.vertex_count();
    double maps = 1;
    for (int i = 0; i < nt; ++i) maps *= ng;
    if (maps > 1e8) fail(errc::too_large, "too many vertex maps to enumerate");
    std::vector<int> map(static_cast<std::size_t>(nt), 0);
    unsigned long long count = 0;
    for (;;) {
        bool hom = true;
        for (const auto& e : tree.edges())
            if (!g.adjacent(map[static_cast<std::size_t>(e.first)], map[static_cast<std::size_t>(e.second)])) {
                hom = false;
                break;
            }
        if (hom) ++count;
        int pos = nt - 1;
        while (pos >= 0 && map[static_cast<std::size_t>(pos)] == ng - 1) map[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) break;
        ++map[static_cast<std::size_t>(pos)];
    }
    mpz_class total;
    mpz_ui_pow_ui(total.get_mpz_t(), static_cast<unsigned long>(ng), static_cast<unsigned long>(nt));
    return Ratio(mpq_class(mpz_class(static_cast<unsigned long>(count)), total));
}

TreeCombinator TreeCombinator::unit() { return TreeCombinator(Kind::unit, 0, {}); }

TreeCombinator TreeCombinator::lift(TreeCombinator inner) {
    const int level = inner.factor_level() + 1;
    std::vector<TreeCombinator> parts;
    parts.push_back(std::move(inner));
    return TreeCombinator(Kind::lift, level, std::move(parts));
}

TreeCombinator TreeCombinator::lift(TreeCombinator inner, int level) {
    if (level != inner.factor_level())
        fail(errc::malformed_expression,
             "lift level " + std::to_string(level) + " differs from the argument's factoring level " +
                 std::to_string(inner.factor_level()));
    return lift(std::move(inner));
}

TreeCombinator TreeCombinator::product(std::vector<TreeCombinator> factors) {
    if (factors.empty()) fail(errc::malformed_expression, "product needs at least one factor");
    int level = 0;
    for (const TreeCombinator& f : factors) level = std::max(level, f.factor_level());
    return TreeCombinator(Kind::product, level, std::move(factors));
}

RootedTree combinator_to_tree(const TreeCombinator& e) {
    switch (e.kind()) {
        case TreeCombinator::Kind::unit:
            return RootedTree();
        case TreeCombinator::Kind::lift: {
            std::vector<RootedTree> child;
            child.push_back(combinator_to_tree(e.inner()));
            return RootedTree(std::move(child));
        }
        case TreeCombinator::Kind::product: {
            std::vector<RootedTree> merged;
            for (const TreeCombinator& f : e.factors()) {
                RootedTree t = combinator_to_tree(f);
                for (const RootedTree& c : t.children()) merged.push_back(c);
            }
            return merged.empty() ? RootedTree() : RootedTree(std::move(merged));
        }
    }
    fail(errc::malformed_expression, "unreachable combinator kind");
}

RatioVec eval_combinator(const StepKernel& q, const TreeCombinator& e) {
    switch (e.kind()) {
        case TreeCombinator::Kind::unit:
            return RatioVec(static_cast<std::size_t>(q.class_count()), ratio_one());
        case TreeCombinator::Kind::lift:
            return q.apply(eval_combinator(q, e.inner()));
        case TreeCombinator::Kind::product: {
            RatioVec out(static_cast<std::size_t>(q.class_count()), ratio_one());
            for (const TreeCombinator& f : e.factors()) {
                const RatioVec part = eval_combinator(q, f);
                for (std::size_t i = 0; i < out.size(); ++i) out[i] *= part[i];
            }
            return out;
        }
    }
    fail(errc::malformed_expression, "unreachable combinator kind");
}

std::optional<RootedTree> find_witness_tree(const StepKernel& w, const StepKernel& u, int max_vertices) {
    if (!w.symmetric() || !u.symmetric()) fail(errc::asymmetric_kernel, "witness search needs graphons");
    for (const RootedTree& t : enumerate_free_trees(max_vertices))
        if (tree_density(w, t) != tree_density(u, t)) return t;
    return std::nullopt;
}

FiniteGraph rooted_tree_to_graph(const RootedTree& t) {
    auto [n, edges] = tree_edges(t);
    return FiniteGraph(n, edges);
}

} // namespace fractiso
