#include "corpus.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace fractiso::testing {

StepKernel make_kernel(const std::vector<std::string>& masses,
                       const std::vector<std::vector<std::string>>& rows, bool symmetric) {
    RatioVec m;
    for (const auto& s : masses) m.push_back(Ratio::parse(s));
    RatioMat v;
    for (const auto& row : rows) {
        RatioVec r;
        for (const auto& s : row) r.push_back(Ratio::parse(s));
        v.push_back(std::move(r));
    }
    return StepKernel::create(std::move(m), std::move(v), symmetric);
}

FiniteGraph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return FiniteGraph(n, std::move(edges));
}

FiniteGraph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return FiniteGraph(n, std::move(edges));
}

FiniteGraph star_graph(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return FiniteGraph(leaves + 1, std::move(edges));
}

FiniteGraph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return FiniteGraph(n, std::move(edges));
}

FiniteGraph two_triangles() {
    return FiniteGraph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
}

StepKernel constant_kernel(const Ratio& q) {
    return StepKernel::create({ratio_one()}, {{q}}, true);
}

StepKernel k13_quotient() {
    return make_kernel({"1/4", "3/4"}, {{"0", "1"}, {"1", "0"}});
}

StepKernel three_class_base() {
    return make_kernel({"1/2", "1/3", "1/6"},
                       {{"1/2", "1/4", "0"}, {"1/4", "1/3", "1"}, {"0", "1", "1/6"}});
}

namespace {

bool mask_connected(int n, std::uint32_t mask, const std::vector<std::pair<int, int>>& pairs) {
    if (n == 1) return true;
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (std::size_t b = 0; b < pairs.size(); ++b)
        if (mask >> b & 1u) {
            adj[static_cast<std::size_t>(pairs[b].first)] |= 1u << pairs[b].second;
            adj[static_cast<std::size_t>(pairs[b].second)] |= 1u << pairs[b].first;
        }
    std::uint32_t seen = 1, frontier = 1;
    while (frontier != 0) {
        std::uint32_t next = 0;
        for (int v = 0; v < n; ++v)
            if (frontier >> v & 1u) next |= adj[static_cast<std::size_t>(v)];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (1u << n) - 1u;
}

} // namespace

std::vector<FiniteGraph> connected_graphs_up_to(int max_n) {
    std::vector<FiniteGraph> out;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<std::pair<int, int>> pairs;
        int pair_idx[8][8] = {};
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                pair_idx[i][j] = static_cast<int>(pairs.size());
                pairs.emplace_back(i, j);
            }
        const int bits = static_cast<int>(pairs.size());
        std::vector<std::vector<int>> perms;
        std::vector<int> p(static_cast<std::size_t>(n));
        std::iota(p.begin(), p.end(), 0);
        do perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));

        std::vector<char> seen(static_cast<std::size_t>(1) << bits, 0);
        for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
            if (seen[mask]) continue;
            for (const auto& perm : perms) {
                std::uint32_t remapped = 0;
                for (int b = 0; b < bits; ++b)
                    if (mask >> b & 1u) {
                        int i = perm[static_cast<std::size_t>(pairs[static_cast<std::size_t>(b)].first)];
                        int j = perm[static_cast<std::size_t>(pairs[static_cast<std::size_t>(b)].second)];
                        if (i > j) std::swap(i, j);
                        remapped |= 1u << pair_idx[i][j];
                    }
                seen[remapped] = 1;
            }
            if (!mask_connected(n, mask, pairs)) continue;
            std::vector<std::pair<int, int>> edges;
            for (int b = 0; b < bits; ++b)
                if (mask >> b & 1u) edges.push_back(pairs[static_cast<std::size_t>(b)]);
            out.emplace_back(n, std::move(edges));
        }
    }
    return out;
}

std::vector<Coloring> all_colorings(int k) {
    std::vector<Coloring> out;
    if (k <= 0) return out;
    std::vector<int> growth(static_cast<std::size_t>(k), 0);
    std::function<void(int, int)> extend = [&](int pos, int max_used) {
        if (pos == k) {
            out.emplace_back(growth);
            return;
        }
        for (int c = 0; c <= max_used + 1; ++c) {
            growth[static_cast<std::size_t>(pos)] = c;
            extend(pos + 1, std::max(max_used, c));
        }
    };
    extend(1, 0); // growth[0] = 0 always
    return out;
}

std::vector<std::vector<std::pair<int, int>>> all_labeled_trees(int n) {
    std::vector<std::vector<std::pair<int, int>>> out;
    if (n == 1) {
        out.push_back({});
        return out;
    }
    if (n == 2) {
        out.push_back({{0, 1}});
        return out;
    }
    std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
    for (;;) {
        // decode the Pruefer sequence
        std::vector<int> degree(static_cast<std::size_t>(n), 1);
        for (int s : seq) ++degree[static_cast<std::size_t>(s)];
        std::vector<std::pair<int, int>> edges;
        std::vector<int> deg = degree;
        for (int s : seq) {
            for (int u = 0; u < n; ++u)
                if (deg[static_cast<std::size_t>(u)] == 1) {
                    edges.emplace_back(u, s);
                    --deg[static_cast<std::size_t>(u)];
                    --deg[static_cast<std::size_t>(s)];
                    break;
                }
        }
        int a = -1, b = -1;
        for (int u = 0; u < n; ++u)
            if (deg[static_cast<std::size_t>(u)] == 1) (a == -1 ? a : b) = u;
        edges.emplace_back(a, b);
        out.push_back(std::move(edges));

        int pos = n - 3;
        while (pos >= 0 && seq[static_cast<std::size_t>(pos)] == n - 1) seq[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) break;
        ++seq[static_cast<std::size_t>(pos)];
    }
    return out;
}

std::string ahu_key(int n, const std::vector<std::pair<int, int>>& edges, int root) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    std::function<std::string(int, int)> walk = [&](int v, int parent) -> std::string {
        std::vector<std::string> parts;
        for (int u : adj[static_cast<std::size_t>(v)])
            if (u != parent) parts.push_back(walk(u, v));
        std::sort(parts.begin(), parts.end());
        std::string key = "(";
        for (const std::string& part : parts) key += part;
        return key + ")";
    };
    return walk(root, -1);
}

long oracle_rooted_tree_count(int n) {
    std::set<std::string> keys;
    for (const auto& edges : all_labeled_trees(n))
        for (int root = 0; root < n; ++root) keys.insert(ahu_key(n, edges, root));
    return static_cast<long>(keys.size());
}

long oracle_free_tree_count(int n) {
    std::set<std::string> keys;
    for (const auto& edges : all_labeled_trees(n)) {
        std::string best;
        for (int root = 0; root < n; ++root) {
            std::string key = ahu_key(n, edges, root);
            if (best.empty() || key < best) best = std::move(key);
        }
        keys.insert(best);
    }
    return static_cast<long>(keys.size());
}

std::vector<BlowupPlan> seeded_plans(const StepKernel& base, int count, std::uint64_t seed0, int max_split) {
    std::vector<BlowupPlan> plans;
    for (int i = 0; i < count; ++i) {
        const std::uint64_t master = seed0 + static_cast<std::uint64_t>(i) * 0x9E3779B97F4A7C15ULL;
        std::vector<int> splits;
        std::uint64_t state = master;
        for (int c = 0; c < base.class_count(); ++c) {
            state = state * 6364136223846793005ULL + 1442695040888963407ULL;
            splits.push_back(1 + static_cast<int>((state >> 33) % static_cast<std::uint64_t>(max_split)));
        }
        plans.push_back(make_plan(base, std::move(splits), derive_seed_table(master, base.class_count())));
    }
    return plans;
}

const std::vector<CorpusEntry>& acceptance_corpus() {
    static const std::vector<CorpusEntry> corpus = [] {
        std::vector<CorpusEntry> entries;
        int index = 0;
        for (FiniteGraph& g : connected_graphs_up_to(6)) {
            const std::string name = "graph" + std::to_string(g.vertex_count()) + "_" + std::to_string(index++);
            entries.push_back({name, graph_to_graphon(g), std::move(g)});
        }
        const std::vector<StepKernel> bases = {constant_kernel(Ratio(1, 2)), k13_quotient(), three_class_base()};
        int blowup_index = 0;
        for (std::size_t b = 0; b < bases.size(); ++b) {
            const int count = b == 2 ? 4 : 3; // 10 total
            for (BlowupPlan& plan : seeded_plans(bases[b], count, 0xB10B5EEDULL + b, 3)) {
                entries.push_back({"blowup_" + std::to_string(blowup_index++), blowup(plan), std::nullopt});
            }
        }
        return entries;
    }();
    return corpus;
}

} // namespace fractiso::testing
