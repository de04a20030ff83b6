#include "fractiso/kernel.hpp"

#include <algorithm>
#include <map>

namespace fractiso {

StepKernel StepKernel::create(RatioVec masses, RatioMat values, bool declared_symmetric) {
    const std::size_t k = masses.size();
    if (k == 0) fail(errc::masses_not_one, "kernel has no classes");
    Ratio total;
    for (const Ratio& m : masses) {
        if (m.sign() <= 0) fail(errc::non_positive_mass, "class mass " + m.str() + " is not positive");
        total += m;
    }
    if (total != ratio_one()) fail(errc::masses_not_one, "masses sum to " + total.str());
    if (values.size() != k) fail(errc::dimension_mismatch, "value matrix row count != class count");
    for (const RatioVec& row : values) {
        if (row.size() != k) fail(errc::dimension_mismatch, "value matrix is not square");
        for (const Ratio& v : row)
            if (!in_unit_interval(v)) fail(errc::value_out_of_range, "kernel value " + v.str() + " outside [0,1]");
    }
    bool actually_symmetric = true;
    for (std::size_t i = 0; i < k && actually_symmetric; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (values[i][j] != values[j][i]) { actually_symmetric = false; break; }
    if (declared_symmetric && !actually_symmetric)
        fail(errc::asymmetric_declared_symmetric, "kernel declared symmetric but values differ from transpose");
    return StepKernel(std::move(masses), std::move(values), actually_symmetric);
}

RatioVec StepKernel::apply(const RatioVec& f) const {
    if (static_cast<int>(f.size()) != k_) fail(errc::dimension_mismatch, "vector length != class count");
    RatioVec out(static_cast<std::size_t>(k_));
    for (int i = 0; i < k_; ++i) {
        Ratio acc;
        for (int j = 0; j < k_; ++j) acc += value(i, j) * mass(j) * f[static_cast<std::size_t>(j)];
        out[static_cast<std::size_t>(i)] = acc;
    }
    return out;
}

Ratio StepKernel::degree(int i) const {
    Ratio acc;
    for (int j = 0; j < k_; ++j) acc += value(i, j) * mass(j);
    return acc;
}

Ratio StepKernel::inner(const RatioVec& f, const RatioVec& g) const {
    if (f.size() != g.size() || static_cast<int>(f.size()) != k_)
        fail(errc::dimension_mismatch, "inner product length mismatch");
    Ratio acc;
    for (int i = 0; i < k_; ++i) acc += mass(i) * f[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(i)];
    return acc;
}

FiniteGraph::FiniteGraph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n <= 0) fail(errc::empty_graph, "graph has no vertices");
    for (auto [u, v] : edges) {
        if (u == v) fail(errc::loop_edge, "loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            fail(errc::parse_error, "edge endpoint outside [0," + std::to_string(n - 1) + "]");
        auto e = std::minmax(u, v);
        if (!edges_.insert({e.first, e.second}).second)
            fail(errc::duplicate_edge, "duplicate edge " + std::to_string(e.first) + " " + std::to_string(e.second));
    }
}

bool FiniteGraph::adjacent(int u, int v) const {
    if (u == v) return false;
    auto e = std::minmax(u, v);
    return edges_.count({e.first, e.second}) > 0;
}

int FiniteGraph::degree(int v) const {
    int d = 0;
    for (const auto& e : edges_)
        if (e.first == v || e.second == v) ++d;
    return d;
}

StepKernel graph_to_graphon(const FiniteGraph& g) {
    const int n = g.vertex_count();
    RatioVec masses(static_cast<std::size_t>(n), Ratio(1, n));
    RatioMat values(static_cast<std::size_t>(n), RatioVec(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            values[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = g.adjacent(i, j) ? ratio_one() : ratio_zero();
    return StepKernel::create(std::move(masses), std::move(values), true);
}

Coloring::Coloring(std::vector<int> color_of) : color_of_(std::move(color_of)) {
    // renumber by first occurrence so equal partitions have equal vectors
    std::map<int, int> renumber;
    for (int& c : color_of_) {
        const int next = static_cast<int>(renumber.size());
        c = renumber.try_emplace(c, next).first->second;
    }
    color_count_ = static_cast<int>(renumber.size());
}

Coloring Coloring::trivial(int class_count) {
    return Coloring(std::vector<int>(static_cast<std::size_t>(class_count), 0));
}

Coloring Coloring::discrete(int class_count) {
    std::vector<int> ids(static_cast<std::size_t>(class_count));
    for (int i = 0; i < class_count; ++i) ids[static_cast<std::size_t>(i)] = i;
    return Coloring(std::move(ids));
}

std::vector<std::vector<int>> Coloring::cells() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(color_count_));
    for (int i = 0; i < class_count(); ++i) out[static_cast<std::size_t>(color_of(i))].push_back(i);
    return out;
}

bool Coloring::refines(const Coloring& coarser) const {
    if (class_count() != coarser.class_count()) fail(errc::dimension_mismatch, "colorings of different class counts");
    // each of our colors must map into a single coarser color
    std::vector<int> image(static_cast<std::size_t>(color_count_), -1);
    for (int i = 0; i < class_count(); ++i) {
        int& img = image[static_cast<std::size_t>(color_of(i))];
        if (img == -1) img = coarser.color_of(i);
        else if (img != coarser.color_of(i)) return false;
    }
    return true;
}

} // namespace fractiso
