#pragma once

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "fractiso/ratio.hpp"

namespace fractiso {

/// Finite measure space with positive class masses summing to one.
struct StepSpace {
    RatioVec masses;

    int class_count() const { return static_cast<int>(masses.size()); }
    friend bool operator==(const StepSpace&, const StepSpace&) = default;
};

/// Kernel constant on the blocks of a finite product partition: class masses
/// plus a value matrix with entries in [0,1]. Symmetric instances are
/// graphons. Immutable after construction.
class StepKernel {
public:
    /// Validates and builds. The symmetric flag stored on the result always
    /// reflects the matrix itself; declaring symmetry for an asymmetric
    /// matrix is an error, declaring asymmetry for a symmetric one is
    /// silently canonicalized to true.
    static StepKernel create(RatioVec masses, RatioMat values, bool declared_symmetric);

    int class_count() const { return k_; }
    const Ratio& mass(int i) const { return masses_[static_cast<std::size_t>(i)]; }
    const RatioVec& masses() const { return masses_; }
    const Ratio& value(int i, int j) const { return values_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    const RatioMat& values() const { return values_; }
    bool symmetric() const { return symmetric_; }

    StepSpace space() const { return StepSpace{masses_}; }

    /// T_W f: result(i) = sum_j values(i,j) * masses(j) * f(j). Exact.
    RatioVec apply(const RatioVec& f) const;

    /// Row degree sum_j values(i,j) * masses(j).
    Ratio degree(int i) const;

    /// <f,g>_mu = sum_i masses(i) f(i) g(i).
    Ratio inner(const RatioVec& f, const RatioVec& g) const;

    friend bool operator==(const StepKernel&, const StepKernel&) = default;

private:
    StepKernel(RatioVec masses, RatioMat values, bool symmetric)
        : k_(static_cast<int>(masses.size())), masses_(std::move(masses)), values_(std::move(values)), symmetric_(symmetric) {}

    int k_;
    RatioVec masses_;
    RatioMat values_;
    bool symmetric_;
};

/// Simple undirected graph without loops or parallel edges.
class FiniteGraph {
public:
    FiniteGraph(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    const std::set<std::pair<int, int>>& edges() const { return edges_; }
    bool adjacent(int u, int v) const;
    int degree(int v) const;

private:
    int n_;
    std::set<std::pair<int, int>> edges_; // stored with first < second
};

/// Graphon representation W_G: one class per vertex, uniform masses, 0/1 values.
StepKernel graph_to_graphon(const FiniteGraph& g);

/// Partition of a kernel's classes into colors. Color ids are canonical:
/// contiguous and numbered by first occurrence in class order, so two
/// colorings are the same partition iff their vectors are equal.
class Coloring {
public:
    explicit Coloring(std::vector<int> color_of);

    static Coloring trivial(int class_count);
    static Coloring discrete(int class_count);

    int class_count() const { return static_cast<int>(color_of_.size()); }
    int color_count() const { return color_count_; }
    int color_of(int i) const { return color_of_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& colors() const { return color_of_; }

    /// Classes of one color, in class order.
    std::vector<std::vector<int>> cells() const;

    /// True when every cell of this coloring is contained in a cell of
    /// `coarser`.
    bool refines(const Coloring& coarser) const;

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    std::vector<int> color_of_;
    int color_count_ = 0;
};

} // namespace fractiso
