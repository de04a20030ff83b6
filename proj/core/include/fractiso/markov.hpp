#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fractiso/kernel.hpp"

namespace fractiso {

/// Measure-weighted nonnegative kernel between two step spaces. It acts on
/// source functions by (Sf)(i) = sum_j s(i,j) * mu_src(j) * f(j); the Markov
/// conditions (unit row and adjoint sums) make it fix the constant one
/// function on both sides.
class MarkovKernel {
public:
    MarkovKernel(StepSpace source, StepSpace target, RatioMat matrix);

    const StepSpace& source() const { return source_; }
    const StepSpace& target() const { return target_; }
    const RatioMat& matrix() const { return matrix_; }
    const Ratio& entry(int i, int j) const { return matrix_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

    /// (Sf)(i) = sum_j s(i,j) mu_src(j) f(j). Exact.
    RatioVec apply(const RatioVec& f) const;

    /// Adjoint kernel s*(j,i) = s(i,j) with the spaces swapped.
    MarkovKernel adjoint() const;

private:
    StepSpace source_;
    StepSpace target_;
    RatioMat matrix_;
};

/// first o second as kernels (apply `second`, then `first`).
MarkovKernel compose(const MarkovKernel& first, const MarkovKernel& second);

/// Exact check of the three Markov invariants plus a float-mode contraction
/// smoke test on seeded random rational vectors.
bool verify_markov(const MarkovKernel& s);

/// Exact check of T_W o S = S o T_U on all basis indicators, with W on the
/// target space and U on the source space.
bool verify_intertwiner(const MarkovKernel& s, const StepKernel& w, const StepKernel& u);

/// Builds the intertwiner from matched fixpoint quotients: average over the
/// matched color of the source kernel, pull back to the target classes.
/// Returns std::nullopt when the kernels are not fractionally isomorphic.
/// The result always passes verify_intertwiner(result, w, u).
std::optional<MarkovKernel> build_intertwiner(const StepKernel& w, const StepKernel& u);

/// Float-mode Cesaro average (1/n) sum_{k<=n} (S o S*)^k, returned as the
/// plain row-stochastic action matrix (entries s(i,j) mu(j)). last_delta is
/// the max-norm step between the last two averages.
struct CesaroResult {
    std::vector<std::vector<double>> average;
    double last_delta = 0.0;
};

CesaroResult cesaro_projection(const MarkovKernel& s, int iterations);

} // namespace fractiso
