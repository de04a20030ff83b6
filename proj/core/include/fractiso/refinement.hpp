#pragma once

#include <vector>

#include "fractiso/kernel.hpp"

namespace fractiso {

/// Whether refinement keys use out-degrees only (the faithful reading of the
/// operator action) or are augmented with in-degrees. The distinction only
/// matters for asymmetric kernels.
enum class RefineMode { out_degree, out_and_in_degree };

/// The canonical coloring sequence from the trivial coloring to its fixpoint.
/// levels.front() is trivial, the last two recorded levels are equal
/// partitions, and stabilized_at is the index of the first stable level.
struct RefinementTrace {
    std::vector<Coloring> levels;
    int stabilized_at = 0;

    const Coloring& fixpoint() const { return levels.back(); }
};

/// One round of measure-weighted color refinement: classes keep a common
/// color iff they already shared one and their exact mass-weighted degree
/// vectors toward every color agree.
Coloring refine_once(const StepKernel& w, const Coloring& c, RefineMode mode = RefineMode::out_degree);

/// Iterates refine_once from the trivial coloring until two consecutive
/// levels are equal partitions. The final coloring is the coarsest
/// refinement-stable partition of the kernel's classes.
RefinementTrace refinement_fixpoint(const StepKernel& w, RefineMode mode = RefineMode::out_degree);

/// True iff refine_once leaves the partition unchanged.
bool is_invariant(const StepKernel& w, const Coloring& c, RefineMode mode = RefineMode::out_degree);

} // namespace fractiso
