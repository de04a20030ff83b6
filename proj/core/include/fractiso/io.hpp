#pragma once

#include <optional>
#include <string>
#include <utility>

#include "fractiso/blowup.hpp"
#include "fractiso/kernel.hpp"
#include "fractiso/quotient.hpp"
#include "fractiso/refinement.hpp"
#include "fractiso/signature.hpp"
#include "fractiso/trees.hpp"

namespace fractiso {

/// Class-count cap applied at ingestion; FRACTISO_MAX_CLASSES overrides the
/// default of 512.
int max_classes_cap();

/// Kernel file: {"masses": [...], "matrix": [[...]], "symmetric": bool} with
/// scalars given as integers, "p/q" strings, or decimal strings. Decimal
/// strings convert exactly; non-integer JSON numbers are rejected because
/// binary floats are not exact.
StepKernel parse_kernel_json(const std::string& text);

/// Canonical bytes: lowest-terms "p/q" scalars, fixed field order, two-space
/// indent, trailing newline. parse o serialize is the identity on canonical
/// files and serialize o parse is idempotent canonicalization.
std::string kernel_to_json(const StepKernel& w);

/// Whitespace-separated edge list with a "n <count>" header and 0-based
/// "u v" lines.
FiniteGraph parse_edge_list(const std::string& text);

/// Kernel JSON plus a "signature_labels" section.
std::string quotient_to_json(const QuotientResult& q);

/// Blowup plan: {"base": <kernel>, "splits": [...], "seeds": [[...]]}.
BlowupPlan parse_plan_json(const std::string& text);
std::string plan_to_json(const BlowupPlan& plan);

std::string trace_to_json(const RefinementTrace& trace, bool symmetric);

struct FisoOptions {
    int witness_bound = 8;
    bool run_quotient = true;
    bool run_intertwiner = true;
    bool run_witness = true;
    bool parallel = false;
};

/// Everything cli_fiso reports. The DIDM comparison is the authoritative
/// verdict; the other oracles are cross-checks and a disagreement among them
/// is an internal defect, not a tie to break.
struct FisoReport {
    bool verdict = false;
    DidmComparison didm;
    Didm didm_a, didm_b; // at each input's stabilization level
    std::optional<QuotientIso> quotient;
    std::optional<bool> intertwiner_built;
    std::optional<bool> intertwiner_verified;
    bool witness_ran = false;
    int witness_bound = 8;
    std::optional<RootedTree> witness;
    std::optional<std::pair<Ratio, Ratio>> witness_densities;
    std::optional<RefinementTrace> trace_a, trace_b;
    std::optional<QuotientResult> quotient_a, quotient_b;
};

/// Runs the decision procedures and cross-checks them. Throws
/// std::logic_error on oracle disagreement.
FisoReport run_fiso(const StepKernel& a, const StepKernel& b, const FisoOptions& options = {});

std::string fiso_report_to_json(const FisoReport& report);

} // namespace fractiso
