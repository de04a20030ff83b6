#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fractiso/kernel.hpp"
#include "fractiso/signature.hpp"

namespace fractiso {

/// Quotient of a kernel by an invariant coloring. Quotient classes are in
/// canonical order (sorted by stabilized signature key); lift_map sends each
/// base class to its quotient class.
struct QuotientResult {
    StepKernel quotient;
    std::vector<int> lift_map;
    std::vector<IdmSignature> signature_labels;
};

/// E(W | C x C): the kernel on W's original classes whose block values are
/// the mass-weighted averages over color pairs. Refuses colorings that are
/// not invariant rather than averaging anyway.
StepKernel conditional_expectation(const StepKernel& w, const Coloring& c);

/// W/C on the coloring's colors: masses are summed class masses, values are
/// mass-weighted block averages. The conditional expectation is exactly the
/// lift of the quotient through lift_map.
QuotientResult quotient_kernel(const StepKernel& w, const Coloring& c);

/// Kernel on the signature atoms of a stabilized DIDM: value on (a,b) is the
/// mass any class of atom a sends into atom b's cell divided by b's mass,
/// i.e. the discrete Radon-Nikodym density. Equals the fixpoint quotient.
StepKernel kernel_from_didm(const Didm& d, const StepKernel& w);

/// Decision for characterization (3): the fixpoint quotients are isomorphic
/// iff the signature-matched bijection exists, preserves masses and
/// transports values exactly. matching pairs (w-quotient class, u-quotient
/// class).
struct QuotientIso {
    bool isomorphic = false;
    std::optional<std::vector<std::pair<int, int>>> matching;
};

QuotientIso quotients_isomorphic(const StepKernel& w, const StepKernel& u);

} // namespace fractiso
