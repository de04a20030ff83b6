#include "fractiso/refinement.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

namespace fractiso {

namespace {

// Degree of class i toward each color: sum over classes of that color of
// value(i,j) * mass(j). Dense vector indexed by color id, i.e. the sorted
// (color, degree) list of the canonical key.
RatioVec degrees_toward_colors(const StepKernel& w, const Coloring& c, int i, bool transpose) {
    RatioVec deg(static_cast<std::size_t>(c.color_count()));
    for (int j = 0; j < w.class_count(); ++j) {
        const Ratio& v = transpose ? w.value(j, i) : w.value(i, j);
        deg[static_cast<std::size_t>(c.color_of(j))] += v * w.mass(j);
    }
    return deg;
}

} // namespace

Coloring refine_once(const StepKernel& w, const Coloring& c, RefineMode mode) {
    if (c.class_count() != w.class_count())
        fail(errc::dimension_mismatch, "coloring does not match kernel class count");
    const bool with_in = mode == RefineMode::out_and_in_degree && !w.symmetric();
    using Key = std::tuple<int, RatioVec, RatioVec>;
    std::map<Key, int> ids;
    std::vector<int> next(static_cast<std::size_t>(w.class_count()));
    for (int i = 0; i < w.class_count(); ++i) {
        Key key{c.color_of(i), degrees_toward_colors(w, c, i, false),
                with_in ? degrees_toward_colors(w, c, i, true) : RatioVec{}};
        const int fresh = static_cast<int>(ids.size());
        next[static_cast<std::size_t>(i)] = ids.try_emplace(std::move(key), fresh).first->second;
    }
    return Coloring(std::move(next));
}

RefinementTrace refinement_fixpoint(const StepKernel& w, RefineMode mode) {
    RefinementTrace trace;
    trace.levels.push_back(Coloring::trivial(w.class_count()));
    for (;;) {
        Coloring next = refine_once(w, trace.levels.back(), mode);
        const bool stable = next == trace.levels.back();
        trace.levels.push_back(std::move(next));
        if (stable) {
            trace.stabilized_at = static_cast<int>(trace.levels.size()) - 2;
            break;
        }
    }
    return trace;
}

bool is_invariant(const StepKernel& w, const Coloring& c, RefineMode mode) {
    return refine_once(w, c, mode) == c;
}

} // namespace fractiso
