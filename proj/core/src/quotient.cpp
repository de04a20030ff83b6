#include "fractiso/quotient.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "fractiso/refinement.hpp"

namespace fractiso {

namespace {

RatioVec color_masses(const StepKernel& w, const Coloring& c) {
    RatioVec m(static_cast<std::size_t>(c.color_count()));
    for (int i = 0; i < w.class_count(); ++i) m[static_cast<std::size_t>(c.color_of(i))] += w.mass(i);
    return m;
}

// Mass-weighted block averages over color pairs, indexed by color id.
RatioMat block_averages(const StepKernel& w, const Coloring& c, const RatioVec& m) {
    const std::size_t n = static_cast<std::size_t>(c.color_count());
    RatioMat avg(n, RatioVec(n));
    for (int i = 0; i < w.class_count(); ++i)
        for (int j = 0; j < w.class_count(); ++j)
            avg[static_cast<std::size_t>(c.color_of(i))][static_cast<std::size_t>(c.color_of(j))] +=
                w.mass(i) * w.mass(j) * w.value(i, j);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) avg[a][b] /= m[a] * m[b];
    return avg;
}

void require_invariant(const StepKernel& w, const Coloring& c) {
    if (c.class_count() != w.class_count())
        fail(errc::dimension_mismatch, "coloring does not match kernel class count");
    if (!is_invariant(w, c))
        fail(errc::not_invariant, "coloring is not invariant; conditional expectation refused");
}

} // namespace

StepKernel conditional_expectation(const StepKernel& w, const Coloring& c) {
    require_invariant(w, c);
    const RatioVec m = color_masses(w, c);
    const RatioMat avg = block_averages(w, c, m);
    RatioMat values(static_cast<std::size_t>(w.class_count()), RatioVec(static_cast<std::size_t>(w.class_count())));
    for (int i = 0; i < w.class_count(); ++i)
        for (int j = 0; j < w.class_count(); ++j)
            values[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                avg[static_cast<std::size_t>(c.color_of(i))][static_cast<std::size_t>(c.color_of(j))];
    return StepKernel::create(w.masses(), std::move(values), w.symmetric());
}

QuotientResult quotient_kernel(const StepKernel& w, const Coloring& c) {
    require_invariant(w, c);
    const RatioVec m = color_masses(w, c);
    const RatioMat avg = block_averages(w, c, m);

    // every color sits inside one fixpoint cell, so it carries a single
    // stabilized signature
    const RefinementTrace trace = refinement_fixpoint(w);
    const auto sigs = signatures_at(w, trace.stabilized_at);
    std::vector<std::optional<IdmSignature>> label(static_cast<std::size_t>(c.color_count()));
    for (int i = 0; i < w.class_count(); ++i) {
        auto& slot = label[static_cast<std::size_t>(c.color_of(i))];
        if (!slot) slot = sigs[static_cast<std::size_t>(i)];
        else if (*slot != sigs[static_cast<std::size_t>(i)])
            throw std::logic_error("invariant coloring with mixed signatures inside a color");
    }

    // canonical quotient class order: by signature key, ties by color id
    std::vector<int> order(static_cast<std::size_t>(c.color_count()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const auto& sa = *label[static_cast<std::size_t>(a)];
        const auto& sb = *label[static_cast<std::size_t>(b)];
        if (sa != sb) return sa < sb;
        return a < b;
    });
    std::vector<int> position(order.size());
    for (std::size_t p = 0; p < order.size(); ++p) position[static_cast<std::size_t>(order[p])] = static_cast<int>(p);

    RatioVec masses(order.size());
    RatioMat values(order.size(), RatioVec(order.size()));
    std::vector<IdmSignature> labels;
    labels.reserve(order.size());
    for (std::size_t p = 0; p < order.size(); ++p) {
        masses[p] = m[static_cast<std::size_t>(order[p])];
        labels.push_back(*label[static_cast<std::size_t>(order[p])]);
        for (std::size_t q = 0; q < order.size(); ++q)
            values[p][q] = avg[static_cast<std::size_t>(order[p])][static_cast<std::size_t>(order[q])];
    }
    QuotientResult result{StepKernel::create(std::move(masses), std::move(values), w.symmetric()),
                          std::vector<int>(static_cast<std::size_t>(w.class_count())), std::move(labels)};
    for (int i = 0; i < w.class_count(); ++i)
        result.lift_map[static_cast<std::size_t>(i)] = position[static_cast<std::size_t>(c.color_of(i))];

    // the conditional expectation must be exactly the lift of the quotient
    const StepKernel lifted = conditional_expectation(w, c);
    for (int i = 0; i < w.class_count(); ++i)
        for (int j = 0; j < w.class_count(); ++j)
            if (lifted.value(i, j) != result.quotient.value(result.lift_map[static_cast<std::size_t>(i)],
                                                            result.lift_map[static_cast<std::size_t>(j)]))
                throw std::logic_error("quotient lift disagrees with conditional expectation");
    return result;
}

StepKernel kernel_from_didm(const Didm& d, const StepKernel& w) {
    const RefinementTrace trace = refinement_fixpoint(w);
    const auto sigs = signatures_at(w, trace.stabilized_at);

    std::map<IdmSignature, std::vector<int>> cells;
    for (int i = 0; i < w.class_count(); ++i) cells[sigs[static_cast<std::size_t>(i)]].push_back(i);
    std::map<IdmSignature, Ratio> expected;
    for (const auto& [sig, members] : cells) {
        Ratio mass;
        for (int i : members) mass += w.mass(i);
        expected.emplace(sig, std::move(mass));
    }
    if (d.atoms != expected)
        fail(errc::inconsistent_didm, "atoms do not match the kernel's stabilized signatures");

    const std::size_t n = cells.size();
    RatioVec masses;
    masses.reserve(n);
    std::vector<int> representative;
    representative.reserve(n);
    for (const auto& [sig, members] : cells) {
        masses.push_back(expected.at(sig));
        representative.push_back(members.front());
    }
    RatioMat values(n, RatioVec(n));
    std::size_t b = 0;
    for (const auto& [sig, members] : cells) {
        for (std::size_t a = 0; a < n; ++a) {
            Ratio sent; // mass the representative of atom a sends into atom b's cell
            for (int j : members) sent += w.value(representative[a], j) * w.mass(j);
            values[a][b] = sent / masses[b];
        }
        ++b;
    }
    StepKernel result = StepKernel::create(std::move(masses), std::move(values), w.symmetric());

    const QuotientResult q = quotient_kernel(w, trace.fixpoint());
    if (!(result == q.quotient)) throw std::logic_error("DIDM kernel disagrees with fixpoint quotient");
    return result;
}

QuotientIso quotients_isomorphic(const StepKernel& w, const StepKernel& u) {
    if (!w.symmetric() || !u.symmetric())
        fail(errc::asymmetric_kernel, "quotient isomorphism is decided for graphons only");
    const QuotientResult qw = quotient_kernel(w, refinement_fixpoint(w).fixpoint());
    const QuotientResult qu = quotient_kernel(u, refinement_fixpoint(u).fixpoint());

    auto distinct = [](const std::vector<IdmSignature>& labels) {
        for (std::size_t i = 1; i < labels.size(); ++i)
            if (labels[i - 1] == labels[i]) return false;
        return true;
    };
    if (!distinct(qw.signature_labels) || !distinct(qu.signature_labels))
        throw std::logic_error("fixpoint quotient classes carry non-distinct signatures");

    QuotientIso iso;
    if (qw.signature_labels != qu.signature_labels) return iso;
    // labels agree in canonical order, so the only candidate matching is the
    // identity on quotient indices; it must transport masses and values
    if (!(qw.quotient == qu.quotient)) return iso;
    iso.isomorphic = true;
    std::vector<std::pair<int, int>> matching;
    for (int i = 0; i < qw.quotient.class_count(); ++i) matching.emplace_back(i, i);
    iso.matching = std::move(matching);
    return iso;
}

} // namespace fractiso
