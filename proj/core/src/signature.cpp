#include "fractiso/signature.hpp"

#include <algorithm>

namespace fractiso {

IdmSignature IdmSignature::compose(int level, const std::vector<std::pair<IdmSignature, Ratio>>& sorted_entries) {
    std::string key = "[";
    for (std::size_t e = 0; e < sorted_entries.size(); ++e) {
        if (e > 0) key += ",";
        key += "(" + sorted_entries[e].first.key() + "," + sorted_entries[e].second.str() + ")";
    }
    key += "]";
    return IdmSignature(level, std::move(key));
}

namespace {

// all levels 0..n in one incremental pass
std::vector<std::vector<IdmSignature>> signature_levels(const StepKernel& w, int n) {
    const int k = w.class_count();
    std::vector<std::vector<IdmSignature>> levels;
    levels.emplace_back(static_cast<std::size_t>(k), IdmSignature::star());
    for (int level = 1; level <= n; ++level) {
        const auto& sigs = levels.back();
        std::map<IdmSignature, std::vector<int>> cells;
        for (int j = 0; j < k; ++j) cells[sigs[static_cast<std::size_t>(j)]].push_back(j);
        std::vector<IdmSignature> next;
        next.reserve(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) {
            std::vector<std::pair<IdmSignature, Ratio>> entries;
            for (const auto& [sig, members] : cells) {
                Ratio deg;
                for (int j : members) deg += w.value(i, j) * w.mass(j);
                if (!deg.is_zero()) entries.emplace_back(sig, std::move(deg));
            }
            next.push_back(IdmSignature::compose(level, entries));
        }
        levels.push_back(std::move(next));
    }
    return levels;
}

Didm didm_from_signatures(const StepKernel& w, const std::vector<IdmSignature>& sigs, int level) {
    Didm d;
    d.level = level;
    for (int i = 0; i < w.class_count(); ++i) d.atoms[sigs[static_cast<std::size_t>(i)]] += w.mass(i);
    return d;
}

} // namespace

std::vector<IdmSignature> signatures_at(const StepKernel& w, int n) {
    const int k = w.class_count();
    std::vector<IdmSignature> sigs(static_cast<std::size_t>(k), IdmSignature::star());
    for (int level = 1; level <= n; ++level) {
        // cells of the current signature partition, keyed canonically
        std::map<IdmSignature, std::vector<int>> cells;
        for (int j = 0; j < k; ++j) cells[sigs[static_cast<std::size_t>(j)]].push_back(j);
        std::vector<IdmSignature> next;
        next.reserve(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) {
            std::vector<std::pair<IdmSignature, Ratio>> entries;
            for (const auto& [sig, members] : cells) {
                Ratio deg;
                for (int j : members) deg += w.value(i, j) * w.mass(j);
                if (!deg.is_zero()) entries.emplace_back(sig, std::move(deg));
            }
            // map iteration order is already sorted by signature
            next.push_back(IdmSignature::compose(level, entries));
        }
        sigs = std::move(next);
    }
    return sigs;
}

Didm didm(const StepKernel& w, int n) {
    Didm d;
    d.level = n;
    auto sigs = signatures_at(w, n);
    for (int i = 0; i < w.class_count(); ++i) d.atoms[sigs[static_cast<std::size_t>(i)]] += w.mass(i);
    return d;
}

std::string Didm::report() const {
    std::string out;
    for (const auto& [sig, mass] : atoms) out += sig.key() + " " + mass.str() + "\n";
    return out;
}

DidmComparison didm_equal(const StepKernel& w, const StepKernel& u) {
    const int depth = std::max(refinement_fixpoint(w).stabilized_at, refinement_fixpoint(u).stabilized_at) + 1;
    const auto levels_w = signature_levels(w, depth);
    const auto levels_u = signature_levels(u, depth);
    DidmComparison cmp;
    for (int n = 0; n <= depth; ++n) {
        ++cmp.levels_compared;
        if (didm_from_signatures(w, levels_w[static_cast<std::size_t>(n)], n) !=
            didm_from_signatures(u, levels_u[static_cast<std::size_t>(n)], n)) {
            cmp.equal = false;
            cmp.distinguishing_level = n;
            return cmp;
        }
    }
    cmp.equal = true;
    return cmp;
}

Coloring coloring_from_signatures(const std::vector<IdmSignature>& sigs) {
    std::map<IdmSignature, int> ids;
    std::vector<int> color_of;
    color_of.reserve(sigs.size());
    for (const IdmSignature& s : sigs) {
        const int fresh = static_cast<int>(ids.size());
        color_of.push_back(ids.try_emplace(s, fresh).first->second);
    }
    return Coloring(std::move(color_of));
}

} // namespace fractiso
