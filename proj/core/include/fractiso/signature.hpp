#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fractiso/kernel.hpp"
#include "fractiso/refinement.hpp"

namespace fractiso {

/// Canonical per-class key of the level-n iterated degree measure. Level 0
/// is the unique atom "*"; level n+1 is the sorted list of
/// (level-n signature, exact mass-weighted degree toward that signature's
/// cell) pairs, zero degrees omitted. The key text is the deterministic
/// nested-list serialization with "p/q" scalars, so keys compare across
/// kernels.
class IdmSignature {
public:
    static IdmSignature star() { return IdmSignature(0, "*"); }
    static IdmSignature compose(int level, const std::vector<std::pair<IdmSignature, Ratio>>& sorted_entries);

    int level() const { return level_; }
    const std::string& key() const { return key_; }

    friend bool operator==(const IdmSignature& a, const IdmSignature& b) {
        return a.level_ == b.level_ && a.key_ == b.key_;
    }
    friend std::strong_ordering operator<=>(const IdmSignature& a, const IdmSignature& b) {
        if (a.level_ != b.level_) return a.level_ <=> b.level_;
        return a.key_.compare(b.key_) <=> 0;
    }

private:
    IdmSignature(int level, std::string key) : level_(level), key_(std::move(key)) {}
    int level_;
    std::string key_;
};

/// Distribution on iterated degree measures at a fixed level: signature
/// atoms with their total masses. This is the discrete nu_W.
struct Didm {
    int level = 0;
    std::map<IdmSignature, Ratio> atoms;

    friend bool operator==(const Didm&, const Didm&) = default;

    /// Deterministic report form, one "key mass" line per atom.
    std::string report() const;
};

/// Outcome of the DIDM comparison. When unequal, level is the least level at
/// which the distributions differ.
struct DidmComparison {
    bool equal = false;
    std::optional<int> distinguishing_level;
    int levels_compared = 0;
};

/// Per-class level-n signatures. Two classes share a level-n signature iff
/// they share a color at level n of the refinement sequence.
std::vector<IdmSignature> signatures_at(const StepKernel& w, int n);

/// Signature atoms with summed class masses at level n.
Didm didm(const StepKernel& w, int n);

/// Decides nu_W = nu_U by comparing level distributions up to one level past
/// joint refinement stabilization; for step kernels that depth is conclusive.
DidmComparison didm_equal(const StepKernel& w, const StepKernel& u);

/// The coloring induced by signature equality (bridge to the refinement
/// sequence).
Coloring coloring_from_signatures(const std::vector<IdmSignature>& sigs);

} // namespace fractiso
