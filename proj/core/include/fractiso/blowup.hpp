#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fractiso/kernel.hpp"

namespace fractiso {

/// Block with every row mean and column mean exactly equal to q (sub-masses
/// are uniform, so means are plain averages).
struct BiregularBlock {
    Ratio q;
    RatioMat entries;
};

/// Recipe for a biregular blowup of a symmetric base kernel: the number of
/// equal-mass sub-classes per base class and a symmetric table of block
/// seeds.
struct BlowupPlan {
    StepKernel base;
    std::vector<int> splits;
    std::vector<std::vector<std::uint64_t>> block_seeds;
};

/// Validated plan; checks split positivity and seed-table symmetry.
BlowupPlan make_plan(StepKernel base, std::vector<int> splits, std::vector<std::vector<std::uint64_t>> block_seeds);

/// Derives a symmetric seed table from one master seed (SplitMix64 mixing).
std::vector<std::vector<std::uint64_t>> derive_seed_table(std::uint64_t master, int k);

/// Draws a biregular block: q-scaled convex combination of permutation
/// patterns when the entries stay within [0,1], constant q otherwise (and
/// always for rectangular blocks). Row and column means are re-verified
/// exactly before returning. Deterministic for a fixed seed.
BiregularBlock random_biregular_block(const Ratio& q, int rows, int cols, std::uint64_t seed, bool symmetric);

/// Assembles the blowup kernel: sub-class masses mu_i / m_i, block (i,j)
/// drawn with target density base(i,j), off-diagonal blocks generated once
/// and transposed into place.
StepKernel blowup(const BlowupPlan& plan);

/// Two blowups of one base, guaranteed fractionally isomorphic.
std::pair<StepKernel, StepKernel> fiso_pair(const BlowupPlan& plan_a, const BlowupPlan& plan_b);

/// The coloring grouping sub-classes by their base class.
Coloring base_class_coloring(const BlowupPlan& plan);

} // namespace fractiso
