#include "fractiso/blowup.hpp"

#include <numeric>
#include <stdexcept>

namespace fractiso {

namespace {

// SplitMix64; the one PRNG used for all seeded generation (documented in the
// README so plan files replay identically everywhere).
std::uint64_t sm64_next(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t bounded(std::uint64_t& state, std::uint64_t n) { return sm64_next(state) % n; }

std::vector<int> random_permutation(std::uint64_t& state, int m) {
    std::vector<int> p(static_cast<std::size_t>(m));
    std::iota(p.begin(), p.end(), 0);
    for (int i = m - 1; i > 0; --i)
        std::swap(p[static_cast<std::size_t>(i)], p[bounded(state, static_cast<std::uint64_t>(i) + 1)]);
    return p;
}

void check_means(const BiregularBlock& b) {
    const int rows = static_cast<int>(b.entries.size());
    const int cols = rows > 0 ? static_cast<int>(b.entries.front().size()) : 0;
    for (int r = 0; r < rows; ++r) {
        Ratio sum;
        for (int c = 0; c < cols; ++c) sum += b.entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        if (sum != b.q * Ratio(cols)) throw std::logic_error("biregular block row mean is off");
    }
    for (int c = 0; c < cols; ++c) {
        Ratio sum;
        for (int r = 0; r < rows; ++r) sum += b.entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        if (sum != b.q * Ratio(rows)) throw std::logic_error("biregular block column mean is off");
    }
    for (const auto& row : b.entries)
        for (const Ratio& v : row)
            if (!in_unit_interval(v)) throw std::logic_error("biregular block entry outside [0,1]");
}

} // namespace

std::vector<std::vector<std::uint64_t>> derive_seed_table(std::uint64_t master, int k) {
    std::vector<std::vector<std::uint64_t>> seeds(static_cast<std::size_t>(k),
                                                  std::vector<std::uint64_t>(static_cast<std::size_t>(k), 0));
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) {
            std::uint64_t state = master ^ (static_cast<std::uint64_t>(i + 1) * 0x100000001B3ULL +
                                            static_cast<std::uint64_t>(j + 1));
            const std::uint64_t s = sm64_next(state);
            seeds[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s;
            seeds[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = s;
        }
    return seeds;
}

BlowupPlan make_plan(StepKernel base, std::vector<int> splits, std::vector<std::vector<std::uint64_t>> block_seeds) {
    if (!base.symmetric()) fail(errc::asymmetric_kernel, "blowup base must be a graphon");
    const std::size_t k = static_cast<std::size_t>(base.class_count());
    if (splits.size() != k) fail(errc::dimension_mismatch, "one split per base class required");
    for (int m : splits)
        if (m < 1) fail(errc::dimension_mismatch, "splits must be at least 1");
    if (block_seeds.size() != k) fail(errc::dimension_mismatch, "seed table must be k x k");
    for (const auto& row : block_seeds)
        if (row.size() != k) fail(errc::dimension_mismatch, "seed table must be k x k");
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (block_seeds[i][j] != block_seeds[j][i]) fail(errc::parse_error, "seed table is not symmetric");
    return BlowupPlan{std::move(base), std::move(splits), std::move(block_seeds)};
}

BiregularBlock random_biregular_block(const Ratio& q, int rows, int cols, std::uint64_t seed, bool symmetric) {
    if (!in_unit_interval(q)) fail(errc::q_out_of_range, "block density " + q.str() + " outside [0,1]");
    if (symmetric && rows != cols) fail(errc::dimension_mismatch, "symmetric block must be square");
    BiregularBlock block{q, RatioMat(static_cast<std::size_t>(rows), RatioVec(static_cast<std::size_t>(cols), q))};

    if (rows == cols && rows > 1 && !q.is_zero()) {
        std::uint64_t state = seed;
        const int m = rows;
        const int t = 3;
        std::vector<std::vector<int>> perms;
        RatioVec weights;
        long weight_total = 0;
        std::vector<long> raw;
        for (int l = 0; l < t; ++l) {
            perms.push_back(random_permutation(state, m));
            raw.push_back(1 + static_cast<long>(bounded(state, 8)));
            weight_total += raw.back();
        }
        for (long r : raw) weights.push_back(Ratio(r, weight_total));

        // candidate q*m*(convex combination of permutation patterns); falls
        // back to the constant block when an entry would leave [0,1]
        RatioMat candidate(static_cast<std::size_t>(m), RatioVec(static_cast<std::size_t>(m)));
        for (int l = 0; l < t; ++l)
            for (int r = 0; r < m; ++r) {
                const int c = perms[static_cast<std::size_t>(l)][static_cast<std::size_t>(r)];
                if (symmetric) {
                    const Ratio half = weights[static_cast<std::size_t>(l)] / Ratio(2);
                    candidate[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] += half;
                    candidate[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)] += half;
                } else {
                    candidate[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] +=
                        weights[static_cast<std::size_t>(l)];
                }
            }
        const Ratio scale = q * Ratio(m);
        bool ok = true;
        for (auto& row : candidate)
            for (Ratio& v : row) {
                v *= scale;
                if (!in_unit_interval(v)) ok = false;
            }
        if (ok) block.entries = std::move(candidate);
    }
    check_means(block);
    return block;
}

StepKernel blowup(const BlowupPlan& plan) {
    const int k = plan.base.class_count();
    int total = 0;
    std::vector<int> offset(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k; ++i) {
        offset[static_cast<std::size_t>(i)] = total;
        total += plan.splits[static_cast<std::size_t>(i)];
    }

    RatioVec masses(static_cast<std::size_t>(total));
    for (int i = 0; i < k; ++i)
        for (int r = 0; r < plan.splits[static_cast<std::size_t>(i)]; ++r)
            masses[static_cast<std::size_t>(offset[static_cast<std::size_t>(i)] + r)] =
                plan.base.mass(i) / Ratio(plan.splits[static_cast<std::size_t>(i)]);

    RatioMat values(static_cast<std::size_t>(total), RatioVec(static_cast<std::size_t>(total)));
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) {
            const int mi = plan.splits[static_cast<std::size_t>(i)];
            const int mj = plan.splits[static_cast<std::size_t>(j)];
            const BiregularBlock block = random_biregular_block(
                plan.base.value(i, j), mi, mj, plan.block_seeds[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                /*symmetric=*/i == j);
            for (int r = 0; r < mi; ++r)
                for (int c = 0; c < mj; ++c) {
                    const Ratio& v = block.entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
                    values[static_cast<std::size_t>(offset[static_cast<std::size_t>(i)] + r)]
                          [static_cast<std::size_t>(offset[static_cast<std::size_t>(j)] + c)] = v;
                    values[static_cast<std::size_t>(offset[static_cast<std::size_t>(j)] + c)]
                          [static_cast<std::size_t>(offset[static_cast<std::size_t>(i)] + r)] = v;
                }
        }
    return StepKernel::create(std::move(masses), std::move(values), true);
}

std::pair<StepKernel, StepKernel> fiso_pair(const BlowupPlan& plan_a, const BlowupPlan& plan_b) {
    if (!(plan_a.base == plan_b.base)) fail(errc::base_mismatch, "plans must share the base kernel");
    return {blowup(plan_a), blowup(plan_b)};
}

Coloring base_class_coloring(const BlowupPlan& plan) {
    std::vector<int> color_of;
    for (int i = 0; i < plan.base.class_count(); ++i)
        color_of.insert(color_of.end(), static_cast<std::size_t>(plan.splits[static_cast<std::size_t>(i)]), i);
    return Coloring(std::move(color_of));
}

} // namespace fractiso
