#include "fractiso/markov.hpp"

#include <cmath>
#include <stdexcept>

#include "fractiso/quotient.hpp"
#include "fractiso/refinement.hpp"

namespace fractiso {

namespace {

void check_space(const StepSpace& sp) {
    if (sp.masses.empty()) fail(errc::masses_not_one, "step space has no classes");
    Ratio total;
    for (const Ratio& m : sp.masses) {
        if (m.sign() <= 0) fail(errc::non_positive_mass, "class mass " + m.str() + " is not positive");
        total += m;
    }
    if (total != ratio_one()) fail(errc::masses_not_one, "masses sum to " + total.str());
}

// splitmix64, used for the seeded contraction smoke test
std::uint64_t mix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace

MarkovKernel::MarkovKernel(StepSpace source, StepSpace target, RatioMat matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    check_space(source_);
    check_space(target_);
    if (matrix_.size() != static_cast<std::size_t>(target_.class_count()))
        fail(errc::dimension_mismatch, "matrix row count differs from target class count");
    for (const RatioVec& row : matrix_)
        if (row.size() != static_cast<std::size_t>(source_.class_count()))
            fail(errc::dimension_mismatch, "matrix column count differs from source class count");
}

RatioVec MarkovKernel::apply(const RatioVec& f) const {
    if (f.size() != static_cast<std::size_t>(source_.class_count()))
        fail(errc::dimension_mismatch, "vector length differs from source class count");
    RatioVec out(static_cast<std::size_t>(target_.class_count()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        Ratio acc;
        for (std::size_t j = 0; j < f.size(); ++j) acc += matrix_[i][j] * source_.masses[j] * f[j];
        out[i] = acc;
    }
    return out;
}

MarkovKernel MarkovKernel::adjoint() const {
    RatioMat t(static_cast<std::size_t>(source_.class_count()),
               RatioVec(static_cast<std::size_t>(target_.class_count())));
    for (std::size_t i = 0; i < matrix_.size(); ++i)
        for (std::size_t j = 0; j < matrix_[i].size(); ++j) t[j][i] = matrix_[i][j];
    return MarkovKernel(target_, source_, std::move(t));
}

MarkovKernel compose(const MarkovKernel& first, const MarkovKernel& second) {
    if (!(second.target() == first.source()))
        fail(errc::dimension_mismatch, "composition spaces do not line up");
    const auto& mid = first.source().masses;
    RatioMat out(static_cast<std::size_t>(first.target().class_count()),
                 RatioVec(static_cast<std::size_t>(second.source().class_count())));
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t k = 0; k < out[i].size(); ++k) {
            Ratio acc;
            for (std::size_t j = 0; j < mid.size(); ++j)
                acc += first.entry(static_cast<int>(i), static_cast<int>(j)) * mid[j] *
                       second.entry(static_cast<int>(j), static_cast<int>(k));
            out[i][k] = acc;
        }
    return MarkovKernel(second.source(), first.target(), std::move(out));
}

bool verify_markov(const MarkovKernel& s) {
    const auto& src = s.source().masses;
    const auto& tgt = s.target().masses;
    for (const RatioVec& row : s.matrix())
        for (const Ratio& v : row)
            if (v.sign() < 0) return false;
    for (std::size_t i = 0; i < s.matrix().size(); ++i) {
        Ratio row_sum;
        for (std::size_t j = 0; j < src.size(); ++j) row_sum += s.matrix()[i][j] * src[j];
        if (row_sum != ratio_one()) return false;
    }
    for (std::size_t j = 0; j < src.size(); ++j) {
        Ratio col_sum;
        for (std::size_t i = 0; i < tgt.size(); ++i) col_sum += tgt[i] * s.matrix()[i][j];
        if (col_sum != ratio_one()) return false;
    }
    // contraction smoke test, float mode: ||Sf||_mu <= ||f||_mu
    std::uint64_t state = 0x5eed0f1503u;
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<double> f(src.size());
        for (double& x : f) {
            const long num = static_cast<long>(mix64(state) % 2001) - 1000;
            const long den = 1 + static_cast<long>(mix64(state) % 50);
            x = static_cast<double>(num) / static_cast<double>(den);
        }
        double in_norm = 0, out_norm = 0;
        std::vector<double> g(tgt.size(), 0.0);
        for (std::size_t i = 0; i < tgt.size(); ++i)
            for (std::size_t j = 0; j < src.size(); ++j)
                g[i] += s.entry(static_cast<int>(i), static_cast<int>(j)).to_double() * src[j].to_double() * f[j];
        for (std::size_t j = 0; j < src.size(); ++j) in_norm += src[j].to_double() * f[j] * f[j];
        for (std::size_t i = 0; i < tgt.size(); ++i) out_norm += tgt[i].to_double() * g[i] * g[i];
        if (out_norm > in_norm * (1.0 + 1e-9) + 1e-12) return false;
    }
    return true;
}

bool verify_intertwiner(const MarkovKernel& s, const StepKernel& w, const StepKernel& u) {
    if (!(s.target() == w.space()) || !(s.source() == u.space()))
        fail(errc::dimension_mismatch, "kernels do not live on the intertwiner's spaces");
    if (!verify_markov(s)) return false;
    // T_W o S = S o T_U on basis indicators, common factor mu_src(j) divided out
    for (int i = 0; i < w.class_count(); ++i)
        for (int j = 0; j < u.class_count(); ++j) {
            Ratio lhs;
            for (int m = 0; m < w.class_count(); ++m) lhs += w.value(i, m) * w.mass(m) * s.entry(m, j);
            Ratio rhs;
            for (int l = 0; l < u.class_count(); ++l) rhs += s.entry(i, l) * u.mass(l) * u.value(l, j);
            if (lhs != rhs) return false;
        }
    return true;
}

std::optional<MarkovKernel> build_intertwiner(const StepKernel& w, const StepKernel& u) {
    if (!w.symmetric() || !u.symmetric()) fail(errc::asymmetric_kernel, "intertwiners are built for graphons");
    const QuotientResult qw = quotient_kernel(w, refinement_fixpoint(w).fixpoint());
    const QuotientResult qu = quotient_kernel(u, refinement_fixpoint(u).fixpoint());
    if (qw.signature_labels != qu.signature_labels || !(qw.quotient == qu.quotient)) return std::nullopt;
    // signatures matched in canonical order, so the matching is the identity
    // on quotient indices; expand it through both lift maps
    RatioMat matrix(static_cast<std::size_t>(w.class_count()), RatioVec(static_cast<std::size_t>(u.class_count())));
    for (int x = 0; x < w.class_count(); ++x)
        for (int y = 0; y < u.class_count(); ++y) {
            const int wq = qw.lift_map[static_cast<std::size_t>(x)];
            const int uq = qu.lift_map[static_cast<std::size_t>(y)];
            if (wq == uq) matrix[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
                ratio_one() / qu.quotient.mass(uq);
        }
    MarkovKernel s(u.space(), w.space(), std::move(matrix));
    if (!verify_intertwiner(s, w, u)) throw std::logic_error("constructed intertwiner failed verification");
    return s;
}

CesaroResult cesaro_projection(const MarkovKernel& s, int iterations) {
    if (!(s.source() == s.target()))
        fail(errc::dimension_mismatch, "Cesaro projection needs equal source and target spaces");
    if (iterations < 1) fail(errc::dimension_mismatch, "iteration count must be positive");
    const std::size_t n = static_cast<std::size_t>(s.source().class_count());
    const auto& mu = s.source().masses;

    // plain action matrices: act(S)(i,j) = s(i,j) mu(j), act(S*)(i,j) = s(j,i) mu(j)
    std::vector<std::vector<double>> act_s(n, std::vector<double>(n, 0.0));
    std::vector<std::vector<double>> act_adj(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            act_s[i][j] = s.entry(static_cast<int>(i), static_cast<int>(j)).to_double() * mu[j].to_double();
            act_adj[i][j] = s.entry(static_cast<int>(j), static_cast<int>(i)).to_double() * mu[j].to_double();
        }

    auto matmul = [n](const std::vector<std::vector<double>>& x, const std::vector<std::vector<double>>& y) {
        std::vector<std::vector<double>> out(n, std::vector<double>(n, 0.0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) {
                const double xl = x[i][l];
                if (xl == 0.0) continue;
                for (std::size_t j = 0; j < n; ++j) out[i][j] += xl * y[l][j];
            }
        return out;
    };
    auto scaled = [n](std::vector<std::vector<double>> mtx, double factor) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) mtx[i][j] *= factor;
        return mtx;
    };

    // act(S o S*) applies the adjoint first
    const std::vector<std::vector<double>> a = matmul(act_s, act_adj);
    std::vector<std::vector<double>> power = a;
    std::vector<std::vector<double>> sum = a;
    std::vector<std::vector<double>> prev_avg = a;
    for (int k = 2; k <= iterations; ++k) {
        if (k == iterations) prev_avg = scaled(sum, 1.0 / (k - 1));
        power = matmul(power, a);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) sum[i][j] += power[i][j];
    }
    CesaroResult result;
    result.average = scaled(std::move(sum), 1.0 / iterations);
    double delta = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) delta = std::max(delta, std::abs(result.average[i][j] - prev_avg[i][j]));
    result.last_delta = iterations == 1 ? 0.0 : delta;
    return result;
}

} // namespace fractiso
