///
/// \file diagnostics.hpp
///
/// Measurable proxies for the recovery conditions: incoherence of the
/// measurement vectors (mu0) and of the lifted target (mu1), conditioning,
/// the local restricted-isometry defect on the tangent space, and the
/// spectral distance of the initialization.
///
/// These are advisory. The solver never gates on them.
///
#ifndef VHLFIHT_DIAGNOSTICS_HPP
#define VHLFIHT_DIAGNOSTICS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>

#include <Eigen/SVD>

#include "vhlfiht/hankel.hpp"
#include "vhlfiht/lowrank.hpp"
#include "vhlfiht/model.hpp"
#include "vhlfiht/solver.hpp"
#include "vhlfiht/types.hpp"

namespace vhlfiht
{

struct AssumptionReport
{
    double mu0                    = 0.0;
    double mu1                    = 0.0;
    double kappa                  = 1.0;
    double sigma_r                = 0.0;
    double rip_norm_estimate      = 0.0;
    double rip_tolerance          = 0.0;  ///< last relative change of the power iteration
    double init_spectral_distance = 0.0;
};

/// Result of a power iteration.
struct NormEstimate
{
    double value     = 0.0;
    double rel_change = 0.0;
    Index iterations = 0;
};

/// `max_{j,l} |b_j[l]|^2`.
inline double measure_mu0(const Matrix& b)
{
    detail::require(b.size() > 0, "measure_mu0: B is empty");
    return b.cwiseAbs2().maxCoeff();
}

/// `n/r * max(max_i ||U_i||_F^2, max_j ||V(j,:)||^2)` with `U_i` the i-th
/// block of s rows.
inline double measure_mu1(const LowRankFactors& factors, const HankelDims& dims)
{
    detail::require(factors.U.rows() == dims.rows() && factors.V.rows() == dims.n2,
                    "measure_mu1: factors do not match dims");
    const Index r = factors.rank();
    detail::require(r >= 1, "measure_mu1: empty factors");

    double worst = 0.0;
    for (Index i = 0; i < dims.n1; ++i)
    {
        worst = std::max(worst, factors.U.middleRows(i * dims.s, dims.s).squaredNorm());
    }
    worst = std::max(worst, factors.V.rowwise().squaredNorm().maxCoeff());
    return static_cast<double>(dims.n) / static_cast<double>(r) * worst;
}

namespace detail
{

inline Matrix random_complex(Index rows, Index cols, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix m(rows, cols);
    for (Index j = 0; j < cols; ++j)
    {
        for (Index i = 0; i < rows; ++i)
        {
            const double re = normal(rng);
            const double im = normal(rng);
            m(i, j)         = Complex(re, im);
        }
    }
    return m;
}

/// Power iteration for the norm of a self-adjoint operator.
template <typename Op>
NormEstimate power_norm(Op&& op, Matrix start, Index iters)
{
    NormEstimate est;
    const double start_norm = start.norm();
    if (start_norm == 0.0)
    {
        return est;
    }
    Matrix z = start / start_norm;
    for (Index it = 0; it < iters; ++it)
    {
        Matrix w          = op(z);
        const double norm = w.norm();
        est.iterations    = it + 1;
        est.rel_change    = est.value > 0.0 ? std::abs(norm - est.value) / est.value : 1.0;
        est.value         = norm;
        if (norm == 0.0)
        {
            est.rel_change = 0.0;
            break;
        }
        z = w / norm;
    }
    return est;
}

} // namespace detail

///
/// Power-iteration estimate of `|| P_T (G G^* - G A^*A G^*) P_T ||`.
///
/// `normal_op` applies `A^*A` to a signal matrix; override it to probe the
/// estimator with a known operator.
///
template <typename NormalOp>
NormEstimate estimate_rip_norm_detail(const HankelDims& dims, const TangentSpace& t,
                                      Index iters, NormalOp&& normal_op,
                                      std::uint64_t seed = 0x71b)
{
    detail::require(iters >= 1, "estimate_rip_norm: iters must be positive");
    detail::require(t.U.rows() == dims.rows() && t.V.rows() == dims.cols(),
                    "estimate_rip_norm: tangent space does not match dims");
    auto op = [&](const Matrix& z) {
        const Matrix zt   = project_tangent(z, t);
        const Matrix back = g_star(zt, dims);
        const Matrix diff = g_apply(back - normal_op(back), dims);
        return project_tangent(diff, t);
    };
    return detail::power_norm(op, detail::random_complex(dims.rows(), dims.cols(), seed),
                              iters);
}

inline double estimate_rip_norm(const Matrix& b, const HankelDims& dims, const TangentSpace& t,
                                Index iters = 200)
{
    detail::require(b.rows() == dims.s && b.cols() == dims.n,
                    "estimate_rip_norm: B does not match dims");
    return estimate_rip_norm_detail(dims, t, iters, [&b](const Matrix& x) {
               return adjoint_measure(measure(x, b), b);
           }).value;
}

/// Power-iteration estimate of the spectral norm `||Z_a - Z_b||`.
inline double spectral_distance(const Matrix& za, const Matrix& zb, Index iters = 200)
{
    detail::require(za.rows() == zb.rows() && za.cols() == zb.cols(),
                    "spectral_distance: shape mismatch");
    const Matrix diff = za - zb;
    if (diff.size() == 0)
    {
        return 0.0;
    }
    auto gram = [&diff](const Matrix& v) -> Matrix { return diff.adjoint() * (diff * v); };
    const NormEstimate est =
        detail::power_norm(gram, detail::random_complex(diff.cols(), 1, 0x5d), iters);
    return std::sqrt(est.value);
}

///
/// Every diagnostic for a synthesized instance. Uses a dense SVD of the
/// lifted target, so it is meant for desk-scale sizes.
///
inline AssumptionReport assumption_report(const PointSourceModel& model, const Matrix& b,
                                          const HankelDims& dims, Index rip_iters = 200)
{
    const SignalMatrix x = build_signal(model);
    const Matrix z       = lift(x, dims);
    const Index r        = model.r();
    detail::require(r <= dims.max_rank(), "assumption_report: rank exceeds lifted shape");

    Eigen::BDCSVD<Matrix> svd(z, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const RealVector& sv = svd.singularValues();

    LowRankFactors factors;
    factors.U     = svd.matrixU().leftCols(r);
    factors.sigma = sv.head(r);
    factors.V     = svd.matrixV().leftCols(r);

    AssumptionReport report;
    report.mu0     = measure_mu0(b);
    report.mu1     = measure_mu1(factors, dims);
    report.sigma_r = sv(r - 1);
    report.kappa   = sv(0) / sv(r - 1);

    const TangentSpace t(factors);
    const NormEstimate rip = estimate_rip_norm_detail(
        dims, t, rip_iters,
        [&b](const Matrix& m) { return adjoint_measure(measure(m, b), b); });
    report.rip_norm_estimate = rip.value;
    report.rip_tolerance     = rip.rel_change;

    const SignalMatrix x0 = initialize(measure(x, b), b, dims, r);
    report.init_spectral_distance = spectral_distance(lift(x0, dims), z);
    return report;
}

} // namespace vhlfiht

#endif /* VHLFIHT_DIAGNOSTICS_HPP */
