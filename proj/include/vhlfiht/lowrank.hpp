///
/// \file lowrank.hpp
///
/// Fixed-rank manifold machinery: truncated SVD (dense and matrix-free),
/// tangent spaces and the projection onto them.
///
#ifndef VHLFIHT_LOWRANK_HPP
#define VHLFIHT_LOWRANK_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <string>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "vhlfiht/types.hpp"

namespace vhlfiht
{

///
/// ### LowRankFactors
///
/// Compact SVD `U diag(sigma) V^H`. `sigma` is positive and non-increasing;
/// `rank()` may be smaller than the requested rank when trailing singular
/// values vanished and were trimmed.
///
struct LowRankFactors
{
    Matrix U;
    RealVector sigma;
    Matrix V;

    Index rank() const
    {
        return sigma.size();
    }

    Matrix reconstruct() const
    {
        return U * sigma.cast<Complex>().asDiagonal() * V.adjoint();
    }
};

/// The tangent space at a rank-r matrix, stored by its singular subspaces.
struct TangentSpace
{
    Matrix U;
    Matrix V;

    TangentSpace() = default;

    TangentSpace(Matrix u, Matrix v) : U(std::move(u)), V(std::move(v))
    {
    }

    explicit TangentSpace(const LowRankFactors& f) : U(f.U), V(f.V)
    {
    }
};

namespace detail
{

/// Keep the leading `r` triplets and drop singular values that are zero at
/// working precision.
inline LowRankFactors take_leading(const Matrix& u, const RealVector& sigma,
                                   const Matrix& v, Index r, Index m, Index p)
{
    const double floor_value = sigma.size() > 0
                                   ? sigma(0) * std::numeric_limits<double>::epsilon() *
                                         static_cast<double>(std::max(m, p))
                                   : 0.0;
    Index keep = std::min<Index>(r, sigma.size());
    while (keep > 0 && (sigma(keep - 1) <= floor_value || sigma(keep - 1) == 0.0))
    {
        --keep;
    }
    LowRankFactors f;
    f.U     = u.leftCols(keep);
    f.sigma = sigma.head(keep);
    f.V     = v.leftCols(keep);
    return f;
}

/// Orthonormal basis (thin Q) of the columns of `a`.
inline Matrix orthonormalize(const Matrix& a)
{
    Eigen::HouseholderQR<Matrix> qr(a);
    return qr.householderQ() * Matrix::Identity(a.rows(), a.cols());
}

} // namespace detail

/// Best rank-r approximation (hard thresholding) via a dense SVD.
inline LowRankFactors truncate_rank(const Matrix& w, Index r)
{
    detail::require(r >= 1, "truncate_rank: r must be positive");
    detail::require(r <= std::min(w.rows(), w.cols()),
                    "truncate_rank: r=" + std::to_string(r) + " exceeds min(" +
                        std::to_string(w.rows()) + ", " + std::to_string(w.cols()) + ")");
    Eigen::BDCSVD<Matrix> svd(w, Eigen::ComputeThinU | Eigen::ComputeThinV);
    return detail::take_leading(svd.matrixU(), svd.singularValues(), svd.matrixV(), r,
                                w.rows(), w.cols());
}

/// `P_T(W) = U U^H W + W V V^H - U U^H W V V^H`.
inline Matrix project_tangent(const Matrix& w, const TangentSpace& t)
{
    detail::require(t.U.rows() == w.rows() && t.V.rows() == w.cols(),
                    "project_tangent: tangent space does not match W");
    const Matrix uhw = t.U.adjoint() * w;   // r x p
    const Matrix wv  = w * t.V;             // m x r
    const Matrix uhwv = uhw * t.V;          // r x r
    return t.U * uhw + wv * t.V.adjoint() - t.U * uhwv * t.V.adjoint();
}

/// Iteration controls for the matrix-free truncated SVD.
struct SvdControls
{
    Index oversampling = 8;
    Index power_iters  = 2;    ///< power steps before the first convergence test
    Index max_iters    = 300;  ///< cap on further power steps
    double tol         = 1e-10; ///< on ||A V - U S||_F / sigma_1
    std::uint64_t seed = 0x5eed;
};

///
/// Leading-r SVD of a linear operator known only through products.
///
/// Randomized subspace iteration: a Gaussian sketch of width
/// `r + oversampling` is pushed through `A` and `A^H` (re-orthonormalizing
/// each time) until the leading-r residual `||A V_r - U_r S_r||_F` drops
/// below `tol * sigma_1`.
///
/// \param matvec          callable `Matrix(const Matrix&)` computing `A X`
/// \param adjoint_matvec  callable `Matrix(const Matrix&)` computing `A^H Y`
///
template <typename MatVec, typename AdjointMatVec>
LowRankFactors truncate_rank_operator(MatVec&& matvec, AdjointMatVec&& adjoint_matvec,
                                      Index rows, Index cols, Index r,
                                      const SvdControls& controls = {})
{
    detail::require(r >= 1, "truncate_rank_operator: r must be positive");
    detail::require(r <= std::min(rows, cols),
                    "truncate_rank_operator: r exceeds the operator's dimensions");

    const Index width = std::min(r + controls.oversampling, std::min(rows, cols));

    std::mt19937_64 rng(controls.seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix omega(cols, width);
    for (Index j = 0; j < width; ++j)
    {
        for (Index i = 0; i < cols; ++i)
        {
            const double re = normal(rng);
            const double im = normal(rng);
            omega(i, j)     = Complex(re, im);
        }
    }

    Matrix q = detail::orthonormalize(matvec(omega));
    for (Index it = 0; it < controls.power_iters; ++it)
    {
        q = detail::orthonormalize(matvec(detail::orthonormalize(adjoint_matvec(q))));
    }

    double best = std::numeric_limits<double>::infinity();
    for (Index it = 0;; ++it)
    {
        // B = Q^H A, held as its adjoint.
        const Matrix bh = adjoint_matvec(q);
        Eigen::BDCSVD<Matrix> svd(bh, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const RealVector& sv = svd.singularValues();

        LowRankFactors f = detail::take_leading(q * svd.matrixV(), sv, svd.matrixU(), r,
                                                rows, cols);
        if (f.rank() == 0)
        {
            return f;
        }

        const Matrix resid =
            matvec(f.V) - f.U * f.sigma.cast<Complex>().asDiagonal();
        const double rel = resid.norm() / sv(0);
        best             = std::min(best, rel);
        if (rel <= controls.tol)
        {
            return f;
        }
        if (it >= controls.max_iters)
        {
            throw convergence_error("truncate_rank_operator: no convergence after " +
                                        std::to_string(it) + " power iterations",
                                    best);
        }
        q = detail::orthonormalize(matvec(detail::orthonormalize(bh)));
    }
}

///
/// `T_r(P_T(Y))` for an operand `Y` seen only through `Y V` and `Y^H U`.
///
/// With `M = U^H Y V`, `Q1 R1 = Y V - U M` and `Q2 R2 = Y^H U - V M^H`,
///
///     P_T(Y) = [U Q1] [[M, R2^H], [R1, 0]] [V Q2]^H,
///
/// so the truncation needs only the SVD of a `2r x 2r` core.
///
inline LowRankFactors truncate_tangent(const TangentSpace& t, const Matrix& yv,
                                       const Matrix& yhu, Index r)
{
    const Index k = t.U.cols();
    detail::require(t.V.cols() == k, "truncate_tangent: U and V ranks differ");
    detail::require(yv.rows() == t.U.rows() && yv.cols() == k,
                    "truncate_tangent: Y V has the wrong shape");
    detail::require(yhu.rows() == t.V.rows() && yhu.cols() == k,
                    "truncate_tangent: Y^H U has the wrong shape");
    if (k == 0)
    {
        return LowRankFactors{Matrix(t.U.rows(), 0), RealVector(0), Matrix(t.V.rows(), 0)};
    }

    const Matrix m  = t.U.adjoint() * yv;
    const Matrix c1 = yv - t.U * m;
    const Matrix d1 = yhu - t.V * m.adjoint();

    Eigen::HouseholderQR<Matrix> qr1(c1);
    Eigen::HouseholderQR<Matrix> qr2(d1);
    const Matrix q1 = qr1.householderQ() * Matrix::Identity(c1.rows(), k);
    const Matrix q2 = qr2.householderQ() * Matrix::Identity(d1.rows(), k);
    const Matrix r1 = qr1.matrixQR().topRows(k).triangularView<Eigen::Upper>();
    const Matrix r2 = qr2.matrixQR().topRows(k).triangularView<Eigen::Upper>();

    Matrix core = Matrix::Zero(2 * k, 2 * k);
    core.topLeftCorner(k, k)     = m;
    core.topRightCorner(k, k)    = r2.adjoint();
    core.bottomLeftCorner(k, k)  = r1;

    Eigen::JacobiSVD<Matrix> svd(core, Eigen::ComputeFullU | Eigen::ComputeFullV);

    Matrix left(t.U.rows(), 2 * k);
    left << t.U, q1;
    Matrix right(t.V.rows(), 2 * k);
    right << t.V, q2;

    return detail::take_leading(left * svd.matrixU(), svd.singularValues(),
                                right * svd.matrixV(), r, t.U.rows(), t.V.rows());
}

} // namespace vhlfiht

#endif /* VHLFIHT_LOWRANK_HPP */
