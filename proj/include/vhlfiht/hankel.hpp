///
/// \file hankel.hpp
///
/// Dense vectorized Hankel operator calculus.
///
/// The lift maps an `s x n` matrix `X = [x_0, ..., x_{n-1}]` onto the
/// `s*n1 x n2` block matrix whose `(j, k)` block is the column `x_{j+k}`.
/// With `n1 + n2 = n + 1` every column `x_i` appears `w_i` times, so
///
///   - `adjoint_lift` sums each anti-diagonal block stack,
///   - `pinv_lift = D^{-2} adjoint_lift` averages it (left inverse of lift),
///   - `g_apply = lift o D^{-1}` is a Frobenius isometry with adjoint
///     `g_star = D^{-1} o adjoint_lift`.
///
#ifndef VHLFIHT_HANKEL_HPP
#define VHLFIHT_HANKEL_HPP

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "vhlfiht/types.hpp"

namespace vhlfiht
{

///
/// ### HankelDims
///
/// Shape of a vectorized Hankel lift together with the anti-diagonal
/// multiplicities `w_i = min(i+1, n1, n2, n-i)`.
///
struct HankelDims
{
    Index n  = 0;
    Index s  = 0;
    Index n1 = 0;
    Index n2 = 0;
    std::vector<Index> weights;

    Index rows() const
    {
        return s * n1;
    }

    Index cols() const
    {
        return n2;
    }

    /// Largest rank a lifted matrix of this shape can carry.
    Index max_rank() const
    {
        return std::min(rows(), cols());
    }
};

/// Closed form of the anti-diagonal multiplicity.
inline Index hankel_weight(Index i, Index n, Index n1, Index n2)
{
    return std::min({i + 1, n1, n2, n - i});
}

/// Build dims for an explicit split `n1` (so `n2 = n + 1 - n1`).
inline HankelDims make_dims(Index n, Index s, Index n1)
{
    detail::require(n >= 2, "hankel dims: n must be at least 2");
    detail::require(s >= 1, "hankel dims: s must be positive");
    detail::require(n1 >= 1 && n1 <= n, "hankel dims: n1 must lie in [1, n]");

    HankelDims dims;
    dims.n  = n;
    dims.s  = s;
    dims.n1 = n1;
    dims.n2 = n + 1 - n1;
    dims.weights.resize(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i)
    {
        dims.weights[static_cast<std::size_t>(i)] =
            hankel_weight(i, n, dims.n1, dims.n2);
    }
    return dims;
}

/// Most-square split, `n1 = floor((n+1)/2)`, `n2 = ceil((n+1)/2)`.
inline HankelDims choose_dims(Index n, Index s)
{
    detail::require(n >= 2, "choose_dims: n must be at least 2");
    return make_dims(n, s, (n + 1) / 2);
}

namespace detail
{

inline void require_signal(const Matrix& x, const HankelDims& dims,
                           const char* who)
{
    require(x.rows() == dims.s && x.cols() == dims.n,
            std::string(who) + ": expected " + std::to_string(dims.s) + "x" +
                std::to_string(dims.n) + " signal, got " +
                std::to_string(x.rows()) + "x" + std::to_string(x.cols()));
}

inline void require_lifted(const Matrix& z, const HankelDims& dims,
                           const char* who)
{
    require(z.rows() == dims.rows() && z.cols() == dims.cols(),
            std::string(who) + ": expected " + std::to_string(dims.rows()) +
                "x" + std::to_string(dims.cols()) + " lifted matrix, got " +
                std::to_string(z.rows()) + "x" + std::to_string(z.cols()));
}

} // namespace detail

/// Materialize the lifted matrix.
inline Matrix lift(const Matrix& x, const HankelDims& dims)
{
    detail::require_signal(x, dims, "lift");
    const Index s = dims.s;
    Matrix z(dims.rows(), dims.cols());
    for (Index k = 0; k < dims.n2; ++k)
    {
        for (Index j = 0; j < dims.n1; ++j)
        {
            z.block(j * s, k, s, 1) = x.col(j + k);
        }
    }
    return z;
}

/// Column i of the result is the sum of blocks z_{j,k} with j + k = i.
inline Matrix adjoint_lift(const Matrix& z, const HankelDims& dims)
{
    detail::require_lifted(z, dims, "adjoint_lift");
    const Index s = dims.s;
    Matrix x = Matrix::Zero(s, dims.n);
    for (Index k = 0; k < dims.n2; ++k)
    {
        for (Index j = 0; j < dims.n1; ++j)
        {
            x.col(j + k) += z.block(j * s, k, s, 1);
        }
    }
    return x;
}

/// Scale column i by `w_i^(power/2)`; power is one of -2, -1, 1, 2.
inline Matrix apply_D(const Matrix& x, const HankelDims& dims, int power)
{
    detail::require_signal(x, dims, "apply_D");
    detail::require(power == -2 || power == -1 || power == 1 || power == 2,
                    "apply_D: power must be one of -2, -1, 1, 2");
    Matrix out(x.rows(), x.cols());
    for (Index i = 0; i < dims.n; ++i)
    {
        const double w = static_cast<double>(dims.weights[static_cast<std::size_t>(i)]);
        double scale   = 1.0;
        switch (power)
        {
        case 2:
            scale = w;
            break;
        case 1:
            scale = std::sqrt(w);
            break;
        case -1:
            scale = 1.0 / std::sqrt(w);
            break;
        case -2:
            scale = 1.0 / w;
            break;
        }
        out.col(i) = scale * x.col(i);
    }
    return out;
}

/// Moore-Penrose pseudoinverse of the lift: weighted anti-diagonal average.
inline Matrix pinv_lift(const Matrix& z, const HankelDims& dims)
{
    return apply_D(adjoint_lift(z, dims), dims, -2);
}

inline Matrix g_apply(const Matrix& x, const HankelDims& dims)
{
    return lift(apply_D(x, dims, -1), dims);
}

inline Matrix g_star(const Matrix& z, const HankelDims& dims)
{
    return apply_D(adjoint_lift(z, dims), dims, -1);
}

} // namespace vhlfiht

#endif /* VHLFIHT_HANKEL_HPP */
