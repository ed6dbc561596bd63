///
/// \file fast_hankel.hpp
///
/// Matrix-free products with a vectorized Hankel matrix.
///
/// Each of the `s` rows of `X` generates a scalar Hankel matrix, so
/// `lift(X) v` and `lift(X)^H u` reduce to `s` correlations of length `n`
/// that are evaluated with zero-padded FFTs of length `next_pow2(n)`.
///
#ifndef VHLFIHT_FAST_HANKEL_HPP
#define VHLFIHT_FAST_HANKEL_HPP

#include <memory>
#include <vector>

#include "vhlfiht/fft.hpp"
#include "vhlfiht/hankel.hpp"
#include "vhlfiht/types.hpp"

namespace vhlfiht
{

///
/// ### LiftedOperator
///
/// `lift(X)` represented by the spectra of the rows of `X`. Construction
/// costs `s` FFTs; each product column costs `O(s N log N)`.
///
class LiftedOperator
{
public:
    LiftedOperator(const Matrix& x, const HankelDims& dims)
        : m_dims(dims), m_size(next_pow2(dims.n)), m_plan(fft_plan(m_size)),
          m_spectra(m_size, dims.s)
    {
        detail::require_signal(x, dims, "LiftedOperator");
        std::vector<Complex> buf(static_cast<std::size_t>(m_size));
        for (Index a = 0; a < dims.s; ++a)
        {
            std::fill(buf.begin(), buf.end(), Complex(0.0, 0.0));
            for (Index i = 0; i < dims.n; ++i)
            {
                buf[static_cast<std::size_t>(i)] = x(a, i);
            }
            m_plan->forward(buf.data(), m_spectra.col(a).data());
        }
    }

    const HankelDims& dims() const
    {
        return m_dims;
    }

    Index rows() const
    {
        return m_dims.rows();
    }

    Index cols() const
    {
        return m_dims.cols();
    }

    /// `lift(X) * V` for an `n2 x m` block of vectors.
    Matrix apply(const Matrix& v) const
    {
        detail::require(v.rows() == m_dims.n2, "LiftedOperator::apply: expected n2 rows");
        const Index s  = m_dims.s;
        const Index n1 = m_dims.n1;
        const Index n2 = m_dims.n2;
        const double scale = 1.0 / static_cast<double>(m_size);

        Matrix out(rows(), v.cols());
        Vector buf(m_size);
        Vector vf(m_size);
        Vector prod(m_size);
        Vector conv(m_size);
        for (Index m = 0; m < v.cols(); ++m)
        {
            // Reversing v turns the correlation into a convolution.
            buf.setZero();
            for (Index k = 0; k < n2; ++k)
            {
                buf(n2 - 1 - k) = v(k, m);
            }
            m_plan->forward(buf.data(), vf.data());
            for (Index a = 0; a < s; ++a)
            {
                prod = m_spectra.col(a).cwiseProduct(vf);
                m_plan->backward(prod.data(), conv.data());
                for (Index j = 0; j < n1; ++j)
                {
                    out(j * s + a, m) = scale * conv(j + n2 - 1);
                }
            }
        }
        return out;
    }

    /// `lift(X)^H * U` for an `s*n1 x m` block of vectors.
    Matrix apply_adjoint(const Matrix& u) const
    {
        detail::require(u.rows() == rows(), "LiftedOperator::apply_adjoint: expected s*n1 rows");
        const Index s  = m_dims.s;
        const Index n1 = m_dims.n1;
        const Index n2 = m_dims.n2;
        const double scale = 1.0 / static_cast<double>(m_size);

        Matrix out(n2, u.cols());
        Vector buf(m_size);
        Vector uf(m_size);
        Vector acc(m_size);
        Vector conv(m_size);
        for (Index m = 0; m < u.cols(); ++m)
        {
            acc.setZero();
            for (Index a = 0; a < s; ++a)
            {
                buf.setZero();
                for (Index j = 0; j < n1; ++j)
                {
                    buf(n1 - 1 - j) = std::conj(u(j * s + a, m));
                }
                m_plan->forward(buf.data(), uf.data());
                acc += m_spectra.col(a).cwiseProduct(uf);
            }
            m_plan->backward(acc.data(), conv.data());
            for (Index k = 0; k < n2; ++k)
            {
                out(k, m) = std::conj(scale * conv(k + n1 - 1));
            }
        }
        return out;
    }

private:
    HankelDims m_dims;
    Index m_size;
    std::shared_ptr<const FftPlan> m_plan;
    Matrix m_spectra;
};

/// `lift(X) v` without materializing the lifted matrix.
inline Vector fast_matvec(const Matrix& x, const Vector& v, const HankelDims& dims)
{
    return LiftedOperator(x, dims).apply(v);
}

/// `lift(X)^H u` without materializing the lifted matrix.
inline Vector fast_adjoint_matvec(const Matrix& x, const Vector& u, const HankelDims& dims)
{
    return LiftedOperator(x, dims).apply_adjoint(u);
}

///
/// `pinv_lift(U diag(sigma) V^H)` from the factors: every anti-diagonal sum
/// is a linear convolution of a column of `U` (one row offset at a time)
/// with the conjugate of the matching column of `V`.
///
inline Matrix lowrank_pinv_lift(const Matrix& u, const RealVector& sigma,
                                const Matrix& v, const HankelDims& dims)
{
    const Index r = sigma.size();
    detail::require(u.rows() == dims.rows() && u.cols() == r,
                    "lowrank_pinv_lift: U must be s*n1 x r");
    detail::require(v.rows() == dims.n2 && v.cols() == r,
                    "lowrank_pinv_lift: V must be n2 x r");

    const Index s    = dims.s;
    const Index size = next_pow2(dims.n);
    const auto plan  = fft_plan(size);
    const double scale = 1.0 / static_cast<double>(size);

    Matrix vf(size, r);
    Vector buf(size);
    for (Index l = 0; l < r; ++l)
    {
        buf.setZero();
        buf.head(dims.n2) = v.col(l).conjugate();
        plan->forward(buf.data(), vf.col(l).data());
    }

    Matrix x(s, dims.n);
    Vector uf(size);
    Vector acc(size);
    Vector conv(size);
    for (Index a = 0; a < s; ++a)
    {
        acc.setZero();
        for (Index l = 0; l < r; ++l)
        {
            buf.setZero();
            for (Index j = 0; j < dims.n1; ++j)
            {
                buf(j) = sigma(l) * u(j * s + a, l);
            }
            plan->forward(buf.data(), uf.data());
            acc += uf.cwiseProduct(vf.col(l));
        }
        plan->backward(acc.data(), conv.data());
        for (Index i = 0; i < dims.n; ++i)
        {
            x(a, i) = scale * conv(i) /
                      static_cast<double>(dims.weights[static_cast<std::size_t>(i)]);
        }
    }
    return x;
}

} // namespace vhlfiht

#endif /* VHLFIHT_FAST_HANKEL_HPP */
