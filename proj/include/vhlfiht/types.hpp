///
/// \file types.hpp
///
/// Scalar/matrix aliases and the exception types shared by every module.
///
#ifndef VHLFIHT_TYPES_HPP
#define VHLFIHT_TYPES_HPP

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace vhlfiht
{

using Index   = Eigen::Index;
using Real    = double;
using Complex = std::complex<double>;

using Matrix     = Eigen::MatrixXcd;
using Vector     = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Complex s x n data matrix (ground truth or iterate).
using SignalMatrix = Matrix;

/// Shape mismatch between operands.
class dimension_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// An iterative routine ran out of iterations before meeting its tolerance.
class convergence_error : public std::runtime_error
{
public:
    convergence_error(const std::string& what, double residual)
        : std::runtime_error(what), m_residual(residual)
    {
    }

    /// Best residual reached before giving up.
    double residual() const noexcept
    {
        return m_residual;
    }

private:
    double m_residual;
};

/// A solver iterate contained NaN or Inf.
class non_finite_error : public std::runtime_error
{
public:
    non_finite_error(const std::string& what, std::int64_t iteration)
        : std::runtime_error(what), m_iteration(iteration)
    {
    }

    std::int64_t iteration() const noexcept
    {
        return m_iteration;
    }

private:
    std::int64_t m_iteration;
};

namespace detail
{

inline void require(bool cond, const std::string& msg)
{
    if (!cond)
    {
        throw dimension_error(msg);
    }
}

} // namespace detail

/// Inner product <A, B> = trace(A^H B).
template <typename DerivedA, typename DerivedB>
Complex inner(const Eigen::MatrixBase<DerivedA>& a,
              const Eigen::MatrixBase<DerivedB>& b)
{
    return (a.array().conjugate() * b.array()).sum();
}

} // namespace vhlfiht

#endif /* VHLFIHT_TYPES_HPP */
