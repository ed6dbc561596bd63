// Helpers shared by the unit tests. Oracles here are deliberately naive and
// independent of the library's implementation paths.

#ifndef VHLFIHT_TEST_SUPPORT_HPP
#define VHLFIHT_TEST_SUPPORT_HPP

#include <algorithm>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "vhlfiht/types.hpp"

namespace vhlfiht::testing
{

inline Matrix random_matrix(Index rows, Index cols, std::mt19937_64& rng)
{
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

/// Number of (j, k) pairs with j + k = i inside an n1 x n2 grid.
inline std::vector<Index> brute_force_weights(Index n, Index n1, Index n2)
{
    std::vector<Index> w(static_cast<std::size_t>(n), 0);
    for (Index j = 0; j < n1; ++j)
    {
        for (Index k = 0; k < n2; ++k)
        {
            ++w[static_cast<std::size_t>(j + k)];
        }
    }
    return w;
}

/// Entry-by-entry lift: Z(j*s + a, k) = X(a, j + k).
inline Matrix naive_lift(const Matrix& x, Index n1, Index n2)
{
    const Index s = x.rows();
    Matrix z(s * n1, n2);
    for (Index j = 0; j < n1; ++j)
    {
        for (Index a = 0; a < s; ++a)
        {
            for (Index k = 0; k < n2; ++k)
            {
                z(j * s + a, k) = x(a, j + k);
            }
        }
    }
    return z;
}

inline double rel_diff(Complex a, Complex b)
{
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

inline RealVector singular_values(const Matrix& m)
{
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues();
}

inline double median(std::vector<double> v)
{
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size();
    return m % 2 ? v[m / 2] : 0.5 * (v[m / 2 - 1] + v[m / 2]);
}

} // namespace vhlfiht::testing

#endif
