///
/// \file model.hpp
///
/// Point-source signal model and the subspace-coded measurement operator.
///
/// The target is `X = sum_k d_k h_k a(tau_k)^T` with `a(tau)[l] =
/// exp(-2 pi i tau l)`, observed through `y[j] = <b_j e_j^T, X> = b_j^H x_j`.
///
#ifndef VHLFIHT_MODEL_HPP
#define VHLFIHT_MODEL_HPP

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "vhlfiht/hankel.hpp"
#include "vhlfiht/types.hpp"

namespace vhlfiht
{

using Rng = std::mt19937_64;

///
/// ### PointSourceModel
///
/// Ground-truth parameters. `coeffs` holds the unit-norm vectors `h_k` as
/// columns (s x r).
///
struct PointSourceModel
{
    Index s = 0;
    Index n = 0;
    std::vector<double> taus;
    Vector amps;
    Matrix coeffs;

    Index r() const
    {
        return static_cast<Index>(taus.size());
    }
};

/// Subspace matrix (column j is b_j) and observations.
struct MeasurementSetup
{
    Matrix B;
    Vector y;
};

enum class SubspaceKind
{
    real_gaussian,
    complex_gaussian
};

/// `a(tau)[k] = exp(-2 pi i tau k)`; tau is reduced modulo 1.
inline Vector steering_vector(double tau, Index n)
{
    detail::require(n >= 1, "steering_vector: n must be positive");
    tau -= std::floor(tau);
    Vector a(n);
    a(0) = Complex(1.0, 0.0);
    for (Index k = 1; k < n; ++k)
    {
        // Reduce tau*k modulo 1 before scaling so large k keeps full accuracy.
        double phase = tau * static_cast<double>(k);
        phase -= std::floor(phase);
        a(k) = std::polar(1.0, -2.0 * std::numbers::pi * phase);
    }
    return a;
}

/// Throws dimension_error if the model violates its invariants.
inline void validate_model(const PointSourceModel& model)
{
    const Index r = model.r();
    detail::require(model.s >= 1 && model.n >= 1 && r >= 1,
                    "model: s, n and r must be positive");
    detail::require(model.amps.size() == r, "model: need one amplitude per source");
    detail::require(model.coeffs.rows() == model.s && model.coeffs.cols() == r,
                    "model: coeffs must be s x r");
    for (Index k = 0; k < r; ++k)
    {
        detail::require(std::abs(model.coeffs.col(k).norm() - 1.0) <= 1e-12,
                        "model: h_" + std::to_string(k) + " is not unit norm");
    }
    std::vector<double> sorted = model.taus;
    std::sort(sorted.begin(), sorted.end());
    detail::require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
                    "model: source locations must be pairwise distinct");
}

///
/// Draw a random model following the experiment recipe: `tau ~ U(0,1)`,
/// `d = (1 + 10^c) exp(-i psi)` with `c ~ U(0,1)`, `psi ~ U(0, 2 pi)`, and
/// `h` a standard complex Gaussian vector normalized to unit length.
///
/// A tau draw that coincides with an earlier one is redrawn, at most 16
/// times in total.
///
inline PointSourceModel synth_model(Index s, Index n, Index r, Rng& rng)
{
    detail::require(s >= 1, "synth_model: s must be positive");
    detail::require(r >= 1, "synth_model: r must be positive");
    detail::require(n >= 2 * r, "synth_model: need n >= 2r");

    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::normal_distribution<double> normal(0.0, 1.0);

    PointSourceModel model;
    model.s = s;
    model.n = n;
    model.taus.reserve(static_cast<std::size_t>(r));
    int redraws = 0;
    while (static_cast<Index>(model.taus.size()) < r)
    {
        const double tau = unit(rng);
        const bool clash = std::any_of(model.taus.begin(), model.taus.end(),
                                       [tau](double t) { return t == tau; });
        if (clash)
        {
            if (++redraws > 16)
            {
                throw std::runtime_error("synth_model: could not draw distinct locations");
            }
            continue;
        }
        model.taus.push_back(tau);
    }

    model.amps.resize(r);
    for (Index k = 0; k < r; ++k)
    {
        const double c   = unit(rng);
        const double psi = 2.0 * std::numbers::pi * unit(rng);
        model.amps(k)    = (1.0 + std::pow(10.0, c)) * std::polar(1.0, -psi);
    }

    model.coeffs.resize(s, r);
    for (Index k = 0; k < r; ++k)
    {
        for (Index l = 0; l < s; ++l)
        {
            const double re      = normal(rng);
            const double im      = normal(rng);
            model.coeffs(l, k)   = Complex(re, im) / std::sqrt(2.0);
        }
        model.coeffs.col(k).normalize();
    }
    return model;
}

/// `X = sum_k d_k h_k a(tau_k)^T` (plain transpose on the steering vector).
inline SignalMatrix build_signal(const PointSourceModel& model)
{
    validate_model(model);
    SignalMatrix x = SignalMatrix::Zero(model.s, model.n);
    for (Index k = 0; k < model.r(); ++k)
    {
        const Vector a = steering_vector(model.taus[static_cast<std::size_t>(k)], model.n);
        x.noalias() += (model.amps(k) * model.coeffs.col(k)) * a.transpose();
    }
    return x;
}

/// i.i.d. standard normal entries; the complex option draws
/// `(g1 + i g2)/sqrt(2)` so that `E[b b^H] = I` either way.
inline Matrix sample_subspace(Index s, Index n, Rng& rng,
                              SubspaceKind kind = SubspaceKind::real_gaussian)
{
    detail::require(s >= 1 && n >= 1, "sample_subspace: s and n must be positive");
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix b(s, n);
    for (Index j = 0; j < n; ++j)
    {
        for (Index l = 0; l < s; ++l)
        {
            if (kind == SubspaceKind::real_gaussian)
            {
                b(l, j) = Complex(normal(rng), 0.0);
            }
            else
            {
                const double re = normal(rng);
                const double im = normal(rng);
                b(l, j)         = Complex(re, im) / std::sqrt(2.0);
            }
        }
    }
    return b;
}

/// `y[j] = b_j^H x_j`.
inline Vector measure(const SignalMatrix& x, const Matrix& b)
{
    detail::require(x.rows() == b.rows() && x.cols() == b.cols(),
                    "measure: X and B must have the same shape");
    return (b.array().conjugate() * x.array()).colwise().sum().transpose();
}

/// Column j of the result is `y[j] b_j`.
inline SignalMatrix adjoint_measure(const Vector& y, const Matrix& b)
{
    detail::require(y.size() == b.cols(), "adjoint_measure: y must have one entry per column of B");
    return b * y.asDiagonal();
}

/// `(E_L kr H) diag(d) E_R^T` with Vandermonde factors on nodes
/// `exp(-2 pi i tau_k)`; equals `lift(build_signal(model))`.
inline Matrix hankel_factorization(const PointSourceModel& model, const HankelDims& dims)
{
    validate_model(model);
    detail::require(dims.n == model.n && dims.s == model.s,
                    "hankel_factorization: dims do not match the model");
    const Index r = model.r();
    const Index s = model.s;

    Matrix left(dims.rows(), r);
    Matrix right(dims.n2, r);
    for (Index k = 0; k < r; ++k)
    {
        const Vector a = steering_vector(model.taus[static_cast<std::size_t>(k)], model.n);
        for (Index j = 0; j < dims.n1; ++j)
        {
            left.block(j * s, k, s, 1) = a(j) * model.coeffs.col(k);
        }
        right.col(k) = a.head(dims.n2);
    }
    return left * model.amps.asDiagonal() * right.transpose();
}

} // namespace vhlfiht

#endif /* VHLFIHT_MODEL_HPP */
