///
/// \file solver.hpp
///
/// Fast iterative hard thresholding on the vectorized Hankel lift.
///
/// Each iteration takes a gradient step on `0.5 ||y - A(X)||^2`, lifts the
/// result, projects it onto the tangent space at the current rank-r
/// iterate, truncates back to rank r and de-lifts with the pseudoinverse.
///
/// Two execution modes produce the same iterates: `dense` materializes every
/// lifted matrix and runs full SVDs; `fast` never forms a lifted matrix and
/// reduces each truncation to a `2r x 2r` SVD.
///
#ifndef VHLFIHT_SOLVER_HPP
#define VHLFIHT_SOLVER_HPP

#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vhlfiht/fast_hankel.hpp"
#include "vhlfiht/hankel.hpp"
#include "vhlfiht/lowrank.hpp"
#include "vhlfiht/model.hpp"
#include "vhlfiht/types.hpp"

namespace vhlfiht
{

enum class Mode
{
    dense,
    fast
};

///
/// `algorithm1` lifts the gradient-updated signal, `H(X - mu A^*(A X - y))`.
/// `weighted` keeps the carried rank-r matrix instead of re-lifting the
/// de-lifted iterate: `Z - mu H(A^*(A X - y))`.
///
enum class Variant
{
    algorithm1,
    weighted
};

inline std::string_view to_string(Mode m)
{
    return m == Mode::dense ? "dense" : "fast";
}

inline std::string_view to_string(Variant v)
{
    return v == Variant::algorithm1 ? "algorithm1" : "weighted";
}

inline Mode parse_mode(std::string_view s)
{
    if (s == "dense")
    {
        return Mode::dense;
    }
    if (s == "fast")
    {
        return Mode::fast;
    }
    throw std::invalid_argument("unknown mode '" + std::string(s) + "'");
}

inline Variant parse_variant(std::string_view s)
{
    if (s == "algorithm1")
    {
        return Variant::algorithm1;
    }
    if (s == "weighted")
    {
        return Variant::weighted;
    }
    throw std::invalid_argument("unknown variant '" + std::string(s) + "'");
}

struct SolverConfig
{
    Index rank               = 1;
    Index max_iters          = 300;
    double residual_tol      = 1e-10;  ///< on ||A(X) - y|| / ||y||
    double stagnation_tol    = 1e-14;  ///< relative iterate change
    Index stagnation_window  = 5;
    double divergence_factor = 10.0;   ///< residual growth over its minimum
    Index divergence_window  = 10;
    Mode mode                = Mode::dense;
    Variant variant          = Variant::algorithm1;
    double step_size         = 1.0;
    std::uint64_t seed       = 0;
    double svd_tol           = 1e-12;  ///< matrix-free SVD residual, fast mode

    void validate() const
    {
        detail::require(rank >= 1, "solver config: rank must be positive");
        detail::require(max_iters >= 0, "solver config: max_iters must be non-negative");
        detail::require(residual_tol > 0 && stagnation_tol > 0 && svd_tol > 0,
                        "solver config: tolerances must be positive");
        detail::require(stagnation_window >= 1 && divergence_window >= 1,
                        "solver config: windows must be positive");
    }
};

enum class Termination
{
    residual_tolerance,
    stagnation,
    max_iterations,
    divergence,
    non_finite
};

inline std::string_view to_string(Termination t)
{
    switch (t)
    {
    case Termination::residual_tolerance:
        return "residual_tolerance";
    case Termination::stagnation:
        return "stagnation";
    case Termination::max_iterations:
        return "max_iterations";
    case Termination::divergence:
        return "divergence";
    case Termination::non_finite:
        return "non_finite";
    }
    return "unknown";
}

struct IterationRecord
{
    Index iter        = 0;
    double residual   = 0.0;  ///< ||A(X^t) - y||_2
    double rel_error  = std::numeric_limits<double>::quiet_NaN();
    double elapsed_ms = 0.0;
};

struct ConvergenceTrace
{
    std::vector<IterationRecord> records;  ///< t = 0 is the initialization
    Termination termination = Termination::max_iterations;
    bool has_ground_truth   = false;
};

/// The iterate and the rank-r factors whose tangent space drives the next step.
struct SolverState
{
    SignalMatrix X;
    LowRankFactors factors;
};

struct SolveResult
{
    SignalMatrix X;
    LowRankFactors factors;
    ConvergenceTrace trace;
};

/// `||X - X_ref||_F / ||X_ref||_F`.
inline double relative_error(const SignalMatrix& x, const SignalMatrix& ref)
{
    detail::require(x.rows() == ref.rows() && x.cols() == ref.cols(),
                    "relative_error: shape mismatch");
    const double denom = ref.norm();
    if (denom == 0.0)
    {
        throw std::domain_error("relative_error: reference has zero norm");
    }
    return (x - ref).norm() / denom;
}

namespace detail
{

inline void require_problem(const Vector& y, const Matrix& b, const HankelDims& dims)
{
    require(b.rows() == dims.s && b.cols() == dims.n,
            "solver: B must be s x n for the given dims");
    require(y.size() == dims.n, "solver: y must have length n");
}

inline SvdControls fast_controls(const SolverConfig& config)
{
    SvdControls c;
    c.tol  = config.svd_tol;
    c.seed = config.seed;
    return c;
}

} // namespace detail

/// Spectral initialization `T_r(H(A^*(y)))` together with its de-lift.
inline SolverState initial_state(const Vector& y, const Matrix& b, const HankelDims& dims,
                                 Index r, Mode mode = Mode::dense,
                                 const SvdControls& controls = {})
{
    detail::require_problem(y, b, dims);
    detail::require(r >= 1 && r <= dims.max_rank(),
                    "initialize: rank " + std::to_string(r) +
                        " is not feasible for the lifted shape " +
                        std::to_string(dims.rows()) + "x" + std::to_string(dims.cols()));
    const SignalMatrix back = adjoint_measure(y, b);

    SolverState state;
    if (mode == Mode::dense)
    {
        state.factors = truncate_rank(lift(back, dims), r);
        state.X       = pinv_lift(state.factors.reconstruct(), dims);
    }
    else
    {
        const LiftedOperator op(back, dims);
        state.factors = truncate_rank_operator(
            [&op](const Matrix& v) { return op.apply(v); },
            [&op](const Matrix& u) { return op.apply_adjoint(u); }, op.rows(), op.cols(), r,
            controls);
        state.X = lowrank_pinv_lift(state.factors.U, state.factors.sigma, state.factors.V,
                                    dims);
    }
    return state;
}

/// `X^0 = pinv_lift(T_r(lift(A^*(y))))`.
inline SignalMatrix initialize(const Vector& y, const Matrix& b, const HankelDims& dims,
                               Index r, Mode mode = Mode::dense,
                               const SvdControls& controls = {})
{
    return initial_state(y, b, dims, r, mode, controls).X;
}

///
/// One iteration from `state`. The tangent space is taken at the carried
/// rank-r factors. Throws non_finite_error (tagged with `iteration`) if the
/// new iterate contains NaN or Inf.
///
inline SolverState iterate_once(const SolverState& state, const Vector& y, const Matrix& b,
                                const HankelDims& dims, const SolverConfig& config,
                                std::int64_t iteration = 0)
{
    detail::require_problem(y, b, dims);
    detail::require_signal(state.X, dims, "iterate_once");

    const Index r = config.rank;
    const TangentSpace tangent(state.factors);
    const SignalMatrix grad =
        config.step_size * adjoint_measure(measure(state.X, b) - y, b);

    SolverState next;
    if (config.mode == Mode::dense)
    {
        Matrix w;
        if (config.variant == Variant::algorithm1)
        {
            w = project_tangent(lift(state.X - grad, dims), tangent);
        }
        else
        {
            w = state.factors.reconstruct() - project_tangent(lift(grad, dims), tangent);
        }
        next.factors = truncate_rank(w, r);
        next.X       = pinv_lift(next.factors.reconstruct(), dims);
    }
    else
    {
        Matrix yv;
        Matrix yhu;
        if (config.variant == Variant::algorithm1)
        {
            const LiftedOperator op(state.X - grad, dims);
            yv  = op.apply(tangent.V);
            yhu = op.apply_adjoint(tangent.U);
        }
        else
        {
            const LiftedOperator op(grad, dims);
            const auto& f = state.factors;
            yv  = f.U * f.sigma.cast<Complex>().asDiagonal() - op.apply(tangent.V);
            yhu = f.V * f.sigma.cast<Complex>().asDiagonal() - op.apply_adjoint(tangent.U);
        }
        next.factors = truncate_tangent(tangent, yv, yhu, r);
        next.X = lowrank_pinv_lift(next.factors.U, next.factors.sigma, next.factors.V, dims);
    }

    if (!next.X.allFinite())
    {
        throw non_finite_error("iterate_once: non-finite iterate at iteration " +
                                   std::to_string(iteration),
                               iteration);
    }
    return next;
}

///
/// Run the iteration from the spectral initialization until the relative
/// residual drops below `residual_tol`, the iterate stagnates, `max_iters`
/// is reached, or the residual diverges. On divergence (or a non-finite
/// iterate) the iterate with the smallest residual is returned.
///
inline SolveResult solve(const Vector& y, const Matrix& b, const HankelDims& dims,
                         const SolverConfig& config,
                         const std::optional<SignalMatrix>& ground_truth = std::nullopt)
{
    config.validate();
    detail::require_problem(y, b, dims);
    if (ground_truth)
    {
        detail::require_signal(*ground_truth, dims, "solve: ground truth");
    }

    using clock      = std::chrono::steady_clock;
    const auto start = clock::now();

    SolveResult result;
    result.trace.has_ground_truth = ground_truth.has_value();
    const double y_norm = y.norm();

    auto record = [&](Index t, const SignalMatrix& x) {
        IterationRecord rec;
        rec.iter     = t;
        rec.residual = (measure(x, b) - y).norm();
        if (ground_truth)
        {
            rec.rel_error = relative_error(x, *ground_truth);
        }
        rec.elapsed_ms =
            std::chrono::duration<double, std::milli>(clock::now() - start).count();
        result.trace.records.push_back(rec);
        return rec.residual;
    };

    SolverState state = initial_state(y, b, dims, config.rank, config.mode,
                                      detail::fast_controls(config));
    double residual   = record(0, state.X);

    SolverState best        = state;
    double best_residual    = residual;
    Index stagnant          = 0;
    Index diverging         = 0;
    bool return_best        = false;
    Termination termination = Termination::max_iterations;

    if (residual <= config.residual_tol * y_norm)
    {
        termination = Termination::residual_tolerance;
    }
    else
    {
        for (Index t = 1; t <= config.max_iters; ++t)
        {
            SolverState next;
            try
            {
                next = iterate_once(state, y, b, dims, config, t - 1);
            }
            catch (const non_finite_error&)
            {
                termination = Termination::non_finite;
                return_best = true;
                break;
            }

            const double prev_norm = state.X.norm();
            const double change    = prev_norm > 0.0 ? (next.X - state.X).norm() / prev_norm
                                                     : (next.X.norm() > 0.0 ? 1.0 : 0.0);
            state    = std::move(next);
            residual = record(t, state.X);

            if (residual < best_residual)
            {
                best_residual = residual;
                best          = state;
            }
            if (residual <= config.residual_tol * y_norm)
            {
                termination = Termination::residual_tolerance;
                break;
            }
            stagnant = change < config.stagnation_tol ? stagnant + 1 : 0;
            if (stagnant >= config.stagnation_window)
            {
                termination = Termination::stagnation;
                break;
            }
            diverging = residual > config.divergence_factor * best_residual ? diverging + 1 : 0;
            if (diverging >= config.divergence_window)
            {
                termination = Termination::divergence;
                return_best = true;
                break;
            }
        }
    }

    result.trace.termination = termination;
    const SolverState& out   = return_best ? best : state;
    result.X                 = out.X;
    result.factors           = out.factors;
    return result;
}

} // namespace vhlfiht

#endif /* VHLFIHT_SOLVER_HPP */
