///
/// \file experiment.hpp
///
/// Experiment harness: reproducible instances, single runs with trace
/// export, seeded Monte Carlo sweeps and the invariant check suite. The
/// command-line tool is a thin layer over these functions.
///
#ifndef VHLFIHT_EXPERIMENT_HPP
#define VHLFIHT_EXPERIMENT_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <future>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "vhlfiht/diagnostics.hpp"
#include "vhlfiht/fast_hankel.hpp"
#include "vhlfiht/hankel.hpp"
#include "vhlfiht/lowrank.hpp"
#include "vhlfiht/model.hpp"
#include "vhlfiht/solver.hpp"
#include "vhlfiht/types.hpp"
#include "vhlfiht/version.hpp"

namespace vhlfiht
{

///
/// Per-trial seed: `splitmix64(master + (trial + 1) * 0x9E3779B97F4A7C15)`.
///
/// For a fixed master seed the map from trial index to seed is injective
/// (an odd multiplier is invertible mod 2^64 and the splitmix64 finalizer
/// is a bijection). `seed_derivation(0, 0) == 0xE220A8397B1DCDAF`.
///
inline std::uint64_t seed_derivation(std::uint64_t master, std::uint64_t trial)
{
    std::uint64_t z = master + (trial + 1) * 0x9E3779B97F4A7C15ULL;
    z               = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z               = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

struct ExperimentConfig
{
    Index n                  = 256;
    Index s                  = 4;
    Index r                  = 5;
    std::uint64_t seed       = 1;
    Index trials             = 1;
    Index max_iters          = 300;
    double residual_tol      = 1e-10;
    Mode mode                = Mode::fast;
    Variant variant          = Variant::algorithm1;
    double step_size         = 1.0;
    std::optional<Index> n1;
    std::string out          = "trace.csv";
    double success_threshold = 1e-4;
    bool complex_subspace    = false;
    bool record_timing       = true;  ///< false writes elapsed_ms as 0 for byte-stable traces
    unsigned jobs            = 0;     ///< sweep workers, 0 = hardware concurrency

    void validate() const
    {
        detail::require(n >= 2 && s >= 1 && r >= 1, "experiment: dimensions must be positive");
        detail::require(trials >= 1, "experiment: trials must be at least 1");
        detail::require(max_iters >= 0, "experiment: max_iters must be non-negative");
        detail::require(residual_tol > 0, "experiment: tolerance must be positive");
    }

    HankelDims dims() const
    {
        return n1 ? make_dims(n, s, *n1) : choose_dims(n, s);
    }

    SolverConfig solver() const
    {
        SolverConfig c;
        c.rank         = r;
        c.max_iters    = max_iters;
        c.residual_tol = residual_tol;
        c.mode         = mode;
        c.variant      = variant;
        c.step_size    = step_size;
        c.seed         = seed;
        return c;
    }
};

/// A synthesized recovery problem.
struct Instance
{
    PointSourceModel model;
    SignalMatrix truth;
    MeasurementSetup setup;
};

inline Instance make_instance(Index n, Index s, Index r, std::uint64_t seed,
                              bool complex_subspace = false)
{
    Rng rng(seed);
    Instance inst;
    inst.model      = synth_model(s, n, r, rng);
    inst.truth      = build_signal(inst.model);
    inst.setup.B    = sample_subspace(s, n, rng, complex_subspace ? SubspaceKind::complex_gaussian
                                                                  : SubspaceKind::real_gaussian);
    inst.setup.y    = measure(inst.truth, inst.setup.B);
    return inst;
}

namespace detail
{

inline std::string format_double(double v)
{
    if (std::isnan(v))
    {
        return "nan";
    }
    if (std::isinf(v))
    {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace detail

///
/// Trace table: `iter,residual,rel_error,log10_rel_error,elapsed_ms`. The
/// two error columns are omitted when the run had no ground truth.
///
inline void write_trace(std::ostream& os, const ConvergenceTrace& trace, bool record_timing = true)
{
    os << "iter,residual";
    if (trace.has_ground_truth)
    {
        os << ",rel_error,log10_rel_error";
    }
    os << ",elapsed_ms\n";
    for (const auto& rec : trace.records)
    {
        os << rec.iter << ',' << detail::format_double(rec.residual);
        if (trace.has_ground_truth)
        {
            os << ',' << detail::format_double(rec.rel_error) << ','
               << detail::format_double(std::log10(rec.rel_error));
        }
        os << ',' << detail::format_double(record_timing ? rec.elapsed_ms : 0.0) << '\n';
    }
}

inline nlohmann::json config_json(const ExperimentConfig& c, const HankelDims& dims)
{
    nlohmann::json j;
    j["n"]                 = c.n;
    j["s"]                 = c.s;
    j["r"]                 = c.r;
    j["seed"]              = c.seed;
    j["trials"]            = c.trials;
    j["max_iters"]         = c.max_iters;
    j["tol"]               = c.residual_tol;
    j["mode"]              = std::string(to_string(c.mode));
    j["variant"]           = std::string(to_string(c.variant));
    j["step_size"]         = c.step_size;
    j["n1"]                = dims.n1;
    j["n2"]                = dims.n2;
    j["split_overridden"]  = c.n1.has_value();
    j["success_threshold"] = c.success_threshold;
    j["subspace"]          = c.complex_subspace ? "complex_gaussian" : "real_gaussian";
    j["version"]           = version_string;
    return j;
}

struct RunOutcome
{
    Instance instance;
    HankelDims dims;
    SolveResult result;
};

inline RunOutcome run_experiment(const ExperimentConfig& config)
{
    config.validate();
    RunOutcome out;
    out.dims = config.dims();
    detail::require(config.r <= out.dims.max_rank(),
                    "experiment: r=" + std::to_string(config.r) +
                        " exceeds the feasible rank of the lifted shape");
    out.instance = make_instance(config.n, config.s, config.r, config.seed,
                                 config.complex_subspace);
    out.result   = solve(out.instance.setup.y, out.instance.setup.B, out.dims,
                         config.solver(), out.instance.truth);
    return out;
}

/// Exit codes shared by the command-line tool.
enum ExitCode : int
{
    exit_success    = 0,
    exit_usage      = 1,
    exit_divergence = 2,
    exit_check      = 3
};

///
/// Run one instance, write the trace to `config.out` and a metadata
/// document to `config.out + ".meta.json"`, print a summary line.
///
inline int cmd_run(const ExperimentConfig& config, std::ostream& log)
{
    RunOutcome outcome;
    try
    {
        outcome = run_experiment(config);
    }
    catch (const dimension_error& e)
    {
        log << "error: " << e.what() << '\n';
        return exit_usage;
    }

    std::ofstream trace_file(config.out, std::ios::binary);
    if (!trace_file)
    {
        log << "error: cannot open " << config.out << " for writing\n";
        return exit_usage;
    }
    write_trace(trace_file, outcome.result.trace, config.record_timing);
    trace_file.close();
    if (!trace_file)
    {
        log << "error: failed writing " << config.out << '\n';
        return exit_usage;
    }

    const auto& trace = outcome.result.trace;
    nlohmann::json meta;
    meta["config"]      = config_json(config, outcome.dims);
    meta["termination"] = std::string(to_string(trace.termination));
    meta["iterations"]  = trace.records.empty() ? 0 : trace.records.back().iter;
    meta["final_rel_error"] = relative_error(outcome.result.X, outcome.instance.truth);
    meta["trace_columns"] = trace.has_ground_truth
                                ? nlohmann::json::array({"iter", "residual", "rel_error",
                                                         "log10_rel_error", "elapsed_ms"})
                                : nlohmann::json::array({"iter", "residual", "elapsed_ms"});
    std::ofstream meta_file(config.out + ".meta.json", std::ios::binary);
    if (!meta_file)
    {
        log << "error: cannot open " << config.out << ".meta.json for writing\n";
        return exit_usage;
    }
    meta_file << meta.dump(2) << '\n';

    const double final_err = meta["final_rel_error"].get<double>();
    log << "run n=" << config.n << " s=" << config.s << " r=" << config.r
        << " seed=" << config.seed << " mode=" << to_string(config.mode)
        << " variant=" << to_string(config.variant)
        << " iterations=" << meta["iterations"].get<Index>()
        << " termination=" << to_string(trace.termination)
        << " rel_error=" << detail::format_double(final_err) << '\n';

    const bool diverged = trace.termination == Termination::divergence ||
                          trace.termination == Termination::non_finite;
    return diverged ? exit_divergence : exit_success;
}

// ---------------------------------------------------------------------------
// Sweeps

struct TrialRecord
{
    Index n     = 0;
    Index s     = 0;
    Index r     = 0;
    Index trial = 0;
    std::uint64_t seed = 0;
    double rel_error   = std::numeric_limits<double>::quiet_NaN();
    Index iterations   = 0;
    std::string termination;  ///< solver termination, or "config_error"/"error"
    double wall_ms     = 0.0;
    bool success       = false;
};

struct SweepGrid
{
    std::vector<Index> n;
    std::vector<Index> s;
    std::vector<Index> r;
};

/// Aggregated row per grid cell.
struct CellSummary
{
    Index n = 0;
    Index s = 0;
    Index r = 0;
    Index trials    = 0;
    Index successes = 0;
    Index errors    = 0;
    double median_rel_error = std::numeric_limits<double>::quiet_NaN();

    double success_rate() const
    {
        return trials > 0 ? static_cast<double>(successes) / static_cast<double>(trials) : 0.0;
    }
};

/// One trial of a sweep cell. Never throws: failures are recorded.
inline TrialRecord run_trial(const ExperimentConfig& base, Index n, Index s, Index r,
                             Index trial)
{
    TrialRecord rec;
    rec.n     = n;
    rec.s     = s;
    rec.r     = r;
    rec.trial = trial;
    rec.seed  = seed_derivation(base.seed, static_cast<std::uint64_t>(trial));

    const auto start = std::chrono::steady_clock::now();
    try
    {
        ExperimentConfig cfg = base;
        cfg.n    = n;
        cfg.s    = s;
        cfg.r    = r;
        cfg.seed = rec.seed;
        if (n < 2 * r)
        {
            throw dimension_error("n must be at least 2r");
        }
        const RunOutcome out = run_experiment(cfg);
        rec.rel_error   = relative_error(out.result.X, out.instance.truth);
        rec.iterations  = out.result.trace.records.back().iter;
        rec.termination = std::string(to_string(out.result.trace.termination));
        rec.success     = rec.rel_error < base.success_threshold;
    }
    catch (const dimension_error&)
    {
        rec.termination = "config_error";
    }
    catch (const std::exception&)
    {
        rec.termination = "error";
    }
    rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                            start)
                      .count();
    return rec;
}

///
/// Run `base.trials` instances per grid cell. Trials run concurrently on
/// `base.jobs` workers; records come back in (cell, trial) order.
///
inline std::vector<TrialRecord> run_sweep(const ExperimentConfig& base, const SweepGrid& grid)
{
    detail::require(base.trials >= 1, "sweep: trials must be at least 1");
    std::vector<std::tuple<Index, Index, Index, Index>> jobs;
    for (Index n : grid.n)
    {
        for (Index s : grid.s)
        {
            for (Index r : grid.r)
            {
                for (Index t = 0; t < base.trials; ++t)
                {
                    jobs.emplace_back(n, s, r, t);
                }
            }
        }
    }

    std::vector<TrialRecord> records(jobs.size());
    unsigned workers = base.jobs > 0 ? base.jobs : std::max(1u, std::thread::hardware_concurrency());
    workers          = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(jobs.size(), 1)));

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next++; i < jobs.size(); i = next++)
        {
            const auto& [n, s, r, t] = jobs[i];
            records[i]               = run_trial(base, n, s, r, t);
        }
    };
    if (workers <= 1)
    {
        worker();
    }
    else
    {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
        {
            pool.emplace_back(worker);
        }
        for (auto& th : pool)
        {
            th.join();
        }
    }
    return records;
}

/// Per-cell success rates; a pure function of the trial records.
inline std::vector<CellSummary> aggregate(const std::vector<TrialRecord>& records)
{
    std::map<std::tuple<Index, Index, Index>, std::vector<const TrialRecord*>> cells;
    std::vector<std::tuple<Index, Index, Index>> order;
    for (const auto& rec : records)
    {
        const auto key = std::make_tuple(rec.n, rec.s, rec.r);
        if (cells.find(key) == cells.end())
        {
            order.push_back(key);
        }
        cells[key].push_back(&rec);
    }

    std::vector<CellSummary> out;
    for (const auto& key : order)
    {
        CellSummary cell;
        std::tie(cell.n, cell.s, cell.r) = key;
        std::vector<double> errs;
        for (const TrialRecord* rec : cells[key])
        {
            ++cell.trials;
            cell.successes += rec->success ? 1 : 0;
            if (rec->termination == "config_error" || rec->termination == "error")
            {
                ++cell.errors;
            }
            else
            {
                errs.push_back(rec->rel_error);
            }
        }
        if (!errs.empty())
        {
            std::sort(errs.begin(), errs.end());
            const std::size_t m   = errs.size();
            cell.median_rel_error = m % 2 ? errs[m / 2] : 0.5 * (errs[m / 2 - 1] + errs[m / 2]);
        }
        out.push_back(cell);
    }
    return out;
}

inline void write_trials(std::ostream& os, const std::vector<TrialRecord>& records)
{
    os << "n,s,r,trial,seed,rel_error,iterations,termination,wall_ms,success\n";
    for (const auto& rec : records)
    {
        os << rec.n << ',' << rec.s << ',' << rec.r << ',' << rec.trial << ',' << rec.seed << ','
           << detail::format_double(rec.rel_error) << ',' << rec.iterations << ','
           << rec.termination << ',' << detail::format_double(rec.wall_ms) << ','
           << (rec.success ? 1 : 0) << '\n';
    }
}

inline void write_summary(std::ostream& os, const std::vector<CellSummary>& cells)
{
    os << "n,s,r,trials,successes,errors,success_rate,median_rel_error\n";
    for (const auto& c : cells)
    {
        os << c.n << ',' << c.s << ',' << c.r << ',' << c.trials << ',' << c.successes << ','
           << c.errors << ',' << detail::format_double(c.success_rate()) << ','
           << detail::format_double(c.median_rel_error) << '\n';
    }
}

/// Writes `<out>` (per-trial rows) and `<out>.summary.csv`.
inline int cmd_sweep(const ExperimentConfig& base, const SweepGrid& grid, std::ostream& log)
{
    if (grid.n.empty() || grid.s.empty() || grid.r.empty() || base.trials < 1)
    {
        log << "error: sweep needs non-empty grids and trials >= 1\n";
        return exit_usage;
    }
    const auto records = run_sweep(base, grid);
    const auto cells   = aggregate(records);

    std::ofstream trials_file(base.out, std::ios::binary);
    std::ofstream summary_file(base.out + ".summary.csv", std::ios::binary);
    if (!trials_file || !summary_file)
    {
        log << "error: cannot open sweep output " << base.out << '\n';
        return exit_usage;
    }
    write_trials(trials_file, records);
    write_summary(summary_file, cells);
    write_summary(log, cells);
    return exit_success;
}

// ---------------------------------------------------------------------------
// Check suite

struct CheckResult
{
    std::string name;
    bool passed = false;
    std::string detail;
};

struct CheckOptions
{
    bool perturb_weights = false;  ///< fault injection for the weights property
    std::uint64_t seed   = 2024;
};

namespace detail
{

inline Matrix random_signal(Index rows, Index cols, Rng& rng)
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

inline double rel_gap(Complex a, Complex b)
{
    const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) / scale;
}

inline std::string sci(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", v);
    return buf;
}

} // namespace detail

///
/// Invariant suite at small sizes: adjoint identities, pseudoinverse and
/// isometry identities, weight counts, Eckart-Young optimality, tangent
/// projection properties, the solver fixed point and fast/dense agreement.
///
inline std::vector<CheckResult> run_check_suite(const CheckOptions& options = {})
{
    std::vector<CheckResult> results;
    Rng rng(options.seed);
    const std::vector<std::pair<Index, Index>> shapes = {{1, 8}, {2, 16}, {4, 32}, {3, 11}};

    auto add = [&](std::string name, double worst, double tol) {
        results.push_back({std::move(name), worst <= tol,
                           "worst=" + detail::sci(worst) + " tol=" + detail::sci(tol)});
    };

    {
        double worst = 0.0;
        for (const auto& [s, n] : shapes)
        {
            for (int t = 0; t < 10; ++t)
            {
                const Matrix x = detail::random_signal(s, n, rng);
                const Matrix b = detail::random_signal(s, n, rng);
                const Vector y = detail::random_signal(n, 1, rng);
                worst = std::max(worst, detail::rel_gap(inner(measure(x, b), y),
                                                        inner(x, adjoint_measure(y, b))));
            }
        }
        add("measurement adjoint identity", worst, 1e-10);
    }
    {
        double worst = 0.0;
        for (const auto& [s, n] : shapes)
        {
            const HankelDims dims = choose_dims(n, s);
            for (int t = 0; t < 10; ++t)
            {
                const Matrix x = detail::random_signal(s, n, rng);
                const Matrix z = detail::random_signal(dims.rows(), dims.cols(), rng);
                worst = std::max(worst, detail::rel_gap(inner(lift(x, dims), z),
                                                        inner(x, adjoint_lift(z, dims))));
                worst = std::max(worst, detail::rel_gap(inner(g_apply(x, dims), z),
                                                        inner(x, g_star(z, dims))));
            }
        }
        add("lift adjoint identities", worst, 1e-10);
    }
    {
        double worst = 0.0;
        for (const auto& [s, n] : shapes)
        {
            const HankelDims dims = choose_dims(n, s);
            for (int t = 0; t < 10; ++t)
            {
                const Matrix x = detail::random_signal(s, n, rng);
                worst = std::max(worst, (pinv_lift(lift(x, dims), dims) - x).norm() / x.norm());
                worst = std::max(worst, (g_star(g_apply(x, dims), dims) - x).norm() / x.norm());
            }
        }
        add("pseudoinverse and isometry identities", worst, 1e-13);
    }
    {
        Index mismatches = 0;
        for (Index n = 2; n <= 64; ++n)
        {
            for (Index n1 = 1; n1 <= n; ++n1)
            {
                HankelDims dims = make_dims(n, 1, n1);
                if (options.perturb_weights)
                {
                    dims.weights[0] += 1;
                }
                std::vector<Index> count(static_cast<std::size_t>(n), 0);
                for (Index j = 0; j < dims.n1; ++j)
                {
                    for (Index k = 0; k < dims.n2; ++k)
                    {
                        ++count[static_cast<std::size_t>(j + k)];
                    }
                }
                mismatches += count == dims.weights ? 0 : 1;
            }
        }
        results.push_back({"anti-diagonal weights match pair counts", mismatches == 0,
                           "mismatched splits=" + std::to_string(mismatches)});
    }
    {
        double worst = 0.0;
        for (int t = 0; t < 10; ++t)
        {
            const Matrix w = detail::random_signal(9, 7, rng);
            const Index r  = 1 + t % 5;
            const LowRankFactors f = truncate_rank(w, r);
            Eigen::JacobiSVD<Matrix> full(w);
            const double tail = full.singularValues().tail(7 - r).norm();
            worst = std::max(worst, std::abs((w - f.reconstruct()).norm() - tail) / w.norm());
        }
        add("truncated SVD is Eckart-Young optimal", worst, 1e-10);
    }
    {
        double worst = 0.0;
        for (int t = 0; t < 10; ++t)
        {
            const LowRankFactors f = truncate_rank(detail::random_signal(10, 8, rng), 3);
            const TangentSpace tan(f);
            const Matrix w1 = detail::random_signal(10, 8, rng);
            const Matrix w2 = detail::random_signal(10, 8, rng);
            const Matrix p1 = project_tangent(w1, tan);
            worst = std::max(worst, (project_tangent(p1, tan) - p1).norm() / p1.norm());
            worst = std::max(worst, detail::rel_gap(inner(p1, w2),
                                                    inner(w1, project_tangent(w2, tan))));
        }
        add("tangent projection idempotent and self-adjoint", worst, 1e-10);
    }
    {
        double worst = 0.0;
        for (const Mode mode : {Mode::dense, Mode::fast})
        {
            const Instance inst = make_instance(32, 2, 2, seed_derivation(options.seed, 1));
            const HankelDims dims = choose_dims(32, 2);
            SolverState state;
            state.X       = inst.truth;
            state.factors = truncate_rank(lift(inst.truth, dims), 2);
            SolverConfig cfg;
            cfg.rank = 2;
            cfg.mode = mode;
            const SolverState next = iterate_once(state, inst.setup.y, inst.setup.B, dims, cfg);
            worst = std::max(worst, relative_error(next.X, inst.truth));
        }
        add("ground truth is a fixed point", worst, 1e-10);
    }
    {
        double worst = 0.0;
        for (const auto& [s, n] : shapes)
        {
            const HankelDims dims = choose_dims(n, s);
            const Matrix x = detail::random_signal(s, n, rng);
            const Matrix v = detail::random_signal(dims.n2, 3, rng);
            const Matrix u = detail::random_signal(dims.rows(), 3, rng);
            const LiftedOperator op(x, dims);
            const Matrix z = lift(x, dims);
            worst = std::max(worst, (op.apply(v) - z * v).norm() / (z * v).norm());
            worst = std::max(worst,
                             (op.apply_adjoint(u) - z.adjoint() * u).norm() / (z.adjoint() * u).norm());
        }
        const Instance inst = make_instance(48, 2, 3, seed_derivation(options.seed, 2));
        const HankelDims dims = choose_dims(48, 2);
        SolverConfig dense_cfg;
        dense_cfg.rank = 3;
        SolverConfig fast_cfg = dense_cfg;
        fast_cfg.mode         = Mode::fast;
        SolverState dense_state = initial_state(inst.setup.y, inst.setup.B, dims, 3, Mode::dense);
        SolverState fast_state  = initial_state(inst.setup.y, inst.setup.B, dims, 3, Mode::fast,
                                                {8, 2, 300, 1e-12, 7});
        worst = std::max(worst, relative_error(fast_state.X, dense_state.X));
        for (int t = 0; t < 5; ++t)
        {
            dense_state = iterate_once(dense_state, inst.setup.y, inst.setup.B, dims, dense_cfg);
            fast_state  = iterate_once(fast_state, inst.setup.y, inst.setup.B, dims, fast_cfg);
            worst       = std::max(worst, relative_error(fast_state.X, dense_state.X));
        }
        add("fast path matches dense path", worst, 1e-8);
    }
    return results;
}

/// Print one line per property; exit_check if any failed.
inline int cmd_check(std::ostream& log, const CheckOptions& options = {})
{
    const auto start   = std::chrono::steady_clock::now();
    const auto results = run_check_suite(options);
    bool ok            = true;
    for (const auto& r : results)
    {
        log << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.detail << ")\n";
        ok = ok && r.passed;
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    log << (ok ? "all properties passed" : "some properties failed") << " in "
        << detail::sci(secs) << " s\n";
    return ok ? exit_success : exit_check;
}

/// Flat key/value JSON rendering of an assumption report.
inline nlohmann::json report_json(const AssumptionReport& r)
{
    nlohmann::json j;
    j["mu0"]                    = r.mu0;
    j["mu1"]                    = r.mu1;
    j["kappa"]                  = r.kappa;
    j["sigma_r"]                = r.sigma_r;
    j["rip_norm_estimate"]      = r.rip_norm_estimate;
    j["rip_tolerance"]          = r.rip_tolerance;
    j["init_spectral_distance"] = r.init_spectral_distance;
    return j;
}

/// Emit the assumption report for the instance selected by `config`.
inline int cmd_report(const ExperimentConfig& config, std::ostream& out, std::ostream& log)
{
    try
    {
        config.validate();
        const HankelDims dims = config.dims();
        const Instance inst   = make_instance(config.n, config.s, config.r, config.seed,
                                              config.complex_subspace);
        nlohmann::json j      = report_json(assumption_report(inst.model, inst.setup.B, dims));
        j["n"]                = config.n;
        j["s"]                = config.s;
        j["r"]                = config.r;
        j["seed"]             = config.seed;
        j["n1"]               = dims.n1;
        j["n2"]               = dims.n2;
        out << j.dump(2) << '\n';
    }
    catch (const dimension_error& e)
    {
        log << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_success;
}

} // namespace vhlfiht

#endif /* VHLFIHT_EXPERIMENT_HPP */
