#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gmidas/timeseries.hpp"
#include "gmidas/volmodel.hpp"

namespace gmidas {

// Estimation inputs: the return panel plus (when the spec needs one) a
// monthly macro series covering every panel month.
struct Dataset {
    ReturnPanel panel;
    std::optional<MonthlySeries> mv;
};

// Data assembled for likelihood evaluation under one ModelSpec. Driver paths
// are precomputed once; only the parameter-dependent parts are re-evaluated
// per objective call.
struct Prepared {
    ModelSpec spec;
    std::vector<double> r;               // flat daily returns
    std::vector<MonthBlock> months;      // calendar grouping over r
    std::vector<std::size_t> day_month;  // day index -> month index
    std::vector<double> rv_month;        // fixed-span drivers per month
    std::vector<double> mv_month;
    std::vector<double> rv_roll;  // rolling drivers per day (NaN before valid_from)
    std::vector<double> mv_roll;
    std::size_t roll_valid_from = 0;
    std::size_t start_month = 0;  // first in-sample month (fixed span)
    std::size_t start_day = 0;    // first in-sample day
    std::size_t days() const { return r.size(); }
    // Likelihood observations: in-sample days after the seeded first day.
    std::size_t n_obs() const { return r.size() - start_day - 1; }
};

// Builds driver histories and the burn-in boundary. min_start_day raises the
// first in-sample day, which makes likelihoods comparable across specs with
// different natural burn-ins.
Prepared prepare(const Dataset& data, const ModelSpec& spec,
                 std::size_t min_start_day = 0);

// Gaussian quasi-log-likelihood over the in-sample days (the first one seeds
// the recursion and is skipped). Throws std::domain_error on constraint
// violations and numeric_error on non-finite intermediates.
double log_likelihood(const ParamSet& p, const Prepared& prep);

// tau/g/sigma2 over the in-sample days [start_day, days).
VariancePath variance_path(const ParamSet& p, const Prepared& prep);

struct OptimOptions {
    std::size_t restarts = 8;
    std::size_t max_iterations = 2000;
    double tolerance = 1e-8;  // relative LLF change
    std::uint64_t seed = 0;
    bool pin_theta = false;  // fix all theta at 0 (drops theta/omega2 from the fit)
    std::optional<ParamSet> warm_start;  // extra restart from a known point
};

struct Convergence {
    std::size_t iterations = 0;
    double grad_norm = 0.0;  // finite-difference, transformed space
    std::size_t restarts_used = 0;
    bool converged = false;
};

struct FitResult {
    ParamSet params;
    std::vector<std::string> param_names;
    std::vector<double> std_errors;  // NaN where unavailable
    double llf = 0.0;
    double aic = 0.0;
    double bic = 0.0;
    double variance_ratio = 0.0;  // fraction, not percent
    VariancePath path;            // in-sample days
    Convergence convergence;
    std::size_t n_obs = 0;
};

// Thrown when no restart converges; carries the best attempt.
struct non_convergence_error : std::runtime_error {
    FitResult best;
    explicit non_convergence_error(FitResult b)
        : std::runtime_error("fit: no restart converged"), best(std::move(b)) {}
};

FitResult fit(const Dataset& data, const ModelSpec& spec, const OptimOptions& options = {});
FitResult fit(const Prepared& prep, const OptimOptions& options = {});

// Observed-information standard errors: central-difference Hessian of -LLF in
// natural coordinates, relative step 1e-4. Parameters loading on non-positive
// curvature directions come back NaN.
std::vector<double> std_errors(const ParamSet& p, const Prepared& prep,
                               bool pin_theta = false);

// aic = 2k - 2 llf, bic = k ln(n) - 2 llf.
std::pair<double, double> information_criteria(double llf, std::size_t k, std::size_t n);

// Var(log tau) / Var(log(tau * g)) with fixed-span paths aggregated monthly
// (g summed within each month) and rolling paths taken daily.
double variance_ratio(const VariancePath& path, const Prepared& prep);
double variance_ratio_monthly(std::span<const double> tau_by_month,
                              std::span<const double> g_month_sums);
double variance_ratio_daily(std::span<const double> tau, std::span<const double> g);

// Bijection between the open constraint set and R^k. Layout matches
// param_names(spec, pin_theta); round-trips are exact to floating precision.
std::vector<std::string> param_names(const ModelSpec& spec, bool pin_theta = false);
std::vector<double> transform_params(const ParamSet& p, const ModelSpec& spec,
                                     bool pin_theta = false);
ParamSet untransform_params(std::span<const double> v, const ModelSpec& spec,
                            bool pin_theta = false);
std::vector<double> natural_params(const ParamSet& p, const ModelSpec& spec,
                                   bool pin_theta = false);
ParamSet from_natural_params(std::span<const double> v, const ModelSpec& spec,
                             bool pin_theta = false);

// Moment-based starting point and the deterministic multi-start list.
ParamSet default_initials(const Prepared& prep);
std::vector<ParamSet> restart_initials(const Prepared& prep, const OptimOptions& options);

namespace detail {
// Central-difference Hessian with per-parameter relative steps; used by
// std_errors and exposed for direct testing.
std::vector<double> hessian(const std::function<double(std::span<const double>)>& f,
                            std::span<const double> x, double rel_step);
std::vector<double> se_from_hessian(std::span<const double> hessian, std::size_t dim);
}  // namespace detail

}  // namespace gmidas
