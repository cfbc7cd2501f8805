#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace gmidas {

enum class Drivers { rv, mv, rv_mv };
enum class SpanMode { fixed_span, rolling_window };
enum class LagSpacing { day, month };
// Which return the leverage indicator tests: the raw return against zero
// (as printed) or the de-meaned innovation.
enum class IndicatorBasis { raw_return, demeaned };

struct ModelSpec {
    Drivers drivers = Drivers::rv;
    SpanMode span = SpanMode::fixed_span;
    std::size_t lag_order = 36;  // K
    std::size_t window = 22;     // N', rolling-window length in trading days
    LagSpacing lag_spacing = LagSpacing::day;
    IndicatorBasis indicator = IndicatorBasis::raw_return;

    bool has_rv() const { return drivers != Drivers::mv; }
    bool has_mv() const { return drivers != Drivers::rv; }
    // Trading-day gap between consecutive rolling driver lags.
    std::size_t lag_stride() const { return lag_spacing == LagSpacing::day ? 1 : window; }
};

struct ParamSet {
    double mu = 0.0;
    double alpha = 0.05;
    double beta = 0.90;
    double gamma = 0.0;
    double m = 0.0;
    double theta_rv = 0.0;
    double omega2_rv = 3.0;
    double theta_mv = 0.0;
    double omega2_mv = 3.0;

    double persistence() const { return alpha + beta + 0.5 * gamma; }
};

// Constraint checks. validate() admits the closed simulation domain
// (alpha >= 0); require_interior() is the strict estimation domain behind the
// unconstrained reparameterization (alpha > 0, beta > 0, alpha + gamma > 0).
void validate(const ParamSet& p, const ModelSpec& spec);          // throws std::domain_error
void require_interior(const ParamSet& p, const ModelSpec& spec);  // throws std::domain_error

// Per-day variance decomposition sigma2 = tau * g.
struct VariancePath {
    std::vector<double> tau;
    std::vector<double> g;
    std::vector<double> sigma2;
};

// tau by month for months [first_month, first_month + tau.size()).
struct MonthTauPath {
    std::size_t first_month = 0;
    std::vector<double> tau;
};

// tau by day for days [first_day, first_day + tau.size()).
struct DayTauPath {
    std::size_t first_day = 0;
    std::vector<double> tau;
};

// log tau_t = m + theta_RV * sum_k phi_k RV_{t-k} + theta_MV * sum_k phi_k MV_{t-k},
// over months t with a full K-lag history. Driver spans may be empty when the
// spec omits that driver.
MonthTauPath long_run_fixed(const ParamSet& p, const ModelSpec& spec,
                            std::span<const double> rv_by_month,
                            std::span<const double> mv_by_month);

// Rolling-window variant on the daily grid. Driver paths hold NaN before
// `valid_from`; lags are spaced spec.lag_stride() trading days apart.
DayTauPath long_run_rolling(const ParamSet& p, const ModelSpec& spec,
                            std::span<const double> rv_rolling,
                            std::span<const double> mv_rolling,
                            std::size_t valid_from);

// GJR-GARCH(1,1) recursion for the short-run component over aligned per-day
// returns and tau. g[0] = g_init; later days use the previous day's return and
// the current day's tau.
std::vector<double> short_run_path(const ParamSet& p, std::span<const double> returns,
                                   std::span<const double> tau, double g_init,
                                   IndicatorBasis indicator = IndicatorBasis::raw_return);

VariancePath conditional_variance(std::vector<double> tau, std::vector<double> g);

std::string to_string(Drivers d);
std::string to_string(SpanMode s);

}  // namespace gmidas
