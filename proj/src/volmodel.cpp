#include "gmidas/volmodel.hpp"

#include <cmath>
#include <stdexcept>

#include "gmidas/errors.hpp"
#include "gmidas/midas_weights.hpp"

namespace gmidas {

namespace {

void check_common(const ParamSet& p, const ModelSpec& spec, bool strict) {
    if (strict ? !(p.alpha > 0.0) : !(p.alpha >= 0.0)) {
        throw std::domain_error("ParamSet: alpha must be " +
                                std::string(strict ? "> 0" : ">= 0"));
    }
    if (strict ? !(p.beta > 0.0) : !(p.beta >= 0.0)) {
        throw std::domain_error("ParamSet: beta must be " +
                                std::string(strict ? "> 0" : ">= 0"));
    }
    if (!(p.persistence() < 1.0)) {
        throw std::domain_error("ParamSet: alpha + beta + 0.5*gamma must be < 1");
    }
    if (strict ? !(p.persistence() > 0.0) : !(p.persistence() >= 0.0)) {
        throw std::domain_error("ParamSet: alpha + beta + 0.5*gamma must be positive");
    }
    const double news = p.alpha + p.gamma;
    if (strict ? !(news > 0.0) : !(news >= 0.0)) {
        throw std::domain_error("ParamSet: alpha + gamma must be " +
                                std::string(strict ? "> 0" : ">= 0"));
    }
    if (spec.has_rv() && (strict ? !(p.omega2_rv > 1.0) : !(p.omega2_rv >= 1.0))) {
        throw std::domain_error("ParamSet: omega2 (RV) must be >= 1");
    }
    if (spec.has_mv() && (strict ? !(p.omega2_mv > 1.0) : !(p.omega2_mv >= 1.0))) {
        throw std::domain_error("ParamSet: omega2 (MV) must be >= 1");
    }
    for (double v : {p.mu, p.alpha, p.beta, p.gamma, p.m, p.theta_rv, p.theta_mv}) {
        if (!std::isfinite(v)) throw std::domain_error("ParamSet: non-finite parameter");
    }
}

}  // namespace

void validate(const ParamSet& p, const ModelSpec& spec) { check_common(p, spec, false); }

void require_interior(const ParamSet& p, const ModelSpec& spec) {
    check_common(p, spec, true);
}

MonthTauPath long_run_fixed(const ParamSet& p, const ModelSpec& spec,
                            std::span<const double> rv_by_month,
                            std::span<const double> mv_by_month) {
    const std::size_t K = spec.lag_order;
    const std::size_t n_months =
        spec.has_rv() ? rv_by_month.size() : mv_by_month.size();
    if (spec.has_rv() && spec.has_mv() && rv_by_month.size() != mv_by_month.size()) {
        throw std::invalid_argument("long_run_fixed: driver histories differ in length");
    }
    if (n_months <= K) {
        throw std::invalid_argument("long_run_fixed: need more than K=" +
                                    std::to_string(K) + " months of driver history, got " +
                                    std::to_string(n_months));
    }

    MonthTauPath out;
    out.first_month = K;
    out.tau.resize(n_months - K);
    const WeightVector w_rv =
        spec.has_rv() ? beta_weights_restricted(K, p.omega2_rv) : WeightVector{};
    const WeightVector w_mv =
        spec.has_mv() ? beta_weights_restricted(K, p.omega2_mv) : WeightVector{};
    for (std::size_t t = K; t < n_months; ++t) {
        double log_tau = p.m;
        if (spec.has_rv()) {
            double acc = 0.0;
            for (std::size_t k = 1; k <= K; ++k) acc += w_rv.weights[k - 1] * rv_by_month[t - k];
            log_tau += p.theta_rv * acc;
        }
        if (spec.has_mv()) {
            double acc = 0.0;
            for (std::size_t k = 1; k <= K; ++k) acc += w_mv.weights[k - 1] * mv_by_month[t - k];
            log_tau += p.theta_mv * acc;
        }
        const double tau = std::exp(log_tau);
        if (!std::isfinite(tau) || !(tau > 0.0)) {
            throw numeric_error("long_run_fixed: non-finite tau at month index " +
                                std::to_string(t));
        }
        out.tau[t - K] = tau;
    }
    return out;
}

DayTauPath long_run_rolling(const ParamSet& p, const ModelSpec& spec,
                            std::span<const double> rv_rolling,
                            std::span<const double> mv_rolling,
                            std::size_t valid_from) {
    const std::size_t K = spec.lag_order;
    const std::size_t stride = spec.lag_stride();
    const std::size_t n_days = spec.has_rv() ? rv_rolling.size() : mv_rolling.size();
    if (spec.has_rv() && spec.has_mv() && rv_rolling.size() != mv_rolling.size()) {
        throw std::invalid_argument("long_run_rolling: driver paths differ in length");
    }
    const std::size_t first_day = valid_from + K * stride;
    if (first_day >= n_days) {
        throw std::invalid_argument("long_run_rolling: need " + std::to_string(first_day) +
                                    " days of history, have " + std::to_string(n_days));
    }

    DayTauPath out;
    out.first_day = first_day;
    out.tau.resize(n_days - first_day);
    const WeightVector w_rv =
        spec.has_rv() ? beta_weights_restricted(K, p.omega2_rv) : WeightVector{};
    const WeightVector w_mv =
        spec.has_mv() ? beta_weights_restricted(K, p.omega2_mv) : WeightVector{};
    for (std::size_t i = first_day; i < n_days; ++i) {
        double log_tau = p.m;
        if (spec.has_rv()) {
            double acc = 0.0;
            for (std::size_t k = 1; k <= K; ++k) {
                acc += w_rv.weights[k - 1] * rv_rolling[i - k * stride];
            }
            log_tau += p.theta_rv * acc;
        }
        if (spec.has_mv()) {
            double acc = 0.0;
            for (std::size_t k = 1; k <= K; ++k) {
                acc += w_mv.weights[k - 1] * mv_rolling[i - k * stride];
            }
            log_tau += p.theta_mv * acc;
        }
        const double tau = std::exp(log_tau);
        if (!std::isfinite(tau) || !(tau > 0.0)) {
            throw numeric_error("long_run_rolling: non-finite tau at day " +
                                std::to_string(i));
        }
        out.tau[i - first_day] = tau;
    }
    return out;
}

std::vector<double> short_run_path(const ParamSet& p, std::span<const double> returns,
                                   std::span<const double> tau, double g_init,
                                   IndicatorBasis indicator) {
    if (returns.size() != tau.size()) {
        throw std::invalid_argument("short_run_path: returns/tau length mismatch");
    }
    if (!(g_init > 0.0)) throw std::domain_error("short_run_path: g_init must be > 0");
    std::vector<double> g(returns.size());
    if (returns.empty()) return g;
    g[0] = g_init;
    const double intercept = 1.0 - p.persistence();
    for (std::size_t i = 1; i < returns.size(); ++i) {
        if (!(tau[i] > 0.0)) {
            throw std::domain_error("short_run_path: non-positive tau at day " +
                                    std::to_string(i));
        }
        const double innov = returns[i - 1] - p.mu;
        const double sign_basis =
            indicator == IndicatorBasis::raw_return ? returns[i - 1] : innov;
        const double arch = p.alpha + (sign_basis < 0.0 ? p.gamma : 0.0);
        g[i] = intercept + arch * innov * innov / tau[i] + p.beta * g[i - 1];
        if (!std::isfinite(g[i]) || !(g[i] > 0.0)) {
            throw numeric_error("short_run_path: invalid g at day " + std::to_string(i));
        }
    }
    return g;
}

VariancePath conditional_variance(std::vector<double> tau, std::vector<double> g) {
    if (tau.size() != g.size()) {
        throw std::invalid_argument("conditional_variance: tau/g length mismatch");
    }
    VariancePath path;
    path.sigma2.resize(tau.size());
    for (std::size_t i = 0; i < tau.size(); ++i) {
        if (!(tau[i] > 0.0) || !(g[i] > 0.0)) {
            throw std::domain_error("conditional_variance: non-positive component at day " +
                                    std::to_string(i));
        }
        path.sigma2[i] = tau[i] * g[i];
    }
    path.tau = std::move(tau);
    path.g = std::move(g);
    return path;
}

std::string to_string(Drivers d) {
    switch (d) {
        case Drivers::rv: return "rv";
        case Drivers::mv: return "mv";
        case Drivers::rv_mv: return "rv+mv";
    }
    return "?";
}

std::string to_string(SpanMode s) {
    return s == SpanMode::fixed_span ? "fixed" : "rolling";
}

}  // namespace gmidas
