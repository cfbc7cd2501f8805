#include "gmidas/diagnostics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "gmidas/errors.hpp"
#include "gmidas/timeseries.hpp"

namespace gmidas {

namespace {

// Regularized lower incomplete gamma P(a, x) by series expansion (x < a + 1).
double gamma_p_series(double a, double x) {
    double term = 1.0 / a;
    double sum = term;
    for (int k = 1; k < 10000; ++k) {
        term *= x / (a + k);
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * 1e-17) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Regularized upper incomplete gamma Q(a, x) by continued fraction (x >= a + 1),
// modified Lentz algorithm.
double gamma_q_continued_fraction(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 10000; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-17) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double mean_of(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

}  // namespace

double chi_square_sf(double x, std::size_t df) {
    if (df == 0) throw std::invalid_argument("chi_square_sf: df must be >= 1");
    if (!(x >= 0.0)) throw std::invalid_argument("chi_square_sf: x must be >= 0");
    if (x == 0.0) return 1.0;
    const double a = 0.5 * static_cast<double>(df);
    const double half_x = 0.5 * x;
    if (half_x < a + 1.0) return 1.0 - gamma_p_series(a, half_x);
    return gamma_q_continued_fraction(a, half_x);
}

TestResult jarque_bera(std::span<const double> series) {
    if (series.size() < 4) throw std::invalid_argument("jarque_bera: need n >= 4");
    const Stats s = descriptive_stats(series);
    if (!(s.std_dev > 0.0)) throw numeric_error("jarque_bera: degenerate variance");
    const double n = static_cast<double>(series.size());
    const double skew = s.skewness;
    const double kurt = s.kurtosis;
    TestResult r;
    r.statistic = n * (skew * skew / 6.0 + (kurt - 3.0) * (kurt - 3.0) / 24.0);
    r.df = 2;
    r.p_value = chi_square_sf(r.statistic, 2);
    return r;
}

TestResult ljung_box(std::span<const double> series, std::size_t lags) {
    const std::size_t n = series.size();
    if (lags == 0) throw std::invalid_argument("ljung_box: lags must be >= 1");
    if (n <= lags) throw std::invalid_argument("ljung_box: need n > lags");
    const double mean = mean_of(series);
    double denom = 0.0;
    for (double x : series) denom += (x - mean) * (x - mean);
    if (!(denom > 0.0)) throw numeric_error("ljung_box: zero-variance series");

    TestResult r;
    r.lags = lags;
    r.df = lags;
    double q = 0.0;
    for (std::size_t k = 1; k <= lags; ++k) {
        double num = 0.0;
        for (std::size_t t = k; t < n; ++t) {
            num += (series[t] - mean) * (series[t - k] - mean);
        }
        const double rho = num / denom;  // biased estimator, n denominator
        q += rho * rho / static_cast<double>(n - k);
    }
    r.statistic = static_cast<double>(n) * (static_cast<double>(n) + 2.0) * q;
    r.p_value = chi_square_sf(r.statistic, lags);
    return r;
}

TestResult arch_lm(std::span<const double> series, std::size_t lags) {
    const std::size_t n = series.size();
    if (lags == 0) throw std::invalid_argument("arch_lm: lags must be >= 1");
    if (n <= 2 * lags + 1) throw std::invalid_argument("arch_lm: need n > 2*lags + 1");

    std::vector<double> sq(n);
    for (std::size_t i = 0; i < n; ++i) sq[i] = series[i] * series[i];
    const std::size_t n_eff = n - lags;
    const std::size_t p = lags + 1;  // intercept + lags

    TestResult r;
    r.lags = lags;
    r.df = lags;

    // Normal equations X'X b = X'y with X = [1, sq_{t-1}, ..., sq_{t-q}].
    std::vector<double> xtx(p * p, 0.0), xty(p, 0.0);
    double y_sum = 0.0, y_sq_sum = 0.0;
    for (std::size_t t = lags; t < n; ++t) {
        std::vector<double> row(p);
        row[0] = 1.0;
        for (std::size_t k = 1; k <= lags; ++k) row[k] = sq[t - k];
        for (std::size_t i = 0; i < p; ++i) {
            xty[i] += row[i] * sq[t];
            for (std::size_t j = 0; j <= i; ++j) xtx[i * p + j] += row[i] * row[j];
        }
        y_sum += sq[t];
        y_sq_sum += sq[t] * sq[t];
    }
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = i + 1; j < p; ++j) xtx[i * p + j] = xtx[j * p + i];
    }

    const double y_mean = y_sum / static_cast<double>(n_eff);
    const double sst = y_sq_sum - static_cast<double>(n_eff) * y_mean * y_mean;
    if (!(sst > 1e-300)) {
        r.degenerate = true;  // constant squares: nothing to explain
        return r;
    }

    // Cholesky factorization; a vanishing pivot flags perfect collinearity.
    std::vector<double> chol(p * p, 0.0);
    const double pivot_tol = 1e-12 * (1.0 + xtx[0]);
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double s = xtx[i * p + j];
            for (std::size_t k = 0; k < j; ++k) s -= chol[i * p + k] * chol[j * p + k];
            if (i == j) {
                if (!(s > pivot_tol)) {
                    r.degenerate = true;
                    return r;
                }
                chol[i * p + i] = std::sqrt(s);
            } else {
                chol[i * p + j] = s / chol[j * p + j];
            }
        }
    }
    // Solve L L' b = X'y.
    std::vector<double> b(p);
    for (std::size_t i = 0; i < p; ++i) {
        double s = xty[i];
        for (std::size_t k = 0; k < i; ++k) s -= chol[i * p + k] * b[k];
        b[i] = s / chol[i * p + i];
    }
    for (std::size_t ii = p; ii > 0; --ii) {
        const std::size_t i = ii - 1;
        double s = b[i];
        for (std::size_t k = i + 1; k < p; ++k) s -= chol[k * p + i] * b[k];
        b[i] = s / chol[i * p + i];
    }

    // R^2 = 1 - SSR/SST via the fitted sum b'X'y.
    double fitted = 0.0;
    for (std::size_t i = 0; i < p; ++i) fitted += b[i] * xty[i];
    const double ssr = y_sq_sum - fitted;
    double r2 = 1.0 - ssr / sst;
    if (r2 < 0.0) r2 = 0.0;
    if (r2 > 1.0) r2 = 1.0;

    r.statistic = static_cast<double>(n_eff) * r2;
    r.p_value = chi_square_sf(r.statistic, lags);
    return r;
}

}  // namespace gmidas
