#pragma once

#include <cstddef>
#include <span>

namespace gmidas {

struct TestResult {
    double statistic = 0.0;
    std::size_t df = 0;
    double p_value = 1.0;
    std::size_t lags = 0;     // 0 when not applicable
    bool degenerate = false;  // regression collapsed (ARCH-LM only)
};

// JB = n (S^2/6 + (K-3)^2/24), chi-square with 2 df under normality.
TestResult jarque_bera(std::span<const double> series);

// Q = n(n+2) sum_{k<=m} rho_k^2/(n-k) with biased (n-denominator)
// autocorrelations; chi-square with m df.
TestResult ljung_box(std::span<const double> series, std::size_t lags);

// LM = n_eff * R^2 from regressing e_t^2 on an intercept and q lags of e^2;
// chi-square with q df. Collinear regressors yield a degenerate result with
// statistic 0 and p = 1 instead of an error.
TestResult arch_lm(std::span<const double> series, std::size_t lags);

// Chi-square survival function via the regularized incomplete gamma.
double chi_square_sf(double x, std::size_t df);

}  // namespace gmidas
