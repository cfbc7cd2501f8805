#include "gmidas/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gmidas {

NmResult nelder_mead(const std::function<double(std::span<const double>)>& objective,
                     std::span<const double> start, std::span<const double> step,
                     const NmOptions& options) {
    const std::size_t n = start.size();
    if (n == 0) throw std::invalid_argument("nelder_mead: empty start point");
    if (step.size() != n) throw std::invalid_argument("nelder_mead: step size mismatch");

    constexpr double kReflect = 1.0;
    constexpr double kExpand = 2.0;
    constexpr double kContract = 0.5;
    constexpr double kShrink = 0.5;

    std::vector<std::vector<double>> x(n + 1, std::vector<double>(start.begin(), start.end()));
    for (std::size_t i = 0; i < n; ++i) x[i + 1][i] += step[i];
    std::vector<double> fx(n + 1);
    for (std::size_t i = 0; i <= n; ++i) fx[i] = objective(x[i]);

    std::vector<std::size_t> idx(n + 1);
    std::vector<double> centroid(n), trial(n), trial2(n);

    auto sort_simplex = [&]() {
        for (std::size_t i = 0; i <= n; ++i) idx[i] = i;
        std::stable_sort(idx.begin(), idx.end(),
                         [&](std::size_t a, std::size_t b) { return fx[a] < fx[b]; });
    };

    NmResult result;
    double prev_best = std::numeric_limits<double>::infinity();
    std::size_t it = 0;
    for (; it < options.max_iterations; ++it) {
        sort_simplex();
        const std::size_t best = idx[0], worst = idx[n], second_worst = idx[n - 1];

        // Convergence: stalled best value and collapsed simplex, both at once.
        const double improvement = prev_best - fx[best];
        const double f_scale = std::max(1.0, std::fabs(fx[best]));
        double spread = 0.0;
        for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                spread = std::max(spread, std::fabs(x[idx[i]][j] - x[best][j]));
            }
        }
        if (std::isfinite(fx[best]) && improvement >= 0.0 &&
            improvement < options.f_rel_tol * f_scale && spread < options.x_tol) {
            result.converged = true;
            break;
        }
        prev_best = fx[best];

        for (std::size_t j = 0; j < n; ++j) centroid[j] = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) centroid[j] += x[idx[i]][j];
        }
        for (std::size_t j = 0; j < n; ++j) centroid[j] /= static_cast<double>(n);

        for (std::size_t j = 0; j < n; ++j) {
            trial[j] = centroid[j] + kReflect * (centroid[j] - x[worst][j]);
        }
        const double f_reflect = objective(trial);

        if (f_reflect < fx[best]) {
            for (std::size_t j = 0; j < n; ++j) {
                trial2[j] = centroid[j] + kExpand * (trial[j] - centroid[j]);
            }
            const double f_expand = objective(trial2);
            if (f_expand < f_reflect) {
                x[worst] = trial2;
                fx[worst] = f_expand;
            } else {
                x[worst] = trial;
                fx[worst] = f_reflect;
            }
            continue;
        }
        if (f_reflect < fx[second_worst]) {
            x[worst] = trial;
            fx[worst] = f_reflect;
            continue;
        }

        const bool outside = f_reflect < fx[worst];
        for (std::size_t j = 0; j < n; ++j) {
            const double target = outside ? trial[j] : x[worst][j];
            trial2[j] = centroid[j] + kContract * (target - centroid[j]);
        }
        const double f_contract = objective(trial2);
        if (f_contract < (outside ? f_reflect : fx[worst])) {
            x[worst] = trial2;
            fx[worst] = f_contract;
            continue;
        }

        for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                x[idx[i]][j] = x[best][j] + kShrink * (x[idx[i]][j] - x[best][j]);
            }
            fx[idx[i]] = objective(x[idx[i]]);
        }
    }

    sort_simplex();
    result.x = x[idx[0]];
    result.fx = fx[idx[0]];
    result.iterations = it;
    return result;
}

}  // namespace gmidas
