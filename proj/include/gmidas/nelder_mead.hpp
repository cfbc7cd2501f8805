#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace gmidas {

struct NmOptions {
    std::size_t max_iterations = 2000;
    double f_rel_tol = 1e-8;  // relative best-value improvement per cycle
    double x_tol = 1e-6;      // max vertex displacement from the best vertex
};

struct NmResult {
    std::vector<double> x;
    double fx = 0.0;
    std::size_t iterations = 0;
    bool converged = false;
};

// Derivative-free simplex minimization. The objective may return +infinity to
// reject a point. Convergence requires both the relative improvement of the
// best value over a full cycle to drop below f_rel_tol and the simplex to
// shrink below x_tol.
NmResult nelder_mead(const std::function<double(std::span<const double>)>& objective,
                     std::span<const double> start, std::span<const double> step,
                     const NmOptions& options = {});

}  // namespace gmidas
