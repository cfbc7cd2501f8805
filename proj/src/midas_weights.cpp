#include "gmidas/midas_weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gmidas/errors.hpp"

namespace gmidas {

WeightVector beta_weights(std::size_t lag_order, double omega1, double omega2) {
    if (lag_order == 0) throw std::domain_error("beta_weights: lag order must be >= 1");
    if (!(omega1 >= 1.0) || !(omega2 >= 1.0)) {
        throw std::domain_error("beta_weights: shape parameters must be >= 1");
    }
    WeightVector w;
    w.omega1 = omega1;
    w.omega2 = omega2;
    if (lag_order == 1) {
        w.weights = {1.0};
        return w;
    }

    // Log-space evaluation keeps large shape parameters (omega2 ~ 70 in
    // practice) from underflowing before normalization. Exponents equal to
    // zero are skipped so that 0^0 contributes a factor of exactly 1.
    const double kf = static_cast<double>(lag_order);
    std::vector<double> logw(lag_order);
    double max_log = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 1; k <= lag_order; ++k) {
        double lw = 0.0;
        if (omega1 != 1.0) lw += (omega1 - 1.0) * std::log(static_cast<double>(k) / kf);
        if (omega2 != 1.0) {
            const double tail = 1.0 - static_cast<double>(k) / kf;
            lw += tail > 0.0 ? (omega2 - 1.0) * std::log(tail)
                             : -std::numeric_limits<double>::infinity();
        }
        logw[k - 1] = lw;
        max_log = std::max(max_log, lw);
    }
    if (!(max_log > -std::numeric_limits<double>::infinity())) {
        throw numeric_error("beta_weights: all weights vanish, cannot normalize");
    }

    w.weights.resize(lag_order);
    double sum = 0.0;
    for (std::size_t k = 0; k < lag_order; ++k) {
        w.weights[k] = std::exp(logw[k] - max_log);
        sum += w.weights[k];
    }
    for (double& v : w.weights) v /= sum;
    return w;
}

WeightVector beta_weights_restricted(std::size_t lag_order, double omega2) {
    return beta_weights(lag_order, 1.0, omega2);
}

}  // namespace gmidas
