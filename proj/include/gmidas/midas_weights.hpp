#pragma once

#include <cstddef>
#include <vector>

namespace gmidas {

// Beta-polynomial lag weights, normalized to sum to one.
struct WeightVector {
    std::vector<double> weights;  // indexed k-1 for lags k = 1..K
    double omega1 = 1.0;
    double omega2 = 1.0;

    std::size_t lag_order() const { return weights.size(); }
};

// phi_k proportional to (k/K)^(omega1-1) * (1 - k/K)^(omega2-1). The boundary
// term 0^0 is taken as 1, so omega = 1 gives exactly uniform weights; for
// omega2 > 1 the terminal weight at k = K is exactly zero. A single-lag filter
// (K = 1) is the identity weight {1} for any shape parameters.
WeightVector beta_weights(std::size_t lag_order, double omega1, double omega2);

// The omega1 = 1 restriction: monotonically decaying weights.
WeightVector beta_weights_restricted(std::size_t lag_order, double omega2);

}  // namespace gmidas
