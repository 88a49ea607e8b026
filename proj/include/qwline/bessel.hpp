#pragma once

#include <vector>

namespace qwline {

// Bessel function of the first kind J_n(tau) for integer order n (any sign)
// and tau >= 0. Computed by downward recurrence with normalization against
// J_0 + 2*sum_m J_{2m} = 1; absolute error is well below 1e-12 over the
// ranges used here (|n| <= 1e6). Throws std::domain_error for tau < 0 and
// std::invalid_argument for |n| > 1e6.
double bessel_j(int n, double tau);

// J_0(tau) .. J_{n_max}(tau) in a single recurrence pass. Same accuracy and
// error conditions as bessel_j; n_max must be >= 0.
std::vector<double> bessel_j_batch(int n_max, double tau);

}  // namespace qwline
