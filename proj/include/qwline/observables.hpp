#pragma once

#include <array>
#include <vector>

#include "qwline/series.hpp"
#include "qwline/walk.hpp"

namespace qwline {

// Position distribution P_x = |a_x|^2 + |b_x|^2 at a fixed time.
struct ProbabilityProfile {
    int t = 0;
    int x_min = 0;  // position of p.front(); p covers [x_min, x_min + p.size() - 1]
    std::vector<double> p;

    double at(int x) const;  // 0 outside the stored range
    double max_p() const;
};

ProbabilityProfile probability_profile(const WalkState& state);

// Probability of finding the walker within [-s, s], s >= 0.
double survival(const WalkState& state, int s);

// Variance of the position distribution, sum_x x^2 P_x - (sum_x x P_x)^2.
double variance(const WalkState& state);

// Reduced density matrix of the coin after tracing out position. Indices are
// ordered (|R>, |L>); the matrix is Hermitian with unit trace.
struct CoinDensityMatrix {
    std::array<std::array<Complex, 2>, 2> m{};

    // Eigenvalues in descending order, clamped to [0, 1]. For a 2x2
    // Hermitian matrix these follow from the trace and the discriminant.
    std::array<double, 2> eigenvalues() const;
};

CoinDensityMatrix coin_density(const WalkState& state);

// Von Neumann entropy of the coin state in bits: -sum lambda_i log2 lambda_i
// with 0 log 0 = 0. Throws std::invalid_argument if the matrix is not
// Hermitian with unit trace (tolerance 1e-9).
double entanglement_entropy(const CoinDensityMatrix& rho);

// Long-time entropy estimate: the mean of the samples with t in
// [t_min, t_max]. Throws std::invalid_argument if the window is malformed or
// contains no samples.
double asymptotic_entropy(const TimeSeries& entropy_series, int t_min, int t_max);

}  // namespace qwline
