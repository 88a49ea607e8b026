#pragma once

#include <vector>

#include "qwline/walk.hpp"

namespace qwline {

struct AnalyticEntry {
    int site = 0;
    Complex a{0.0, 0.0};
    Complex b{0.0, 0.0};
};

// Initial amplitudes entering the Bessel closed form for the long-time
// position distribution. Sites must be distinct and the norm must be 1.
class AnalyticInitial {
  public:
    explicit AnalyticInitial(std::vector<AnalyticEntry> entries);
    const std::vector<AnalyticEntry>& entries() const { return entries_; }

  private:
    std::vector<AnalyticEntry> entries_;
};

// Converts any walk initial condition into the form used by the closed-form
// expressions.
AnalyticInitial to_analytic(const InitialCondition& cond);

// Long-time approximation to the position distribution at site x and time
// t >= 1:
//
//   P_x(t) ~ |sum_y (-1)^y a_y J_{x-y}(tau)|^2 + |sum_y (-1)^y b_y J_{x-y}(tau)|^2
//
// with tau = t/sqrt(2) and the sums running over the initial support. The
// result is exact in the t -> inf limit and accurate to O(1/t) corrections
// at finite times. Throws std::domain_error for t < 1.
double analytic_prob(int x, int t, const AnalyticInitial& init);

// Same distribution for the symmetric-pair start, reduced to two Bessel
// terms: P_x(t) = 0.5 * [J_{x+k}(tau) + sign*J_{x-k}(tau)]^2.
double analytic_prob_pair(int x, int t, int k, int sign);

// Closed-form survival probability: sum of the distribution over [-s, s].
double analytic_survival(int t, int s, const AnalyticInitial& init);
double analytic_survival_pair(int t, int s, int k, int sign);

// Predicted power-law exponent of the survival probability for the
// symmetric-pair start: -3 (fast decay) when the pair interferes
// destructively near the origin — odd k with sign +1, or even k with
// sign -1 — and -1 (slow decay) otherwise.
int asymptotic_survival_exponent(int k, int sign);

}  // namespace qwline
