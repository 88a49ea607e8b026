#pragma once

namespace qwline_test {

// Reference J_n(tau) for n >= 0, tau >= 0, summed from the ascending power
// series in multi-precision arithmetic. Completely independent of the
// recurrence-based implementation under test; the extended precision absorbs
// the catastrophic cancellation the alternating series suffers at large tau.
double series_bessel_j(int n, double tau);

}  // namespace qwline_test
