#pragma once

#include "qwline/series.hpp"

namespace qwline {

// Result of a power-law fit value ~ C * t^exponent over [t_min, t_max].
struct DecayFit {
    double exponent = 0.0;
    double intercept = 0.0;  // ln C, i.e. the log-log fit value at ln t = 0
    int t_min = 0;
    int t_max = 0;
    int smoothing_width = 1;
    double rms_residual = 0.0;  // RMS of the log-log residuals
};

// Fits a power law to the samples with t in [t_min, t_max]. The window is
// first split into consecutive complete blocks of `smoothing_width` samples
// (a trailing partial block is dropped); each block contributes its mean t
// and mean value. The exponent is the least-squares slope of ln(mean value)
// against ln(mean t). Smoothing over blocks irons out the parity and
// quasi-periodic oscillations that otherwise make pointwise logs diverge.
//
// Throws FitError if fewer than 10 blocks remain or any block mean is not
// positive; throws std::invalid_argument for a malformed window or width.
DecayFit fit_decay_exponent(const TimeSeries& series, int t_min, int t_max,
                            int smoothing_width);

}  // namespace qwline
