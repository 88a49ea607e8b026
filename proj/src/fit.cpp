#include "qwline/fit.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "qwline/errors.hpp"

namespace qwline {

DecayFit fit_decay_exponent(const TimeSeries& series, int t_min, int t_max,
                            int smoothing_width) {
    if (smoothing_width < 1) {
        throw std::invalid_argument("smoothing width must be >= 1");
    }
    if (t_min < 1 || t_min >= t_max) {
        throw std::invalid_argument("fit window must satisfy 1 <= t_min < t_max");
    }

    std::vector<Sample> window;
    for (const Sample& s : series.samples()) {
        if (s.t >= t_min && s.t <= t_max) window.push_back(s);
    }

    const std::size_t width = static_cast<std::size_t>(smoothing_width);
    const std::size_t n_blocks = window.size() / width;
    if (n_blocks < 10) {
        throw FitError("fit window [" + std::to_string(t_min) + ", " + std::to_string(t_max) +
                       "] yields " + std::to_string(n_blocks) +
                       " smoothed points; at least 10 are required");
    }

    // Consecutive complete blocks of `width` samples; the trailing partial
    // block (if any) is dropped. Each block contributes (mean t, mean value).
    std::vector<double> log_t, log_v;
    log_t.reserve(n_blocks);
    log_v.reserve(n_blocks);
    for (std::size_t b = 0; b < n_blocks; ++b) {
        double sum_t = 0.0, sum_v = 0.0;
        for (std::size_t i = b * width; i < (b + 1) * width; ++i) {
            sum_t += window[i].t;
            sum_v += window[i].value;
        }
        const double mean_t = sum_t / static_cast<double>(width);
        const double mean_v = sum_v / static_cast<double>(width);
        if (!(mean_v > 0.0)) {
            throw FitError("smoothed value is not positive near t = " +
                           std::to_string(static_cast<long long>(mean_t)) +
                           "; cannot fit a power law");
        }
        log_t.push_back(std::log(mean_t));
        log_v.push_back(std::log(mean_v));
    }

    double mean_x = 0.0, mean_y = 0.0;
    for (std::size_t i = 0; i < n_blocks; ++i) {
        mean_x += log_t[i];
        mean_y += log_v[i];
    }
    mean_x /= static_cast<double>(n_blocks);
    mean_y /= static_cast<double>(n_blocks);

    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n_blocks; ++i) {
        const double dx = log_t[i] - mean_x;
        sxx += dx * dx;
        sxy += dx * (log_v[i] - mean_y);
    }

    DecayFit fit;
    fit.exponent = sxy / sxx;
    fit.intercept = mean_y - fit.exponent * mean_x;
    fit.t_min = t_min;
    fit.t_max = t_max;
    fit.smoothing_width = smoothing_width;

    double ss_res = 0.0;
    for (std::size_t i = 0; i < n_blocks; ++i) {
        const double r = log_v[i] - (fit.intercept + fit.exponent * log_t[i]);
        ss_res += r * r;
    }
    fit.rms_residual = std::sqrt(ss_res / static_cast<double>(n_blocks));
    return fit;
}

}  // namespace qwline
