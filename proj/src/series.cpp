#include "qwline/series.hpp"

#include <cmath>
#include <stdexcept>

namespace qwline {

void TimeSeries::append(int t, double value) {
    if (!samples_.empty() && t <= samples_.back().t) {
        throw std::invalid_argument("time series times must be strictly increasing");
    }
    if (!std::isfinite(value)) {
        throw std::invalid_argument("time series values must be finite");
    }
    samples_.push_back({t, value});
}

}  // namespace qwline
