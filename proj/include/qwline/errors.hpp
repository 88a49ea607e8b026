#pragma once

#include <stdexcept>

namespace qwline {

// A requested decay fit could not be carried out (window too short after
// smoothing, or a smoothed value was not positive so its log is undefined).
struct FitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An output directory or file could not be created or written.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qwline
