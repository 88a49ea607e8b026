#pragma once

#include <string>
#include <vector>

namespace qwline {

struct Sample {
    int t = 0;
    double value = 0.0;
};

// Time-ordered samples of one scalar observable. Times must be appended in
// strictly increasing order and values must be finite.
class TimeSeries {
  public:
    TimeSeries() = default;
    explicit TimeSeries(std::string label) : label_(std::move(label)) {}

    void append(int t, double value);

    const std::vector<Sample>& samples() const { return samples_; }
    const std::string& label() const { return label_; }
    bool empty() const { return samples_.empty(); }

  private:
    std::string label_;
    std::vector<Sample> samples_;
};

}  // namespace qwline
