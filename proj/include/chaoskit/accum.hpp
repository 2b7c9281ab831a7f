#pragma once

#include <cmath>

namespace chaoskit {

// Neumaier compensated accumulator. Long coefficient sums must not lose
// the O(N^-s) signal to rounding, so every reduction over spectra or
// chaos levels goes through this.
class Accumulator {
public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

} // namespace chaoskit
