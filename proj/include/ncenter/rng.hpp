#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace ncenter {

// Deterministic random numbers.  mt19937_64 output is specified by the
// standard, and we derive doubles from the raw bits ourselves, so the same
// seed gives the same sequence on every platform.
class DetRng {
  public:
    explicit DetRng(std::uint64_t seed) : eng_(seed) {}

    // uniform in [0, 1)
    double uniform() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    // uniform in [-scale, scale)
    double symmetric(double scale = 1.0) {
        return (2.0 * uniform() - 1.0) * scale;
    }

    std::complex<double> complex_box(double scale = 1.0) {
        double re = symmetric(scale);
        double im = symmetric(scale);
        return {re, im};
    }

    std::uint64_t bits() { return eng_(); }

  private:
    std::mt19937_64 eng_;
};

}  // namespace ncenter
