#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace dpz {

// Deterministic random helpers on top of mt19937. The standard fixes the
// mt19937 bit stream, but not the distributions, so all draws below are
// built from raw engine words to keep outputs identical across toolchains.
class Rng {
public:
  explicit Rng(std::uint32_t seed) : eng_(seed) {}

  std::uint32_t next_u32() { return eng_(); }

  // uniform in [0, 1)
  double next_double() {
    const std::uint64_t hi = eng_();
    const std::uint64_t lo = eng_();
    const std::uint64_t u53 = ((hi << 32) | lo) >> 11;
    return static_cast<double>(u53) * 0x1.0p-53;
  }

  // uniform integer in [0, n)
  std::uint32_t next_below(std::uint32_t n) {
    return n == 0 ? 0 : eng_() % n;
  }

  // standard normal via Box-Muller
  double next_gauss() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = next_double();
    double u2 = next_double();
    while (u1 <= 0.0) u1 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

private:
  std::mt19937 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace dpz
