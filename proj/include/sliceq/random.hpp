#pragma once

// xoshiro256** seeded through splitmix64, with the few distributions the
// harnesses need. Everything is spelled out so streams are reproducible
// across standard libraries.

#include <cmath>
#include <cstdint>
#include <numbers>

#include "sliceq/polynomial.hpp"

namespace sliceq {

class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) noexcept {
    std::uint64_t x = seed;
    for (auto& word : s_) word = splitmix64(x);
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }

  result_type operator()() noexcept {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi].
  int uniform_int(int lo, int hi) noexcept {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>((*this)() % span);
  }
  /// Standard normal by Box-Muller (one value per call).
  double normal() noexcept {
    double u = uniform();
    while (u <= 0.0) u = uniform();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * uniform());
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) noexcept { return (x << k) | (x >> (64 - k)); }
  static std::uint64_t splitmix64(std::uint64_t& x) noexcept {
    std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t s_[4];
};

/// Gaussian components with standard deviation `scale`.
inline Quaternion random_quaternion(Rng& rng, double scale = 1.0) {
  return {scale * rng.normal(), scale * rng.normal(), scale * rng.normal(), scale * rng.normal()};
}

inline UnitImaginary random_unit_imaginary(Rng& rng) {
  for (;;) {
    const Quaternion v(0.0, rng.normal(), rng.normal(), rng.normal());
    if (imag_norm(v) > 1e-6) return UnitImaginary::from_direction(v);
  }
}

/// Uniform in the closed 4-ball of the given radius about the origin.
inline Quaternion random_in_ball(Rng& rng, double radius) {
  for (;;) {
    const Quaternion v = random_quaternion(rng);
    const double n = norm(v);
    if (n > 1e-12) return v * (radius * std::pow(rng.uniform(), 0.25) / n);
  }
}

/// Degree exactly `degree`, Gaussian coefficients.
inline QPolynomial random_polynomial(Rng& rng, int degree, double scale = 1.0) {
  std::vector<Quaternion> c;
  for (int n = 0; n <= degree; ++n) c.push_back(random_quaternion(rng, scale));
  if (norm(c.back()) < 1e-3) c.back() = kOne;
  return QPolynomial(std::move(c));
}

}  // namespace sliceq
