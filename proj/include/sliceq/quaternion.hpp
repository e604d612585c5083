#pragma once

#include <cmath>
#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>

#include "sliceq/errors.hpp"
#include "sliceq/tolerances.hpp"

namespace sliceq {

/// Element x0 + x1 i + x2 j + x3 k of the real algebra H.
struct Quaternion {
  double x0 = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double real) : x0(real) {}  // NOLINT: reals embed in H
  constexpr Quaternion(double a, double b, double c, double d)
      : x0(a), x1(b), x2(c), x3(d) {}

  constexpr double real() const noexcept { return x0; }
  constexpr Quaternion imag() const noexcept { return {0.0, x1, x2, x3}; }

  constexpr Quaternion& operator+=(const Quaternion& o) noexcept {
    x0 += o.x0; x1 += o.x1; x2 += o.x2; x3 += o.x3;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) noexcept {
    x0 -= o.x0; x1 -= o.x1; x2 -= o.x2; x3 -= o.x3;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) noexcept {
    x0 *= s; x1 *= s; x2 *= s; x3 *= s;
    return *this;
  }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

inline constexpr Quaternion kOne{1.0, 0.0, 0.0, 0.0};
inline constexpr Quaternion kI{0.0, 1.0, 0.0, 0.0};
inline constexpr Quaternion kJ{0.0, 0.0, 1.0, 0.0};
inline constexpr Quaternion kK{0.0, 0.0, 0.0, 1.0};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) noexcept { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) noexcept { return a -= b; }
constexpr Quaternion operator-(const Quaternion& a) noexcept { return {-a.x0, -a.x1, -a.x2, -a.x3}; }
constexpr Quaternion operator*(Quaternion a, double s) noexcept { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) noexcept { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) noexcept { return a *= (1.0 / s); }

// Hamilton product: ij = k, jk = i, ki = j.
constexpr Quaternion mul(const Quaternion& a, const Quaternion& b) noexcept {
  return {a.x0 * b.x0 - a.x1 * b.x1 - a.x2 * b.x2 - a.x3 * b.x3,
          a.x0 * b.x1 + a.x1 * b.x0 + a.x2 * b.x3 - a.x3 * b.x2,
          a.x0 * b.x2 - a.x1 * b.x3 + a.x2 * b.x0 + a.x3 * b.x1,
          a.x0 * b.x3 + a.x1 * b.x2 - a.x2 * b.x1 + a.x3 * b.x0};
}
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) noexcept { return mul(a, b); }

constexpr Quaternion conj(const Quaternion& q) noexcept { return {q.x0, -q.x1, -q.x2, -q.x3}; }
constexpr double normsq(const Quaternion& q) noexcept {
  return q.x0 * q.x0 + q.x1 * q.x1 + q.x2 * q.x2 + q.x3 * q.x3;
}
inline double norm(const Quaternion& q) noexcept { return std::hypot(std::hypot(q.x0, q.x1), std::hypot(q.x2, q.x3)); }
inline double imag_norm(const Quaternion& q) noexcept { return std::hypot(q.x1, std::hypot(q.x2, q.x3)); }
// Euclidean inner product on R^4.
constexpr double dot(const Quaternion& a, const Quaternion& b) noexcept {
  return a.x0 * b.x0 + a.x1 * b.x1 + a.x2 * b.x2 + a.x3 * b.x3;
}
inline bool is_finite(const Quaternion& q) noexcept {
  return std::isfinite(q.x0) && std::isfinite(q.x1) && std::isfinite(q.x2) && std::isfinite(q.x3);
}

/// conj(q) / normsq(q). Throws DivisionByZero for q = 0.
Quaternion inverse(const Quaternion& q);

/// True when |Im q| <= tolerance.
inline bool is_real(const Quaternion& q, double tolerance = tol::kUnit) noexcept {
  return imag_norm(q) <= tolerance;
}

/// Element of the 2-sphere S = {q : q^2 = -1} of imaginary units.
class UnitImaginary {
 public:
  /// Validates real part 0 and norm 1 within tol::kUnit.
  static UnitImaginary make(const Quaternion& q, double tolerance = tol::kUnit);
  /// Normalizes the imaginary part of a (non-real) direction.
  static UnitImaginary from_direction(const Quaternion& direction);

  static constexpr UnitImaginary i() noexcept { return UnitImaginary(kI); }
  static constexpr UnitImaginary j() noexcept { return UnitImaginary(kJ); }
  static constexpr UnitImaginary k() noexcept { return UnitImaginary(kK); }

  constexpr const Quaternion& value() const noexcept { return q_; }
  constexpr operator const Quaternion&() const noexcept { return q_; }  // NOLINT
  constexpr UnitImaginary operator-() const noexcept { return UnitImaginary(-q_); }

 private:
  constexpr explicit UnitImaginary(const Quaternion& q) : q_(q) {}
  Quaternion q_;
};

/// The 2-sphere x + yS; y = 0 is the degenerate sphere {x}.
struct Sphere {
  double x = 0.0;
  double y = 0.0;
  friend constexpr bool operator==(const Sphere&, const Sphere&) = default;
};

/// Im(q)/|Im(q)|. Throws RealPointAmbiguous when |Im q| <= tol::kUnit.
UnitImaginary slice_unit(const Quaternion& q);
/// slice_unit(q), or `fallback` for real q.
UnitImaginary slice_unit_or(const Quaternion& q, const UnitImaginary& fallback);

inline Sphere sphere_of(const Quaternion& q) noexcept { return {q.x0, imag_norm(q)}; }
bool on_sphere(const Quaternion& q, const Sphere& s, double tolerance = tol::kGeom) noexcept;
/// The point x + I y of the sphere.
inline Quaternion point_on(const Sphere& s, const Quaternion& unit) noexcept {
  return Quaternion(s.x) + unit * s.y;
}

/// Slice embedding C -> R + I R.
inline Quaternion from_complex(std::complex<double> z, const UnitImaginary& unit) noexcept {
  return Quaternion(z.real()) + unit.value() * z.imag();
}
/// Orthogonal projection of q onto R + I R, read as a complex number.
inline std::complex<double> to_complex(const Quaternion& q, const UnitImaginary& unit) noexcept {
  return {q.x0, dot(q, unit.value())};
}

/// Parses the text form `a±bi±cj±dk` (terms in any order, zero terms
/// omitted, bare units such as `-j` allowed, repeated units add).
Quaternion parse_quaternion(std::string_view text);

/// Text form. `significant_digits == 0` prints the shortest round-trip
/// representation of every component; otherwise components are rounded to
/// that many significant digits and components below `drop_below * |q|`
/// are omitted.
std::string to_string(const Quaternion& q, int significant_digits = 0, double drop_below = 0.0);

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

}  // namespace sliceq
