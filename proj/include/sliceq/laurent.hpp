#pragma once

// Laurent series sum_n (q - p)^{*n} a_n about an arbitrary center p.

#include <functional>
#include <string>
#include <vector>

#include "sliceq/rational.hpp"
#include "sliceq/slice.hpp"

namespace sliceq {

struct LaurentExpansion {
  Quaternion center;
  UnitImaginary unit = UnitImaginary::i();     // p lies in R + unit R
  UnitImaginary partner = UnitImaginary::j();  // split partner of unit
  int n_min = 0;
  int n_max = 0;
  std::vector<Quaternion> coeffs;  // a_{n_min} ... a_{n_max}
  bool exact_negative_tail = true;
  /// Distance to the nearest other pole on the slice; infinity if none or unknown.
  double known_outer_radius = kInfinity;

  Quaternion coeff(int n) const noexcept {
    return n >= n_min && n <= n_max ? coeffs[static_cast<std::size_t>(n - n_min)] : Quaternion{};
  }
};

/// Builds an expansion from explicit coefficients a_{n_min}, ..., a_{n_min + size - 1}.
LaurentExpansion make_series(const Quaternion& center, int n_min, std::vector<Quaternion> coeffs,
                             bool exact_negative_tail);

/// Expansion of a rational at p up to a_{n_max}; the principal part is
/// exact (n_min = -ord at p).
LaurentExpansion expand_rational(const QRational& a, const Quaternion& p, int n_max);

/// Value of (q - p)^{*n} at q, negative n meaning the regular reciprocal
/// power. Throws PoleEvaluation for n < 0 and q on p's sphere (or q = p).
Quaternion star_power_value(const Quaternion& p, int n, const Quaternion& q);

struct TruncatedValue {
  Quaternion value;
  bool in_region = true;  // q in Sigma(p, R1, R2) with the radii() estimates
};
TruncatedValue eval_truncated(const LaurentExpansion& e, const Quaternion& q);

struct Radii {
  double inner = 0.0;
  double outer = kInfinity;
  bool inner_estimated = false;
  bool outer_estimated = true;
};
/// Root-test radii from the tails of the coefficient list.
Radii radii(const LaurentExpansion& e);

using SliceFunction = std::function<Quaternion(const Quaternion&)>;

struct ContourResult {
  int n_lo = 0;
  std::vector<Quaternion> coeffs;  // a_{n_lo} ...
  int nodes = 0;
};

/// Trapezoid rule on the circle p + R e^{I theta} with `nodes` points.
ContourResult contour_coefficients(const SliceFunction& f, const Quaternion& p, const UnitImaginary& unit, double radius,
                                   int n_lo, int n_hi, int nodes = 256);
/// Doubles the node count from `nodes` until successive estimates agree
/// within `agreement` (relative) or `max_nodes` is reached.
ContourResult contour_coefficients_adaptive(const SliceFunction& f, const Quaternion& p, const UnitImaginary& unit,
                                            double radius, int n_lo, int n_hi, int nodes = 256, int max_nodes = 4096,
                                            double agreement = 1e-9);

enum class SingularityKind { Removable, Pole, NoPoleOfOrderLE };

struct Classification {
  SingularityKind kind = SingularityKind::Removable;
  int order = 0;
};
Classification classify(const LaurentExpansion& e);
/// "removable", "pole(3)", "no_pole_of_order_le(40)"
std::string to_string(const Classification& c);

}  // namespace sliceq
