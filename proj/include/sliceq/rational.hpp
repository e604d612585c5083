#pragma once

// Quotients N/D of a quaternionic numerator by a monic real denominator: the
// ring of *-quotients of polynomials, their values, and their poles.

#include <optional>
#include <vector>

#include "sliceq/polynomial.hpp"
#include "sliceq/zeros.hpp"

namespace sliceq {

class QRational {
 public:
  /// The constant 0.
  QRational() : den_(RealPolynomial::constant(1.0)) {}
  explicit QRational(const QPolynomial& polynomial) : num_(polynomial), den_(RealPolynomial::constant(1.0)) {}

  /// Cancels every real irreducible factor of D that divides all four
  /// components of N, then makes D monic. Throws ZeroDenominator if D = 0.
  static QRational normalize(QPolynomial numerator, RealPolynomial denominator);

  const QPolynomial& numerator() const noexcept { return num_; }
  const RealPolynomial& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.degree() == 0; }

 private:
  QRational(QPolynomial n, RealPolynomial d) : num_(std::move(n)), den_(std::move(d)) {}
  QPolynomial num_;
  RealPolynomial den_;
};

/// f^{-*} * g = (f^c * g) / f^s
QRational from_quotient(const QPolynomial& f, const QPolynomial& g);

QRational add(const QRational& a, const QRational& b);
QRational subtract(const QRational& a, const QRational& b);
QRational negate(const QRational& a);
QRational star_mul(const QRational& a, const QRational& b);
/// (D N^c) / N^s; throws ZeroDenominator for 0.
QRational reciprocal(const QRational& a);
/// Integer *-power; negative exponents go through the reciprocal.
QRational star_pow(const QRational& a, int n);

/// D(q)^{-1} N(q). Throws PoleEvaluation when |D(q)| <= 1e-12 scale.
Quaternion eval(const QRational& a, const Quaternion& q);

/// T_f(q) = f^c(q)^{-1} q f^c(q). Throws PoleEvaluation when f^c(q) ~ 0.
Quaternion transport(const QPolynomial& f, const Quaternion& q);

struct ExceptionalPole {
  Quaternion point;
  int order = 0;
};

struct IsolatedPole {
  Quaternion point;
  int multiplicity = 0;
};

struct PoleSphere {
  Sphere sphere;
  int denominator_multiplicity = 0;
  int generic_order = 0;
  std::optional<ExceptionalPole> exceptional;
  int spherical_order = 0;
  std::optional<IsolatedPole> isolated;
  /// Orders at x + iy and x - iy.
  int order_at_p = 0;
  int order_at_pbar = 0;
};

struct SingularityReport {
  std::vector<PoleSphere> spheres;
};

SingularityReport analyze_poles(const QRational& a);

enum class PointKind { Regular, Pole, Order0NonRemovable };

struct PointStatus {
  PointKind kind = PointKind::Regular;
  int order = 0;
};

/// Classification of a single point against the report of `a`.
PointStatus point_status(const QRational& a, const SingularityReport& report, const Quaternion& q);

/// For a pole sphere with orders m <= n at p (the exceptional point, or any
/// point of the sphere when there is none), the rational g regular on the
/// sphere with a = [(q-x)^2+y^2]^{-n} (q-p)^{*(n-m)} * g.
struct PoleFactorization {
  Sphere sphere;
  Quaternion point;
  int m = 0;
  int n = 0;
  QRational residual;
};
PoleFactorization pole_factorization(const QRational& a, const PoleSphere& pole);
/// [(q-x)^2+y^2]^{-n} (q-p)^{*(n-m)} * g
QRational reconstruct(const PoleFactorization& factorization);

/// Largest |a(q)| over `samples` points of the pole sphere through p at
/// distance `distance` from p, each pushed off the sphere radially by a
/// relative amount small enough to expose blow-up.
double unboundedness_witness(const QRational& a, const Quaternion& p, double distance = 1e-3, int samples = 100);

}  // namespace sliceq
