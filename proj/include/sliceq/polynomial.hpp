#pragma once

// The *-algebra of quaternionic polynomials sum_n q^n a_n (powers of the
// variable on the left, coefficients on the right) and its real-coefficient
// subring.

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

#include "sliceq/quaternion.hpp"

namespace sliceq {

/// Real-coefficient polynomial c_0 + c_1 t + ... ; canonical form has a
/// nonzero leading coefficient (empty means zero).
class RealPolynomial {
 public:
  RealPolynomial() = default;
  explicit RealPolynomial(std::vector<double> coeffs);
  RealPolynomial(std::initializer_list<double> coeffs) : RealPolynomial(std::vector<double>(coeffs)) {}

  static RealPolynomial constant(double c) { return RealPolynomial({c}); }
  /// t - r
  static RealPolynomial linear(double root) { return RealPolynomial({-root, 1.0}); }
  /// (t - x)^2 + y^2, the real factor vanishing on the sphere x + yS.
  static RealPolynomial sphere_factor(const Sphere& s) { return RealPolynomial({s.x * s.x + s.y * s.y, -2.0 * s.x, 1.0}); }

  const std::vector<double>& coeffs() const noexcept { return c_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  double coeff(int n) const noexcept { return n >= 0 && n < static_cast<int>(c_.size()) ? c_[n] : 0.0; }
  double leading() const noexcept { return c_.empty() ? 0.0 : c_.back(); }
  /// Euclidean norm of the coefficient vector.
  double norm() const noexcept;

  RealPolynomial monic() const;

  friend RealPolynomial operator+(const RealPolynomial& a, const RealPolynomial& b);
  friend RealPolynomial operator-(const RealPolynomial& a, const RealPolynomial& b);
  friend RealPolynomial operator*(const RealPolynomial& a, const RealPolynomial& b);
  friend RealPolynomial operator*(double s, const RealPolynomial& a);
  friend bool operator==(const RealPolynomial&, const RealPolynomial&) = default;

 private:
  std::vector<double> c_;
};

RealPolynomial pow(const RealPolynomial& a, int n);
double eval(const RealPolynomial& d, double t) noexcept;
std::complex<double> eval(const RealPolynomial& d, std::complex<double> z) noexcept;
/// sum c_n q^n; the value lies in q's slice.
Quaternion eval(const RealPolynomial& d, const Quaternion& q) noexcept;
/// sum |c_n| |q|^n, the natural size of d(q).
double eval_scale(const RealPolynomial& d, double abs_q) noexcept;

struct RealDivision {
  RealPolynomial quotient;
  std::vector<double> remainder;  // not trimmed
};
/// Long division num = quotient * den + remainder, deg remainder < deg den.
RealDivision divmod(std::span<const double> num, const RealPolynomial& den);

/// Finite polynomial sum_n q^n a_n with quaternion coefficients.
class QPolynomial {
 public:
  QPolynomial() = default;
  /// Trims leading coefficients with norm <= tol::kTrim * (1 + max norm).
  explicit QPolynomial(std::vector<Quaternion> coeffs);
  QPolynomial(std::initializer_list<Quaternion> coeffs) : QPolynomial(std::vector<Quaternion>(coeffs)) {}
  explicit QPolynomial(const RealPolynomial& real);

  static QPolynomial constant(const Quaternion& c) { return QPolynomial({c}); }
  static QPolynomial variable() { return QPolynomial({Quaternion(0.0), kOne}); }
  /// q - p
  static QPolynomial linear(const Quaternion& root) { return QPolynomial({-root, kOne}); }

  const std::vector<Quaternion>& coeffs() const noexcept { return a_; }
  int degree() const noexcept { return static_cast<int>(a_.size()) - 1; }
  bool is_zero() const noexcept { return a_.empty(); }
  Quaternion coeff(int n) const noexcept { return n >= 0 && n < static_cast<int>(a_.size()) ? a_[n] : Quaternion{}; }
  /// Euclidean norm of the coefficient vector (in R^{4(n+1)}).
  double norm() const noexcept;
  /// Largest |Im a_n| relative to nothing; callers scale as needed.
  double max_imag() const noexcept;
  /// Real parts of the coefficients as a canonical RealPolynomial.
  RealPolynomial real_part() const;
  /// Component polynomial n (0: real part, 1: i, 2: j, 3: k); not trimmed.
  std::vector<double> component(int n) const;

  friend QPolynomial operator+(const QPolynomial& a, const QPolynomial& b);
  friend QPolynomial operator-(const QPolynomial& a, const QPolynomial& b);
  friend QPolynomial operator-(const QPolynomial& a);
  friend QPolynomial operator*(double s, const QPolynomial& a);
  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

 private:
  std::vector<Quaternion> a_;
};

/// Coefficient convolution (f*g)_n = sum_k a_k b_{n-k}.
QPolynomial star_mul(const QPolynomial& f, const QPolynomial& g);
/// Real-coefficient factors are slice preserving and commute with everything.
QPolynomial star_mul(const RealPolynomial& d, const QPolynomial& f);
QPolynomial star_pow(const QPolynomial& f, int n);
/// f^c = sum q^n conj(a_n)
QPolynomial regular_conj(const QPolynomial& f);
/// f^s = f * f^c. Throws SymmetrizationNotReal if an imaginary residue above
/// tol::kSymmetrization * (1 + ||f||^2) appears.
RealPolynomial symmetrize(const QPolynomial& f);

/// Nested evaluation a_0 + q (a_1 + q (a_2 + ...)).
Quaternion eval(const QPolynomial& f, const Quaternion& q) noexcept;
std::vector<Quaternion> eval_batch(const QPolynomial& f, std::span<const Quaternion> points);
/// sum |a_n| |q|^n
double eval_scale(const QPolynomial& f, double abs_q) noexcept;

struct LinearDivision {
  QPolynomial quotient;
  Quaternion remainder;
};
/// f = (q - p) * quotient + remainder. Requires deg f >= 1.
LinearDivision left_divide_linear(const QPolynomial& f, const Quaternion& p);

/// Exact division by a real polynomial, performed on the four component
/// polynomials. Throws NotDivisible when a remainder exceeds
/// tol::kDivide * (1 + ||f||).
QPolynomial divide_real(const QPolynomial& f, const RealPolynomial& d);
/// divide_real without throwing; empty optional-style flag via `ok`.
bool try_divide_real(const QPolynomial& f, const RealPolynomial& d, QPolynomial& quotient, double* max_remainder = nullptr);

}  // namespace sliceq
