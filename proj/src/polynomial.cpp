#include "sliceq/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sliceq/kernels.hpp"

namespace sliceq {

namespace {

template <typename T, typename Norm>
void trim_leading(std::vector<T>& c, Norm&& size_of) {
  double max_norm = 0.0;
  for (const T& v : c) max_norm = std::max(max_norm, size_of(v));
  const double cutoff = tol::kTrim * (1.0 + max_norm);
  while (!c.empty() && size_of(c.back()) <= cutoff) c.pop_back();
}

}  // namespace

// ---------------------------------------------------------------- RealPolynomial

RealPolynomial::RealPolynomial(std::vector<double> coeffs) : c_(std::move(coeffs)) {
  trim_leading(c_, [](double v) { return std::abs(v); });
}

double RealPolynomial::norm() const noexcept {
  double s = 0.0;
  for (double v : c_) s += v * v;
  return std::sqrt(s);
}

RealPolynomial RealPolynomial::monic() const {
  if (c_.empty()) throw ZeroDenominator("monic of the zero polynomial");
  return (1.0 / c_.back()) * *this;
}

RealPolynomial operator+(const RealPolynomial& a, const RealPolynomial& b) {
  std::vector<double> c(std::max(a.c_.size(), b.c_.size()), 0.0);
  for (std::size_t n = 0; n < a.c_.size(); ++n) c[n] += a.c_[n];
  for (std::size_t n = 0; n < b.c_.size(); ++n) c[n] += b.c_[n];
  return RealPolynomial(std::move(c));
}

RealPolynomial operator-(const RealPolynomial& a, const RealPolynomial& b) { return a + (-1.0) * b; }

RealPolynomial operator*(const RealPolynomial& a, const RealPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<double> c(a.c_.size() + b.c_.size() - 1, 0.0);
  for (std::size_t n = 0; n < a.c_.size(); ++n) {
    for (std::size_t m = 0; m < b.c_.size(); ++m) c[n + m] += a.c_[n] * b.c_[m];
  }
  return RealPolynomial(std::move(c));
}

RealPolynomial operator*(double s, const RealPolynomial& a) {
  std::vector<double> c = a.c_;
  for (double& v : c) v *= s;
  return RealPolynomial(std::move(c));
}

RealPolynomial pow(const RealPolynomial& a, int n) {
  if (n < 0) throw InvalidArgument("negative power of a real polynomial");
  RealPolynomial out{1.0};
  for (int k = 0; k < n; ++k) out = out * a;
  return out;
}

double eval(const RealPolynomial& d, double t) noexcept {
  double acc = 0.0;
  for (auto it = d.coeffs().rbegin(); it != d.coeffs().rend(); ++it) acc = *it + t * acc;
  return acc;
}

std::complex<double> eval(const RealPolynomial& d, std::complex<double> z) noexcept {
  std::complex<double> acc = 0.0;
  for (auto it = d.coeffs().rbegin(); it != d.coeffs().rend(); ++it) acc = *it + z * acc;
  return acc;
}

Quaternion eval(const RealPolynomial& d, const Quaternion& q) noexcept {
  Quaternion acc;
  for (auto it = d.coeffs().rbegin(); it != d.coeffs().rend(); ++it) acc = Quaternion(*it) + mul(q, acc);
  return acc;
}

double eval_scale(const RealPolynomial& d, double abs_q) noexcept {
  double acc = 0.0;
  for (auto it = d.coeffs().rbegin(); it != d.coeffs().rend(); ++it) acc = std::abs(*it) + abs_q * acc;
  return acc;
}

RealDivision divmod(std::span<const double> num, const RealPolynomial& den) {
  if (den.is_zero()) throw ZeroDenominator("division by the zero polynomial");
  std::vector<double> r(num.begin(), num.end());
  const int dn = den.degree();
  const int nn = static_cast<int>(r.size()) - 1;
  if (nn < dn) return {RealPolynomial{}, std::move(r)};
  std::vector<double> q(static_cast<std::size_t>(nn - dn + 1), 0.0);
  const double lead = den.leading();
  for (int i = nn - dn; i >= 0; --i) {
    const double c = r[i + dn] / lead;
    q[i] = c;
    for (int j = 0; j <= dn; ++j) r[i + j] -= c * den.coeffs()[j];
    r[i + dn] = 0.0;
  }
  r.resize(static_cast<std::size_t>(dn));
  return {RealPolynomial(std::move(q)), std::move(r)};
}

// ---------------------------------------------------------------- QPolynomial

QPolynomial::QPolynomial(std::vector<Quaternion> coeffs) : a_(std::move(coeffs)) {
  for (const Quaternion& c : a_) {
    if (!is_finite(c)) throw NonFinite("polynomial coefficient is not finite");
  }
  trim_leading(a_, [](const Quaternion& v) { return sliceq::norm(v); });
}

QPolynomial::QPolynomial(const RealPolynomial& real) {
  a_.reserve(real.coeffs().size());
  for (double c : real.coeffs()) a_.emplace_back(c);
}

double QPolynomial::norm() const noexcept {
  double s = 0.0;
  for (const Quaternion& c : a_) s += normsq(c);
  return std::sqrt(s);
}

double QPolynomial::max_imag() const noexcept {
  double m = 0.0;
  for (const Quaternion& c : a_) m = std::max(m, imag_norm(c));
  return m;
}

RealPolynomial QPolynomial::real_part() const {
  std::vector<double> c;
  c.reserve(a_.size());
  for (const Quaternion& v : a_) c.push_back(v.x0);
  return RealPolynomial(std::move(c));
}

std::vector<double> QPolynomial::component(int n) const {
  std::vector<double> c;
  c.reserve(a_.size());
  for (const Quaternion& v : a_) c.push_back(n == 0 ? v.x0 : n == 1 ? v.x1 : n == 2 ? v.x2 : v.x3);
  return c;
}

QPolynomial operator+(const QPolynomial& a, const QPolynomial& b) {
  std::vector<Quaternion> c(std::max(a.a_.size(), b.a_.size()));
  for (std::size_t n = 0; n < a.a_.size(); ++n) c[n] += a.a_[n];
  for (std::size_t n = 0; n < b.a_.size(); ++n) c[n] += b.a_[n];
  return QPolynomial(std::move(c));
}

QPolynomial operator-(const QPolynomial& a) {
  std::vector<Quaternion> c = a.a_;
  for (Quaternion& v : c) v = -v;
  return QPolynomial(std::move(c));
}

QPolynomial operator-(const QPolynomial& a, const QPolynomial& b) { return a + (-b); }

QPolynomial operator*(double s, const QPolynomial& a) {
  std::vector<Quaternion> c = a.a_;
  for (Quaternion& v : c) v *= s;
  return QPolynomial(std::move(c));
}

QPolynomial star_mul(const QPolynomial& f, const QPolynomial& g) {
  if (f.is_zero() || g.is_zero()) return {};
  std::vector<Quaternion> out(f.coeffs().size() + g.coeffs().size() - 1);
  kernels::star_convolve(f.coeffs(), g.coeffs(), out);
  return QPolynomial(std::move(out));
}

QPolynomial star_mul(const RealPolynomial& d, const QPolynomial& f) { return star_mul(QPolynomial(d), f); }

QPolynomial star_pow(const QPolynomial& f, int n) {
  if (n < 0) throw InvalidArgument("negative *-power of a polynomial");
  QPolynomial out = QPolynomial::constant(kOne);
  QPolynomial base = f;
  while (n > 0) {
    if (n & 1) out = star_mul(out, base);
    n >>= 1;
    if (n > 0) base = star_mul(base, base);
  }
  return out;
}

QPolynomial regular_conj(const QPolynomial& f) {
  std::vector<Quaternion> c = f.coeffs();
  for (Quaternion& v : c) v = conj(v);
  return QPolynomial(std::move(c));
}

RealPolynomial symmetrize(const QPolynomial& f) {
  const QPolynomial s = star_mul(f, regular_conj(f));
  const double fn = f.norm();
  const double residue = s.max_imag();
  if (residue > tol::kSymmetrization * (1.0 + fn * fn)) {
    throw SymmetrizationNotReal("imaginary residue " + std::to_string(residue) + " in f*f^c");
  }
  return s.real_part();
}

Quaternion eval(const QPolynomial& f, const Quaternion& q) noexcept {
  Quaternion acc;
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) acc = *it + mul(q, acc);
  return acc;
}

std::vector<Quaternion> eval_batch(const QPolynomial& f, std::span<const Quaternion> points) {
  std::vector<Quaternion> out(points.size());
  kernels::horner_batch(f.coeffs(), points, out);
  return out;
}

double eval_scale(const QPolynomial& f, double abs_q) noexcept {
  double acc = 0.0;
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) acc = norm(*it) + abs_q * acc;
  return acc;
}

LinearDivision left_divide_linear(const QPolynomial& f, const Quaternion& p) {
  const int n = f.degree();
  if (n < 1) throw InvalidArgument("left_divide_linear needs degree >= 1");
  const auto& a = f.coeffs();
  std::vector<Quaternion> b(static_cast<std::size_t>(n));
  b[n - 1] = a[n];
  for (int k = n - 1; k >= 1; --k) b[k - 1] = a[k] + mul(p, b[k]);
  const Quaternion remainder = a[0] + mul(p, b[0]);
  return {QPolynomial(std::move(b)), remainder};
}

bool try_divide_real(const QPolynomial& f, const RealPolynomial& d, QPolynomial& quotient, double* max_remainder) {
  if (d.is_zero()) throw ZeroDenominator("division by the zero polynomial");
  std::vector<Quaternion> q(f.degree() >= d.degree() ? static_cast<std::size_t>(f.degree() - d.degree() + 1) : 0);
  double worst = 0.0;
  for (int comp = 0; comp < 4; ++comp) {
    const std::vector<double> num = f.component(comp);
    RealDivision div = divmod(num, d);
    double r2 = 0.0;
    for (double r : div.remainder) r2 += r * r;
    worst = std::max(worst, std::sqrt(r2));
    const auto& qc = div.quotient.coeffs();
    for (std::size_t n = 0; n < qc.size() && n < q.size(); ++n) {
      double* slot = comp == 0 ? &q[n].x0 : comp == 1 ? &q[n].x1 : comp == 2 ? &q[n].x2 : &q[n].x3;
      *slot = qc[n];
    }
  }
  if (max_remainder) *max_remainder = worst;
  if (worst > tol::kDivide * (1.0 + f.norm())) return false;
  quotient = QPolynomial(std::move(q));
  return true;
}

QPolynomial divide_real(const QPolynomial& f, const RealPolynomial& d) {
  QPolynomial quotient;
  double worst = 0.0;
  if (!try_divide_real(f, d, quotient, &worst)) {
    throw NotDivisible("remainder norm " + std::to_string(worst) + " exceeds tolerance", worst);
  }
  return quotient;
}

}  // namespace sliceq
