#pragma once

// Reference computations for the tests. They avoid the library's own
// algorithms: products go through the 4x4 left-multiplication matrix,
// polynomial values through explicit powers, star powers of (q - p) through
// the binomial expansion.

#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "sliceq/quaternion.hpp"

namespace oracle {

using sliceq::Quaternion;

// Left multiplication by a as a real 4x4 matrix acting on (x0, x1, x2, x3).
inline Quaternion hamilton(const Quaternion& a, const Quaternion& b) {
  const std::array<std::array<double, 4>, 4> L = {{
      {a.x0, -a.x1, -a.x2, -a.x3},
      {a.x1, a.x0, -a.x3, a.x2},
      {a.x2, a.x3, a.x0, -a.x1},
      {a.x3, -a.x2, a.x1, a.x0},
  }};
  const std::array<double, 4> v = {b.x0, b.x1, b.x2, b.x3};
  std::array<double, 4> r{};
  for (int row = 0; row < 4; ++row)
    for (int col = 0; col < 4; ++col) r[row] += L[row][col] * v[col];
  return {r[0], r[1], r[2], r[3]};
}

inline double abs(const Quaternion& q) { return std::sqrt(q.x0 * q.x0 + q.x1 * q.x1 + q.x2 * q.x2 + q.x3 * q.x3); }

inline Quaternion power(const Quaternion& q, int n) {
  Quaternion r(1.0);
  for (int k = 0; k < n; ++k) r = hamilton(r, q);
  return r;
}

// sum_n q^n a_n with q^n formed by repeated products.
inline Quaternion poly_value(const std::vector<Quaternion>& a, const Quaternion& q) {
  Quaternion s;
  for (std::size_t n = 0; n < a.size(); ++n) s = s + hamilton(power(q, static_cast<int>(n)), a[n]);
  return s;
}

inline std::vector<Quaternion> convolve(const std::vector<Quaternion>& f, const std::vector<Quaternion>& g) {
  if (f.empty() || g.empty()) return {};
  std::vector<Quaternion> out(f.size() + g.size() - 1);
  for (std::size_t a = 0; a < f.size(); ++a)
    for (std::size_t b = 0; b < g.size(); ++b) out[a + b] = out[a + b] + hamilton(f[a], g[b]);
  return out;
}

inline double binomial(int n, int k) {
  double r = 1.0;
  for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

// Coefficients of (q - p)^{*n} = sum_k C(n,k) q^k (-p)^{n-k}.
inline std::vector<Quaternion> linear_power(const Quaternion& p, int n) {
  std::vector<Quaternion> c(static_cast<std::size_t>(n) + 1);
  const Quaternion minus_p = -p;
  for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = power(minus_p, n - k) * binomial(n, k);
  return c;
}

inline Quaternion linear_power_value(const Quaternion& p, int n, const Quaternion& q) {
  return poly_value(linear_power(p, n), q);
}

// (q - p)^{-*m} = [(q-x)^2 + y^2]^{-m} (q - pbar)^{*m} for p = x + yI.
inline Quaternion linear_reciprocal_power_value(const Quaternion& p, int m, const Quaternion& q) {
  const Quaternion pbar = sliceq::conj(p);
  const Quaternion num = linear_power_value(pbar, m, q);
  // (q - p)^s = q^2 - 2 Re(p) q + |p|^2, evaluated at q
  const Quaternion d = hamilton(q, q) - q * (2.0 * p.x0) + Quaternion(p.x0 * p.x0 + p.x1 * p.x1 + p.x2 * p.x2 + p.x3 * p.x3);
  Quaternion den(1.0);
  for (int k = 0; k < m; ++k) den = hamilton(den, d);
  const double n2 = den.x0 * den.x0 + den.x1 * den.x1 + den.x2 * den.x2 + den.x3 * den.x3;
  return hamilton(sliceq::conj(den) / n2, num);
}

// Sigma gauge written out from its two cases.
inline double sigma(const Quaternion& q, const Quaternion& p) {
  const double iq = std::sqrt(q.x1 * q.x1 + q.x2 * q.x2 + q.x3 * q.x3);
  const double ip = std::sqrt(p.x1 * p.x1 + p.x2 * p.x2 + p.x3 * p.x3);
  bool line = iq < 1e-12 || ip < 1e-12;
  if (!line) {
    const double c = (q.x1 * p.x1 + q.x2 * p.x2 + q.x3 * p.x3) / (iq * ip);
    line = std::abs(std::abs(c) - 1.0) < 1e-12;
  }
  if (line) return abs(q - p);
  const double dx = q.x0 - p.x0;
  return std::sqrt(dx * dx + (iq + ip) * (iq + ip));
}

// Roots of x^2 + b x + c by the quadratic formula.
inline std::array<std::complex<double>, 2> quadratic_roots(double b, double c) {
  const std::complex<double> disc = std::sqrt(std::complex<double>(b * b - 4.0 * c, 0.0));
  return {(-b - disc) / 2.0, (-b + disc) / 2.0};
}

}  // namespace oracle
