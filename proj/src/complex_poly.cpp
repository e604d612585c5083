#include "sliceq/complex_poly.hpp"

#include <cmath>

namespace sliceq {

Complex eval(std::span<const Complex> p, Complex z) noexcept {
  Complex acc = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = *it + z * acc;
  return acc;
}

double eval_scale(std::span<const Complex> p, double abs_z) noexcept {
  double acc = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = std::abs(*it) + abs_z * acc;
  return acc;
}

bool is_zero_poly(std::span<const Complex> p) noexcept {
  for (const Complex& c : p) {
    if (c != 0.0) return false;
  }
  return true;
}

ComplexPoly synthetic_divide(std::span<const Complex> p, Complex c, Complex& remainder) {
  if (p.empty()) {
    remainder = 0.0;
    return {};
  }
  const std::size_t n = p.size() - 1;
  ComplexPoly b(n);
  if (n == 0) {
    remainder = p[0];
    return b;
  }
  b[n - 1] = p[n];
  for (std::size_t k = n - 1; k >= 1; --k) b[k - 1] = p[k] + c * b[k];
  remainder = p[0] + c * b[0];
  return b;
}

int valuation(std::span<const Complex> p, Complex c, double tolerance) {
  if (is_zero_poly(p)) return -1;
  ComplexPoly cur(p.begin(), p.end());
  const double abs_c = std::abs(c);
  int count = 0;
  while (cur.size() >= 2) {
    Complex rem;
    ComplexPoly next = synthetic_divide(cur, c, rem);
    if (std::abs(rem) > tolerance * eval_scale(cur, abs_c)) break;
    cur = std::move(next);
    ++count;
  }
  return count;
}

ComplexPoly taylor_shift(std::span<const Complex> p, Complex c) {
  ComplexPoly out;
  out.reserve(p.size());
  ComplexPoly cur(p.begin(), p.end());
  while (!cur.empty()) {
    Complex rem;
    cur = synthetic_divide(cur, c, rem);
    out.push_back(rem);
  }
  return out;
}

ComplexPoly to_complex_poly(const RealPolynomial& d) {
  return ComplexPoly(d.coeffs().begin(), d.coeffs().end());
}

std::pair<ComplexPoly, ComplexPoly> split_polynomial(const QPolynomial& f, const SplitBasis& basis) {
  ComplexPoly F, G;
  F.reserve(f.coeffs().size());
  G.reserve(f.coeffs().size());
  for (const Quaternion& a : f.coeffs()) {
    const auto [alpha, beta] = basis.split(a);
    F.push_back(alpha);
    G.push_back(beta);
  }
  return {std::move(F), std::move(G)};
}

}  // namespace sliceq
