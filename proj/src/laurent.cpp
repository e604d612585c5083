#include "sliceq/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sliceq/complex_poly.hpp"
#include "sliceq/errors.hpp"

namespace sliceq {

namespace {

Complex ipow(Complex w, int n) {
  if (n < 0) return 1.0 / ipow(w, -n);
  Complex result = 1.0;
  while (n > 0) {
    if (n & 1) result *= w;
    n >>= 1;
    if (n > 0) w *= w;
  }
  return result;
}

bool is_real_center(const Quaternion& p) { return imag_norm(p) <= tol::kUnit; }

bool hits_center(Complex w, Complex z0) { return std::abs(w) <= 1e-14 * (1.0 + std::abs(z0)); }

int min_valuation(const ComplexPoly& a, const ComplexPoly& b, Complex z) {
  const int va = valuation(a, z);
  const int vb = valuation(b, z);
  if (va < 0) return vb;
  if (vb < 0) return va;
  return std::min(va, vb);
}

// sum_n from_complex(w^n, unit) a_n over the stored range.
Quaternion slice_sum(const LaurentExpansion& e, Complex w, const UnitImaginary& unit) {
  Quaternion total;
  if (e.n_max >= 0) {
    Complex pw = 1.0;
    for (int n = 0; n <= e.n_max; ++n) {
      if (n >= e.n_min) total += from_complex(pw, unit) * e.coeff(n);
      pw *= w;
    }
  }
  if (e.n_min < 0) {
    const Complex inv = 1.0 / w;
    Complex pw = inv;
    for (int n = -1; n >= e.n_min; --n) {
      if (n <= e.n_max) total += from_complex(pw, unit) * e.coeff(n);
      pw *= inv;
    }
  }
  return total;
}

// Slope of log|a| against the index from the maxima of two half windows.
double envelope_slope(const std::vector<double>& mags) {
  const std::size_t half = mags.size() / 2;
  if (half == 0) return std::nan("");
  auto argmax = [&](std::size_t lo, std::size_t hi) {
    std::size_t best = lo;
    for (std::size_t k = lo; k < hi; ++k)
      if (mags[k] > mags[best]) best = k;
    return best;
  };
  const std::size_t a = argmax(0, half);
  const std::size_t b = argmax(half, mags.size());
  if (mags[a] <= 1e-300 || mags[b] <= 1e-300 || a == b) return std::nan("");
  return (std::log(mags[b]) - std::log(mags[a])) / static_cast<double>(b - a);
}

}  // namespace

LaurentExpansion make_series(const Quaternion& center, int n_min, std::vector<Quaternion> coeffs,
                             bool exact_negative_tail) {
  if (coeffs.empty()) throw InvalidArgument("a series needs at least one coefficient");
  LaurentExpansion e;
  e.center = center;
  e.unit = slice_unit_or(center, UnitImaginary::i());
  e.partner = SplitBasis(e.unit).J();
  e.n_min = n_min;
  e.n_max = n_min + static_cast<int>(coeffs.size()) - 1;
  e.coeffs = std::move(coeffs);
  e.exact_negative_tail = exact_negative_tail;
  return e;
}

LaurentExpansion expand_rational(const QRational& a, const Quaternion& p, int n_max) {
  if (n_max < 0) throw InvalidArgument("n_max must be nonnegative");
  const SplitBasis basis(slice_unit_or(p, UnitImaginary::i()));
  const Complex z0 = to_complex(p, basis.I());
  const auto [n1, n2] = split_polynomial(a.numerator(), basis);
  const ComplexPoly den = to_complex_poly(a.denominator());

  const int v = std::max(0, valuation(den, z0));
  ComplexPoly shifted_den = taylor_shift(den, z0);
  shifted_den.erase(shifted_den.begin(), shifted_den.begin() + v);

  const int terms = v + n_max + 1;
  auto series = [&](const ComplexPoly& num) {
    const ComplexPoly s = taylor_shift(num, z0);
    std::vector<Complex> c(static_cast<std::size_t>(terms));
    for (int j = 0; j < terms; ++j) {
      Complex acc = j < static_cast<int>(s.size()) ? s[j] : Complex(0.0);
      const int lim = std::min<int>(j, static_cast<int>(shifted_den.size()) - 1);
      for (int i = 1; i <= lim; ++i) acc -= shifted_den[i] * c[j - i];
      c[j] = acc / shifted_den[0];
    }
    return c;
  };
  const auto alpha = series(n1);
  const auto beta = series(n2);

  int ord = 0;
  int first_nonzero = -v;
  if (!a.is_zero()) {
    const int val = min_valuation(n1, n2, z0);
    ord = std::max(0, v - val);
    first_nonzero = val - v;
  }

  LaurentExpansion e;
  e.center = p;
  e.unit = basis.I();
  e.partner = basis.J();
  e.n_min = -ord;
  e.n_max = n_max;
  e.exact_negative_tail = true;
  for (int n = e.n_min; n <= n_max; ++n) {
    if (a.is_zero() || n < first_nonzero) {
      e.coeffs.emplace_back();
    } else {
      e.coeffs.push_back(basis.join(alpha[n + v], beta[n + v]));
    }
  }

  if (a.denominator().degree() >= 1 && !a.is_zero()) {
    for (const auto& r : real_poly_roots(a.denominator()).roots) {
      if (std::abs(r.value - z0) <= tol::kCluster * (1.0 + std::abs(z0))) continue;
      const int order = r.multiplicity - min_valuation(n1, n2, r.value);
      if (order > 0) e.known_outer_radius = std::min(e.known_outer_radius, std::abs(r.value - z0));
    }
  }
  return e;
}

Quaternion star_power_value(const Quaternion& p, int n, const Quaternion& q) {
  if (n == 0) return kOne;
  if (is_real_center(p)) {
    const UnitImaginary k = slice_unit_or(q, UnitImaginary::i());
    const Complex w = to_complex(q, k) - p.x0;
    if (n < 0 && hits_center(w, p.x0)) throw PoleEvaluation("negative power at its center");
    return from_complex(ipow(w, n), k);
  }
  const UnitImaginary unit = slice_unit(p);
  const Complex z0 = to_complex(p, unit);
  if (same_line(q, p)) {
    const Complex w = to_complex(q, unit) - z0;
    if (n < 0 && hits_center(w, z0)) throw PoleEvaluation("negative power at its center");
    return from_complex(ipow(w, n), unit);
  }
  const UnitImaginary k = slice_unit(q);
  const Complex z(q.x0, imag_norm(q));
  const Complex w = z - z0;
  const Complex wbar = std::conj(z) - z0;
  if (n < 0 && (hits_center(w, z0) || hits_center(wbar, z0))) {
    throw PoleEvaluation("negative power on the sphere of its center");
  }
  return represent(from_complex(ipow(w, n), unit), from_complex(ipow(wbar, n), unit), unit, k);
}

TruncatedValue eval_truncated(const LaurentExpansion& e, const Quaternion& q) {
  TruncatedValue out;
  const Radii r = radii(e);
  RegionSpec shell{RegionKind::Shell, e.center, r.inner, r.outer};
  out.in_region = r.inner < r.outer && region_contains(shell, q);

  if (is_real_center(e.center)) {
    const UnitImaginary k = slice_unit_or(q, UnitImaginary::i());
    const Complex w = to_complex(q, k) - e.center.x0;
    if (e.n_min < 0 && hits_center(w, e.center.x0)) throw PoleEvaluation("series evaluated at its center");
    out.value = slice_sum(e, w, k);
    return out;
  }
  const Complex z0 = to_complex(e.center, e.unit);
  if (same_line(q, e.center)) {
    const Complex w = to_complex(q, e.unit) - z0;
    if (e.n_min < 0 && hits_center(w, z0)) throw PoleEvaluation("series evaluated at its center");
    out.value = slice_sum(e, w, e.unit);
    return out;
  }
  const UnitImaginary k = slice_unit(q);
  const Complex z(q.x0, imag_norm(q));
  const Complex w = z - z0;
  const Complex wbar = std::conj(z) - z0;
  if (e.n_min < 0 && (hits_center(w, z0) || hits_center(wbar, z0))) {
    throw PoleEvaluation("series evaluated on the sphere of its center");
  }
  out.value = represent(slice_sum(e, w, e.unit), slice_sum(e, wbar, e.unit), e.unit, k);
  return out;
}

Radii radii(const LaurentExpansion& e) {
  Radii r;
  if (e.exact_negative_tail || e.n_min >= 0) {
    r.inner = 0.0;
    r.inner_estimated = false;
  } else {
    const int count = -e.n_min;
    const int window = std::min(count, std::max(8, count / 4));
    std::vector<double> mags;
    for (int m = count - window + 1; m <= count; ++m) mags.push_back(norm(e.coeff(-m)));
    const double slope = envelope_slope(mags);
    r.inner = std::isnan(slope) ? 0.0 : std::exp(slope);
    r.inner_estimated = true;
  }
  if (e.n_max >= 0) {
    const int count = e.n_max + 1;
    const int window = std::min(count, std::max(8, count / 4));
    std::vector<double> mags;
    for (int n = e.n_max - window + 1; n <= e.n_max; ++n) mags.push_back(norm(e.coeff(n)));
    const double slope = envelope_slope(mags);
    r.outer = std::isnan(slope) ? kInfinity : std::exp(-slope);
  }
  return r;
}

ContourResult contour_coefficients(const SliceFunction& f, const Quaternion& p, const UnitImaginary& unit, double radius,
                                   int n_lo, int n_hi, int nodes) {
  if (nodes < 16) throw InvalidArgument("contour quadrature needs at least 16 nodes");
  if (!(radius > 0.0)) throw InvalidArgument("contour radius must be positive");
  if (n_hi < n_lo) throw InvalidArgument("empty coefficient range");
  const SplitBasis basis(unit);
  const Complex z0 = to_complex(p, unit);
  const int count = n_hi - n_lo + 1;
  std::vector<Complex> alpha(count), beta(count);
  for (int k = 0; k < nodes; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / nodes;
    const Complex e = std::polar(1.0, theta);
    const auto [fv, gv] = basis.split(f(from_complex(z0 + radius * e, unit)));
    for (int t = 0; t < count; ++t) {
      const int n = n_lo + t;
      const Complex w = std::polar(std::pow(radius, -n), -n * theta);
      alpha[t] += w * fv;
      beta[t] += w * gv;
    }
  }
  ContourResult out;
  out.n_lo = n_lo;
  out.nodes = nodes;
  for (int t = 0; t < count; ++t) out.coeffs.push_back(basis.join(alpha[t] / double(nodes), beta[t] / double(nodes)));
  return out;
}

ContourResult contour_coefficients_adaptive(const SliceFunction& f, const Quaternion& p, const UnitImaginary& unit,
                                            double radius, int n_lo, int n_hi, int nodes, int max_nodes,
                                            double agreement) {
  ContourResult current = contour_coefficients(f, p, unit, radius, n_lo, n_hi, nodes);
  while (current.nodes < max_nodes) {
    ContourResult next = contour_coefficients(f, p, unit, radius, n_lo, n_hi, current.nodes * 2);
    double diff = 0.0, size = 0.0;
    for (std::size_t t = 0; t < next.coeffs.size(); ++t) {
      diff = std::max(diff, norm(next.coeffs[t] - current.coeffs[t]));
      size = std::max(size, norm(next.coeffs[t]));
    }
    current = std::move(next);
    if (diff <= agreement * (1.0 + size)) break;
  }
  return current;
}

Classification classify(const LaurentExpansion& e) {
  if (!e.exact_negative_tail) return {SingularityKind::NoPoleOfOrderLE, std::max(0, -e.n_min)};
  if (e.n_min < 0) return {SingularityKind::Pole, -e.n_min};
  return {SingularityKind::Removable, 0};
}

std::string to_string(const Classification& c) {
  switch (c.kind) {
    case SingularityKind::Removable: return "removable";
    case SingularityKind::Pole: return "pole(" + std::to_string(c.order) + ")";
    case SingularityKind::NoPoleOfOrderLE: return "no_pole_of_order_le(" + std::to_string(c.order) + ")";
  }
  return "removable";
}

}  // namespace sliceq
