#include "sliceq/rational.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sliceq/complex_poly.hpp"
#include "sliceq/errors.hpp"

namespace sliceq {

QRational QRational::normalize(QPolynomial numerator, RealPolynomial denominator) {
  if (denominator.is_zero()) throw ZeroDenominator("denominator is the zero polynomial");
  if (numerator.is_zero()) return QRational(QPolynomial{}, RealPolynomial::constant(1.0));
  numerator = (1.0 / denominator.leading()) * numerator;
  denominator = denominator.monic();
  if (denominator.degree() >= 1) {
    const auto roots = real_poly_roots(denominator);
    for (const auto& r : roots.roots) {
      if (r.value.imag() < 0.0) continue;
      const RealPolynomial factor = r.value.imag() == 0.0 ? RealPolynomial::linear(r.value.real())
                                                           : RealPolynomial::sphere_factor({r.value.real(), r.value.imag()});
      for (int t = 0; t < r.multiplicity; ++t) {
        QPolynomial quotient;
        if (numerator.degree() < factor.degree() || !try_divide_real(numerator, factor, quotient)) break;
        numerator = std::move(quotient);
        denominator = divmod(denominator.coeffs(), factor).quotient.monic();
      }
    }
  }
  return QRational(std::move(numerator), std::move(denominator));
}

QRational from_quotient(const QPolynomial& f, const QPolynomial& g) {
  if (f.is_zero()) throw ZeroDenominator("*-quotient by the zero polynomial");
  return QRational::normalize(star_mul(regular_conj(f), g), symmetrize(f));
}

QRational add(const QRational& a, const QRational& b) {
  if (a.denominator() == b.denominator()) {
    return QRational::normalize(a.numerator() + b.numerator(), a.denominator());
  }
  return QRational::normalize(star_mul(b.denominator(), a.numerator()) + star_mul(a.denominator(), b.numerator()),
                              a.denominator() * b.denominator());
}

QRational negate(const QRational& a) { return QRational::normalize(-a.numerator(), a.denominator()); }

QRational subtract(const QRational& a, const QRational& b) { return add(a, negate(b)); }

QRational star_mul(const QRational& a, const QRational& b) {
  return QRational::normalize(star_mul(a.numerator(), b.numerator()), a.denominator() * b.denominator());
}

QRational reciprocal(const QRational& a) {
  if (a.is_zero()) throw ZeroDenominator("reciprocal of zero");
  return QRational::normalize(star_mul(a.denominator(), regular_conj(a.numerator())), symmetrize(a.numerator()));
}

QRational star_pow(const QRational& a, int n) {
  if (n < 0) return reciprocal(star_pow(a, -n));
  QRational result(QPolynomial::constant(kOne));
  QRational base = a;
  while (n > 0) {
    if (n & 1) result = star_mul(result, base);
    n >>= 1;
    if (n > 0) base = star_mul(base, base);
  }
  return result;
}

Quaternion eval(const QRational& a, const Quaternion& q) {
  const Quaternion d = eval(a.denominator(), q);
  const double scale = eval_scale(a.denominator(), norm(q));
  if (norm(d) <= tol::kPoleEval * scale) throw PoleEvaluation("denominator vanishes at " + to_string(q));
  return inverse(d) * eval(a.numerator(), q);
}

Quaternion transport(const QPolynomial& f, const Quaternion& q) {
  const QPolynomial fc = regular_conj(f);
  const Quaternion v = eval(fc, q);
  if (norm(v) <= tol::kPoleEval * eval_scale(fc, norm(q))) throw PoleEvaluation("f^c vanishes at " + to_string(q));
  return inverse(v) * q * v;
}

namespace {

int min_valuation(const ComplexPoly& a, const ComplexPoly& b, Complex z) {
  const int va = valuation(a, z);
  const int vb = valuation(b, z);
  if (va < 0) return vb;
  if (vb < 0) return va;
  return std::min(va, vb);
}

}  // namespace

SingularityReport analyze_poles(const QRational& a) {
  SingularityReport report;
  if (a.denominator().degree() < 1) return report;
  const auto spheres = root_spheres(real_poly_roots(a.denominator()));
  const QPolynomial& num = a.numerator();
  for (const auto& rs : spheres) {
    PoleSphere pole;
    pole.sphere = rs.sphere;
    const int v = rs.multiplicity;
    pole.denominator_multiplicity = v;
    if (num.is_zero()) {
      report.spheres.push_back(pole);
      continue;
    }
    if (rs.sphere.y == 0.0) {
      const int ord = std::max(0, v - classical_multiplicity(num, Quaternion(rs.sphere.x)));
      pole.generic_order = ord;
      pole.spherical_order = 2 * ord;
      pole.order_at_p = pole.order_at_pbar = ord;
      report.spheres.push_back(pole);
      continue;
    }

    const SplitBasis basis(UnitImaginary::i());
    const auto [n1, n2] = split_polynomial(num, basis);
    const Complex z(rs.sphere.x, rs.sphere.y);
    pole.order_at_p = std::max(0, v - min_valuation(n1, n2, z));
    pole.order_at_pbar = std::max(0, v - min_valuation(n1, n2, std::conj(z)));
    pole.generic_order = v;
    pole.spherical_order = 2 * v;

    const auto cls = sphere_classify(num, rs.sphere);
    if (cls.kind == SphereZeroKind::WholeSphere) throw NoConvergence("numerator vanishes on a pole sphere after normalization");
    if (cls.kind == SphereZeroKind::Isolated) {
      const int m = classical_multiplicity(num, cls.point);
      pole.exceptional = ExceptionalPole{cls.point, std::max(0, v - m)};
      int length = 0;
      QPolynomial g = num;
      while (g.degree() >= 1 && length <= num.degree()) {
        const auto step = sphere_classify(g, rs.sphere);
        if (step.kind != SphereZeroKind::Isolated) break;
        ++length;
        g = left_divide_linear(g, step.point).quotient;
      }
      pole.isolated = IsolatedPole{cls.point, length};
    }
    report.spheres.push_back(pole);
  }
  return report;
}

PointStatus point_status(const QRational& a, const SingularityReport& report, const Quaternion& q) {
  (void)a;
  for (const auto& pole : report.spheres) {
    if (!on_sphere(q, pole.sphere)) continue;
    int order = pole.generic_order;
    if (pole.exceptional && norm(q - pole.exceptional->point) <= tol::kGeom * (1.0 + norm(q))) {
      order = pole.exceptional->order;
    }
    if (order > 0) return {PointKind::Pole, order};
    if (pole.generic_order > 0) return {PointKind::Order0NonRemovable, 0};
    return {PointKind::Regular, 0};
  }
  return {PointKind::Regular, 0};
}

PoleFactorization pole_factorization(const QRational& a, const PoleSphere& pole) {
  PoleFactorization out;
  out.sphere = pole.sphere;
  out.n = pole.generic_order;
  out.m = pole.exceptional ? pole.exceptional->order : out.n;
  if (pole.sphere.y == 0.0) {
    out.point = Quaternion(pole.sphere.x);
    const auto lift = pow(RealPolynomial::linear(pole.sphere.x), out.n);
    out.residual = star_mul(QRational(QPolynomial(lift)), a);
    return out;
  }
  out.point = pole.exceptional ? pole.exceptional->point : point_on(pole.sphere, kI);
  const auto lift = pow(RealPolynomial::sphere_factor(pole.sphere), out.n);
  const QRational shift = from_quotient(star_pow(QPolynomial::linear(out.point), out.n - out.m), QPolynomial(lift));
  out.residual = star_mul(shift, a);
  return out;
}

QRational reconstruct(const PoleFactorization& factorization) {
  const QRational& g = factorization.residual;
  if (factorization.sphere.y == 0.0) {
    return QRational::normalize(g.numerator(),
                                g.denominator() * pow(RealPolynomial::linear(factorization.sphere.x), factorization.n));
  }
  return QRational::normalize(
      star_mul(star_pow(QPolynomial::linear(factorization.point), factorization.n - factorization.m), g.numerator()),
      g.denominator() * pow(RealPolynomial::sphere_factor(factorization.sphere), factorization.n));
}

double unboundedness_witness(const QRational& a, const Quaternion& p, double distance, int samples) {
  const Sphere s = sphere_of(p);
  if (s.y <= tol::kUnit) throw InvalidArgument("witness sampling needs a nonreal point");
  if (samples < 1 || !(distance > 0.0)) throw InvalidArgument("witness needs samples >= 1 and distance > 0");
  const SplitBasis basis(slice_unit(p));
  const Quaternion ij = basis.I().value() * basis.J().value();
  const double theta = 2.0 * std::asin(std::min(1.0, distance / (2.0 * s.y)));
  double best = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double phi = 2.0 * std::numbers::pi * (k + 0.5) / samples;
    const Quaternion u = basis.J().value() * std::cos(phi) + ij * std::sin(phi);
    const Quaternion unit = basis.I().value() * std::cos(theta) + u * std::sin(theta);
    for (double eta = 1e-9; eta <= 1e-3; eta *= 10.0) {
      try {
        const Quaternion q = Quaternion(s.x) + unit * (s.y * (1.0 + eta));
        best = std::max(best, norm(eval(a, q)));
        break;
      } catch (const PoleEvaluation&) {
      }
    }
  }
  return best;
}

}  // namespace sliceq
