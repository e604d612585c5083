#include "sliceq/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "sliceq/errors.hpp"

namespace sliceq {

int ComplexRootSet::total_multiplicity() const noexcept {
  int total = 0;
  for (const auto& r : roots) total += r.multiplicity;
  return total;
}

int ZeroReport::accounted_degree() const noexcept {
  int total = 0;
  for (const auto& s : spherical) total += s.multiplicity;
  for (const auto& z : isolated) total += z.isolated;
  return total;
}

namespace {

// Positive root of |c_n| x^n - sum_{k<n} |c_k| x^k for a monic polynomial.
double cauchy_radius(const ComplexPoly& monic) {
  const int n = static_cast<int>(monic.size()) - 1;
  auto g = [&](double x) {
    double lower = 0.0;
    for (int k = n - 1; k >= 0; --k) lower = lower * x + std::abs(monic[k]);
    return std::pow(x, n) - lower * (n > 0 ? 1.0 : 0.0);
  };
  double hi = 1.0;
  for (int k = 0; k < n; ++k) hi = std::max(hi, 1.0 + std::abs(monic[k]));
  double lo = 0.0;
  for (int it = 0; it < 200 && hi - lo > 1e-14 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) > 0.0 ? hi : lo) = mid;
  }
  return hi;
}

void eval_with_derivative(const ComplexPoly& p, Complex z, Complex& value, Complex& derivative) {
  value = p.back();
  derivative = 0.0;
  for (std::size_t k = p.size() - 1; k-- > 0;) {
    derivative = derivative * z + value;
    value = value * z + p[k];
  }
}

std::vector<Complex> aberth(const ComplexPoly& monic, int max_iterations) {
  const int n = static_cast<int>(monic.size()) - 1;
  const double radius = cauchy_radius(monic);
  std::vector<Complex> z(n);
  for (int k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / n + 0.4;
    z[k] = std::polar(radius * (1.0 + 0.01 * k / n), angle);
  }
  for (int it = 0; it < max_iterations; ++it) {
    double largest_step = 0.0;
    for (int k = 0; k < n; ++k) {
      Complex value, derivative;
      eval_with_derivative(monic, z[k], value, derivative);
      if (value == Complex(0.0)) continue;
      Complex repulsion = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        const Complex gap = z[k] - z[j];
        if (gap != Complex(0.0)) repulsion += 1.0 / gap;
      }
      Complex step;
      if (derivative == Complex(0.0)) {
        step = Complex(1e-8 * (1.0 + std::abs(z[k])), 1e-8);
      } else {
        const Complex ratio = value / derivative;
        step = ratio / (1.0 - ratio * repulsion);
      }
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
      z[k] -= step;
      largest_step = std::max(largest_step, std::abs(step) / (1.0 + std::abs(z[k])));
    }
    if (largest_step < 1e-15) break;
  }
  return z;
}

struct Cluster {
  Complex center;
  int multiplicity;
};

ComplexPoly derivative(const ComplexPoly& p, int order) {
  ComplexPoly d(p);
  for (int t = 0; t < order && !d.empty(); ++t) {
    ComplexPoly next;
    for (std::size_t k = 1; k < d.size(); ++k) next.push_back(d[k] * static_cast<double>(k));
    d = std::move(next);
  }
  return d;
}

// Newton iteration on p^(k-1), which has a simple root at a k-fold root of p.
Complex refine_center(const ComplexPoly& p, int k, Complex start) {
  const ComplexPoly d = derivative(p, k - 1);
  if (d.size() < 2) return start;
  Complex z = start;
  for (int it = 0; it < 50; ++it) {
    Complex value, slope;
    eval_with_derivative(d, z, value, slope);
    if (slope == Complex(0.0)) break;
    const Complex step = value / slope;
    if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
    z -= step;
    if (std::abs(step) <= 1e-16 * (1.0 + std::abs(z))) break;
  }
  return z;
}

// Groups approximate roots into clusters whose refined center is a root of
// the claimed multiplicity.
std::vector<Cluster> cluster_roots(const ComplexPoly& monic, const std::vector<Complex>& approx, double tolerance) {
  const std::size_t n = approx.size();
  std::vector<bool> used(n, false);
  std::vector<Cluster> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (used[i]) continue;
    std::vector<std::pair<double, std::size_t>> near;
    for (std::size_t j = 0; j < n; ++j) {
      if (!used[j]) near.emplace_back(std::abs(approx[j] - approx[i]), j);
    }
    std::sort(near.begin(), near.end());
    std::size_t take = 1;
    Complex center = approx[i];
    for (std::size_t k = near.size(); k >= 2; --k) {
      Complex sum = 0.0;
      for (std::size_t t = 0; t < k; ++t) sum += approx[near[t].second];
      const Complex centroid = sum / static_cast<double>(k);
      // The refined center has to stay nearer this group than any outsider.
      std::vector<bool> member(n, false);
      for (std::size_t t = 0; t < k; ++t) member[near[t].second] = true;
      double gap = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < n; ++j) {
        if (!member[j]) gap = std::min(gap, std::abs(approx[j] - centroid));
      }
      const Complex c = refine_center(monic, static_cast<int>(k), centroid);
      if (!(std::abs(c - centroid) < 0.5 * gap)) continue;
      if (valuation(monic, c, tolerance) >= static_cast<int>(k)) {
        take = k;
        center = c;
        break;
      }
    }
    for (std::size_t t = 0; t < take; ++t) used[near[t].second] = true;
    out.push_back({center, static_cast<int>(take)});
  }
  return out;
}

bool before(const Complex& a, const Complex& b) {
  return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
}

}  // namespace

ComplexRootSet real_poly_roots(const RealPolynomial& d, const RootOptions& options) {
  if (d.is_zero()) throw InvalidArgument("roots of the zero polynomial");
  ComplexRootSet result;
  if (d.degree() == 0) return result;

  const auto& c = d.coeffs();
  std::size_t zero_roots = 0;
  while (zero_roots < c.size() && c[zero_roots] == 0.0) ++zero_roots;
  std::vector<Cluster> clusters;
  if (zero_roots > 0) clusters.push_back({0.0, static_cast<int>(zero_roots)});

  ComplexPoly monic;
  const double lead = c.back();
  for (std::size_t k = zero_roots; k < c.size(); ++k) monic.emplace_back(c[k] / lead);
  if (monic.size() > 1) {
    const auto approx = aberth(monic, options.max_iterations);
    auto found = cluster_roots(monic, approx, options.valuation_tolerance);
    clusters.insert(clusters.end(), found.begin(), found.end());
  }

  // Real snapping, then conjugate pairing of the nonreal clusters.
  std::vector<Cluster> real, upper, lower;
  for (auto& cl : clusters) {
    if (std::abs(cl.center.imag()) <= options.cluster_radius * (1.0 + std::abs(cl.center))) {
      real.push_back({Complex(cl.center.real(), 0.0), cl.multiplicity});
    } else if (cl.center.imag() > 0.0) {
      upper.push_back(cl);
    } else {
      lower.push_back(cl);
    }
  }
  if (upper.size() != lower.size()) throw NoConvergence("nonreal roots do not pair into conjugates");
  std::vector<bool> taken(lower.size(), false);
  std::vector<Cluster> paired;
  for (const auto& u : upper) {
    std::size_t best = lower.size();
    double best_d = 0.0;
    for (std::size_t j = 0; j < lower.size(); ++j) {
      if (taken[j]) continue;
      const double dist = std::abs(std::conj(lower[j].center) - u.center);
      if (best == lower.size() || dist < best_d) {
        best = j;
        best_d = dist;
      }
    }
    if (lower[best].multiplicity != u.multiplicity) throw NoConvergence("conjugate root clusters differ in multiplicity");
    taken[best] = true;
    paired.push_back({0.5 * (u.center + std::conj(lower[best].center)), u.multiplicity});
  }

  // Merge anything that still coincides.
  auto merge = [&](std::vector<Cluster>& list) {
    std::sort(list.begin(), list.end(), [](const Cluster& a, const Cluster& b) { return before(a.center, b.center); });
    std::vector<Cluster> merged;
    for (const auto& cl : list) {
      if (!merged.empty() &&
          std::abs(merged.back().center - cl.center) <= options.cluster_radius * (1.0 + std::abs(cl.center))) {
        auto& m = merged.back();
        const int total = m.multiplicity + cl.multiplicity;
        m.center = (m.center * static_cast<double>(m.multiplicity) + cl.center * static_cast<double>(cl.multiplicity)) /
                   static_cast<double>(total);
        m.multiplicity = total;
      } else {
        merged.push_back(cl);
      }
    }
    list = std::move(merged);
  };
  merge(real);
  merge(paired);

  for (const auto& r : real) result.roots.push_back({r.center, r.multiplicity});
  for (const auto& p : paired) {
    result.roots.push_back({p.center, p.multiplicity});
    result.roots.push_back({std::conj(p.center), p.multiplicity});
  }
  std::sort(result.roots.begin(), result.roots.end(),
            [](const ComplexRoot& a, const ComplexRoot& b) { return before(a.value, b.value); });

  const double dnorm = d.norm();
  for (const auto& r : result.roots) {
    const double residual = std::abs(eval(d, r.value));
    const double bound = tol::kZeroVerify * dnorm * std::pow(1.0 + std::abs(r.value), d.degree());
    if (!(residual <= bound)) {
      throw NoConvergence("root residual " + std::to_string(residual) + " exceeds " + std::to_string(bound));
    }
  }
  if (result.total_multiplicity() != d.degree()) throw NoConvergence("root multiplicities do not sum to the degree");
  return result;
}

std::vector<RootSphere> root_spheres(const ComplexRootSet& roots) {
  std::vector<RootSphere> out;
  for (const auto& r : roots.roots) {
    if (r.value.imag() < 0.0) continue;
    out.push_back({{r.value.real(), r.value.imag()}, r.multiplicity});
  }
  std::sort(out.begin(), out.end(), [](const RootSphere& a, const RootSphere& b) {
    return a.sphere.x != b.sphere.x ? a.sphere.x < b.sphere.x : a.sphere.y < b.sphere.y;
  });
  return out;
}

SphereClassification sphere_classify(const QPolynomial& f, const Sphere& s, double tolerance) {
  const double scale = std::max(eval_scale(f, std::hypot(s.x, s.y)), 1e-300);
  const double limit = tolerance * scale;
  if (s.y <= 0.0) {
    const Quaternion x(s.x);
    if (norm(eval(f, x)) <= limit) return {SphereZeroKind::Isolated, x};
    return {SphereZeroKind::NoZero, {}};
  }
  const Quaternion z(s.x, s.y, 0.0, 0.0);
  const Quaternion zbar(s.x, -s.y, 0.0, 0.0);
  const Quaternion fz = eval(f, z);
  const Quaternion fzbar = eval(f, zbar);
  const Quaternion a = fz + fzbar;
  const Quaternion b = fzbar - fz;
  const bool a_small = norm(a) <= limit;
  const bool b_small = norm(b) <= limit;
  if (a_small && b_small) return {SphereZeroKind::WholeSphere, {}};
  if (b_small) return {SphereZeroKind::NoZero, {}};
  const Quaternion j = -(a * inverse(kI * b));
  if (std::abs(j.x0) > tolerance || std::abs(norm(j) - 1.0) > tolerance) return {SphereZeroKind::NoZero, {}};
  const Quaternion p = point_on(s, UnitImaginary::from_direction(j));
  if (norm(eval(f, p)) > limit) return {SphereZeroKind::NoZero, {}};
  return {SphereZeroKind::Isolated, p};
}

int classical_multiplicity(const QPolynomial& f, const Quaternion& p, double tolerance) {
  if (f.is_zero()) throw InvalidArgument("multiplicity in the zero polynomial");
  const SplitBasis basis(slice_unit_or(p, UnitImaginary::i()));
  const auto [big_f, big_g] = split_polynomial(f, basis);
  const Complex z = to_complex(p, basis.I());
  const int vf = valuation(big_f, z, tolerance);
  const int vg = valuation(big_g, z, tolerance);
  if (vf < 0) return vg;
  if (vg < 0) return vf;
  return std::min(vf, vg);
}

namespace {

int real_valuation(const QPolynomial& f, double r, double tolerance) {
  int best = -1;
  for (int n = 0; n < 4; ++n) {
    ComplexPoly comp;
    for (double v : f.component(n)) comp.emplace_back(v);
    const int v = valuation(comp, Complex(r), tolerance);
    if (v >= 0) best = best < 0 ? v : std::min(best, v);
  }
  return best;
}

}  // namespace

ZeroReport analyze_zeros(const QPolynomial& f, const ZeroOptions& options) {
  if (f.is_zero()) throw InvalidArgument("zeros of the zero polynomial");
  ZeroReport report;
  if (f.degree() == 0) return report;

  const auto spheres = root_spheres(real_poly_roots(symmetrize(f), options.roots));
  for (const auto& rs : spheres) {
    const Sphere& s = rs.sphere;
    SphereFactorization fact{s, 0, {}, f};
    if (s.y == 0.0) {
      const int k = real_valuation(f, s.x, options.roots.valuation_tolerance);
      if (2 * k != rs.multiplicity) throw NoConvergence("real zero multiplicity disagrees with the symmetrization");
      fact.spherical_exponent = k / 2;
      QPolynomial g = f;
      for (int t = 0; t < k; ++t) g = left_divide_linear(g, Quaternion(s.x)).quotient;
      if (k % 2 == 1) fact.chain.push_back(Quaternion(s.x));
      fact.residual = g;
      if (fact.spherical_exponent > 0) report.spherical.push_back({s, 2 * fact.spherical_exponent});
      if (k % 2 == 1) report.isolated.push_back({Quaternion(s.x), k, 1, fact.chain});
      report.factorizations.push_back(std::move(fact));
      continue;
    }

    const RealPolynomial factor = RealPolynomial::sphere_factor(s);
    QPolynomial g = f;
    QPolynomial q;
    while (g.degree() >= 2 && try_divide_real(g, factor, q)) {
      g = q;
      ++fact.spherical_exponent;
    }
    const int expected = rs.multiplicity - 2 * fact.spherical_exponent;
    if (expected < 0) throw NoConvergence("spherical factor exceeds the symmetrization multiplicity");
    for (int t = 0; t < expected; ++t) {
      const auto cls = sphere_classify(g, s, options.verify_tolerance);
      if (cls.kind != SphereZeroKind::Isolated) throw NoConvergence("expected an isolated zero on the sphere");
      fact.chain.push_back(cls.point);
      g = left_divide_linear(g, cls.point).quotient;
    }
    fact.residual = g;
    if (fact.spherical_exponent > 0) report.spherical.push_back({s, 2 * fact.spherical_exponent});
    if (!fact.chain.empty()) {
      const Quaternion p = fact.chain.front();
      report.isolated.push_back({p, classical_multiplicity(f, p, options.roots.valuation_tolerance), expected, fact.chain});
    }
    report.factorizations.push_back(std::move(fact));
  }
  return report;
}

QPolynomial reconstruct(const SphereFactorization& factorization) {
  QPolynomial out = factorization.residual;
  for (auto it = factorization.chain.rbegin(); it != factorization.chain.rend(); ++it) {
    out = star_mul(QPolynomial::linear(*it), out);
  }
  if (factorization.spherical_exponent > 0) {
    out = star_mul(pow(RealPolynomial::sphere_factor(factorization.sphere), factorization.spherical_exponent), out);
  }
  return out;
}

}  // namespace sliceq
