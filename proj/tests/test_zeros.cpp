#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "oracles.hpp"
#include "sliceq/errors.hpp"
#include "sliceq/random.hpp"
#include "sliceq/zeros.hpp"

using namespace sliceq;

namespace {

QPolynomial product_of_linear(const std::vector<Quaternion>& roots) {
  QPolynomial f = QPolynomial::constant(kOne);
  for (const auto& r : roots) f = star_mul(f, QPolynomial::linear(r));
  return f;
}

bool verified(const QPolynomial& f, const Quaternion& q) {
  return norm(oracle::poly_value(f.coeffs(), q)) <= 1e-8 * eval_scale(f, norm(q));
}

double coeff_dist(const QPolynomial& a, const QPolynomial& b) {
  double d = 0;
  for (int n = 0; n <= std::max(a.degree(), b.degree()); ++n) d = std::max(d, norm(a.coeff(n) - b.coeff(n)));
  return d;
}

}  // namespace

TEST_CASE("real polynomial roots") {
  auto r = real_poly_roots(RealPolynomial({1, 0, 1}));
  REQUIRE(r.roots.size() == 2);
  CHECK(r.roots[0].multiplicity == 1);
  CHECK(std::abs(r.roots[0].value - Complex(0, -1)) <= 1e-12);
  r = real_poly_roots(pow(RealPolynomial({1, 0, 1}), 2));
  REQUIRE(r.roots.size() == 2);
  CHECK(r.roots[1].multiplicity == 2);
  r = real_poly_roots(RealPolynomial({5, -2, 1}));
  const auto want = oracle::quadratic_roots(-2, 5);
  CHECK(std::abs(r.roots[0].value - want[0]) <= 1e-12);
  CHECK(std::abs(r.roots[1].value - want[1]) <= 1e-12);
  r = real_poly_roots(pow(RealPolynomial::linear(1.5), 6) * RealPolynomial({2, 0, 1}));
  CHECK(r.total_multiplicity() == 8);
  CHECK(r.roots.size() == 3);
  Rng rng(41);
  for (int t = 0; t < 100; ++t) {
    const int deg = rng.uniform_int(1, 20);
    std::vector<double> c(static_cast<std::size_t>(deg) + 1);
    for (auto& x : c) x = rng.normal();
    const RealPolynomial d(c);
    const auto roots = real_poly_roots(d);
    CHECK(roots.total_multiplicity() == deg);
    for (const auto& root : roots.roots) {
      CHECK(std::abs(eval(d, root.value)) <= 1e-8 * d.norm() * std::pow(1 + std::abs(root.value), deg));
    }
  }
}

TEST_CASE("sphere classification") {
  const Sphere unit{0, 1};
  CHECK(sphere_classify(QPolynomial(RealPolynomial({1, 0, 1})), unit).kind == SphereZeroKind::WholeSphere);
  const auto c = sphere_classify(product_of_linear({kI, kJ}), unit);
  CHECK(c.kind == SphereZeroKind::Isolated);
  CHECK(norm(c.point - kI) <= 1e-10);
  CHECK(sphere_classify(QPolynomial(RealPolynomial({1, 1, 1})), unit).kind == SphereZeroKind::NoZero);
}

TEST_CASE("worked examples") {
  const auto sphere = analyze_zeros(QPolynomial(RealPolynomial({1, 0, 1})));
  REQUIRE(sphere.spherical.size() == 1);
  CHECK(sphere.spherical[0].multiplicity == 2);
  CHECK(sphere.isolated.empty());

  const auto f = product_of_linear({kI, kJ});
  const auto iso = analyze_zeros(f);
  CHECK(iso.spherical.empty());
  REQUIRE(iso.isolated.size() == 1);
  CHECK(norm(iso.isolated[0].point - kI) <= 1e-9);
  CHECK(iso.isolated[0].isolated == 2);
  CHECK(iso.isolated[0].classical == 1);
  CHECK(iso.accounted_degree() == 2);

  const Quaternion alpha = kI, beta{1, 0, 1, 0};
  const auto g = product_of_linear({alpha, beta});
  const auto d = beta - conj(alpha);
  const auto second = inverse(d) * beta * d;
  const auto two = analyze_zeros(g);
  REQUIRE(two.isolated.size() == 2);
  int matched = 0;
  for (const auto& z : two.isolated) {
    CHECK(z.isolated == 1);
    if (norm(z.point - alpha) <= 1e-9 || norm(z.point - second) <= 1e-9) ++matched;
  }
  CHECK(matched == 2);
}

TEST_CASE("real zeros") {
  const auto f = product_of_linear({Quaternion(2.0), Quaternion(2.0), Quaternion(2.0), kJ});
  const auto r = analyze_zeros(f);
  CHECK(r.accounted_degree() == 4);
  bool found = false;
  for (const auto& z : r.isolated) {
    if (norm(z.point - Quaternion(2.0)) <= 1e-8) {
      found = true;
      CHECK(z.classical == 3);
    }
  }
  CHECK(found);
}

TEST_CASE("classical multiplicity on every slice of a spherical zero") {
  const QPolynomial f(RealPolynomial({1, 0, 1}));
  Rng rng(42);
  for (int t = 0; t < 50; ++t) CHECK(classical_multiplicity(f, random_unit_imaginary(rng).value()) == 1);
  CHECK(classical_multiplicity(star_pow(QPolynomial::linear(kJ), 3), kJ) == 3);
  CHECK(classical_multiplicity(QPolynomial::linear(kJ), kI) == 0);
}

TEST_CASE("degree accounting, verification and reconstruction on random products") {
  Rng rng(43);
  for (int t = 0; t < 100; ++t) {
    std::vector<Quaternion> roots;
    const int nlin = rng.uniform_int(0, 4);
    for (int k = 0; k < nlin; ++k) roots.push_back(random_quaternion(rng));
    if (nlin > 0 && rng.uniform() < 0.3) {
      // a second root on the sphere of the first
      roots.push_back(point_on(sphere_of(roots[0]), random_unit_imaginary(rng)));
    }
    auto f = product_of_linear(roots);
    const int nsph = rng.uniform_int(0, 2);
    for (int k = 0; k < nsph; ++k) {
      const Sphere s{rng.normal(), std::abs(rng.normal()) + 0.1};
      f = star_mul(RealPolynomial::sphere_factor(s), f);
    }
    if (f.degree() == 0) continue;
    f = star_mul(f, QPolynomial::constant(random_quaternion(rng)));
    const auto report = analyze_zeros(f);
    CHECK(report.accounted_degree() == f.degree());
    for (const auto& z : report.isolated) CHECK(verified(f, z.point));
    for (const auto& s : report.spherical) {
      for (int k = 0; k < 3; ++k) CHECK(verified(f, point_on(s.sphere, random_unit_imaginary(rng).value())));
    }
    for (const auto& fac : report.factorizations) {
      CHECK(coeff_dist(reconstruct(fac), f) <= 1e-7 * (1 + f.norm()));
    }
  }
}

TEST_CASE("zeros of f and f^c lie on the same spheres") {
  Rng rng(44);
  for (int t = 0; t < 50; ++t) {
    const auto f = product_of_linear({random_quaternion(rng), random_quaternion(rng), random_quaternion(rng)});
    const auto a = analyze_zeros(f);
    const auto b = analyze_zeros(regular_conj(f));
    std::vector<Sphere> sa, sb;
    for (const auto& z : a.isolated) sa.push_back(sphere_of(z.point));
    for (const auto& z : b.isolated) sb.push_back(sphere_of(z.point));
    for (const auto& s : a.spherical) sa.push_back(s.sphere);
    for (const auto& s : b.spherical) sb.push_back(s.sphere);
    REQUIRE(sa.size() == sb.size());
    for (const auto& s : sa) {
      const bool match = std::any_of(sb.begin(), sb.end(), [&](const Sphere& o) {
        return std::abs(o.x - s.x) <= 1e-7 && std::abs(o.y - s.y) <= 1e-7;
      });
      CHECK(match);
    }
  }
}
