#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <limits>

#include "sliceq/errors.hpp"
#include "sliceq/experiments.hpp"
#include "sliceq/random.hpp"
#include "sliceq/report.hpp"

using namespace sliceq;

TEST_CASE("rng streams are reproducible") {
  Rng a(7), b(7), c(8);
  for (int t = 0; t < 100; ++t) {
    const auto x = a();
    CHECK(x == b());
    CHECK(x != c());
  }
  Rng u(1);
  for (int t = 0; t < 1000; ++t) {
    const double v = u.uniform();
    CHECK(v >= 0.0);
    CHECK(v < 1.0);
    const int k = u.uniform_int(-3, 3);
    CHECK(k >= -3);
    CHECK(k <= 3);
    CHECK(norm(random_in_ball(u, 2.0)) <= 2.0);
  }
}

TEST_CASE("coefficient generators") {
  const auto rf = parse_generator("reciprocal_factorial");
  const auto mags = rf.magnitudes(5);
  CHECK(mags[0] == kOne);
  CHECK(mags[4].x0 == doctest::Approx(1.0 / 24));
  const auto geo = parse_generator("geometric:0.25");
  CHECK(geo.magnitudes(3)[3].x0 == doctest::Approx(0.25 * 0.25 * 0.25));
  CHECK(geo.name() == "geometric:0.25");
  CHECK_THROWS_AS(parse_generator("harmonic"), InvalidArgument);
  const auto e = rf.series(Quaternion(0.0), 40);
  CHECK(e.n_min == -40);
  CHECK_FALSE(e.exact_negative_tail);
}

TEST_CASE("identity sweeps pass") {
  for (const auto& name : identity_names()) {
    CAPTURE(name);
    const auto r = identity_sweep(name, 200, 42);
    CHECK(r.passed);
    CHECK(r.worst_residual <= r.tolerance);
    CHECK_FALSE(r.failing_instance.has_value());
  }
  CHECK_THROWS_AS(identity_sweep("unknown", 10, 0), UnknownIdentity);
}

TEST_CASE("scan is deterministic") {
  const auto gen = parse_generator("reciprocal_factorial");
  const auto a = to_json(casorati_scan(gen, Quaternion(0.0), 0.5, 0.1, 10, 5)).dump();
  const auto b = to_json(casorati_scan(gen, Quaternion(0.0), 0.5, 0.1, 10, 5)).dump();
  CHECK(a == b);
  const auto c = to_json(casorati_scan(gen, Quaternion(0.0), 0.5, 0.1, 10, 6)).dump();
  CHECK(a != c);
}

TEST_CASE("scan trivial cases and witness consistency") {
  const auto gen = parse_generator("reciprocal_factorial");
  const auto all = casorati_scan(gen, Quaternion(0.0), 0.5, std::numeric_limits<double>::infinity(), 20, 1);
  CHECK(all.hits == 20);

  const auto series = gen.series(Quaternion(0.0), 40);
  Rng rng(9);
  ScanOptions opt;
  std::vector<Quaternion> starts;
  for (int k = 0; k < 5; ++k) {
    Quaternion q0;
    do q0 = random_in_ball(rng, 0.5);
    while (norm(q0) < 0.1);
    opt.targets.push_back(eval_truncated(series, q0).value);
    opt.hints.push_back({q0});
  }
  const auto self = casorati_scan(gen, Quaternion(0.0), 0.5, 1e-12, 5, 2, 40, opt);
  CHECK(self.hits == 5);
  for (const auto& w : self.witnesses) CHECK(w.residual <= 1e-12);

  const auto r = casorati_scan(gen, Quaternion(0.0), 0.5, 0.1, 10, 3);
  for (const auto& w : r.witnesses) {
    CHECK(norm(eval_truncated(series, w.point).value - w.target) == doctest::Approx(w.residual).epsilon(1e-9));
    CHECK(w.hit == (w.residual < 0.1));
    CHECK(norm(w.point) < 0.5);
  }
}

TEST_CASE("hit fraction is monotone in eps and truncation") {
  const auto gen = parse_generator("reciprocal_factorial");
  int last = 0;
  for (double eps : {0.001, 0.01, 0.1}) {
    const auto r = casorati_scan(gen, Quaternion(0.0), 0.5, eps, 20, 11, 40);
    CHECK(r.hits >= last);
    last = r.hits;
  }
  last = 0;
  for (int m : {2, 10, 40}) {
    const auto r = casorati_scan(gen, Quaternion(0.0), 0.5, 0.1, 20, 11, m);
    CHECK(r.hits >= last);
    last = r.hits;
  }
}
