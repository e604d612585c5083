#include "sliceq/experiments.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "sliceq/errors.hpp"

namespace sliceq {

std::vector<Quaternion> CoefficientGenerator::magnitudes(int truncation) const {
  if (truncation < 0) throw InvalidArgument("truncation must be nonnegative");
  std::vector<Quaternion> out;
  double factor = 1.0;
  for (int m = 0; m <= truncation; ++m) {
    switch (rule) {
      case Rule::ReciprocalFactorial:
        if (m > 0) factor /= m;
        out.push_back(scale * factor);
        break;
      case Rule::Geometric:
        out.push_back(scale * std::pow(ratio, m));
        break;
      case Rule::Custom:
        out.push_back(m < static_cast<int>(custom.size()) ? custom[m] : Quaternion{});
        break;
    }
  }
  return out;
}

LaurentExpansion CoefficientGenerator::series(const Quaternion& p, int truncation) const {
  auto mags = magnitudes(truncation);
  if (direction == Direction::Nonnegative) return make_series(p, 0, std::move(mags), true);
  std::reverse(mags.begin(), mags.end());
  return make_series(p, -truncation, std::move(mags), false);
}

std::string CoefficientGenerator::name() const {
  switch (rule) {
    case Rule::ReciprocalFactorial: return "reciprocal_factorial";
    case Rule::Geometric: {
      char buf[64];
      auto res = std::to_chars(buf, buf + sizeof buf, ratio);
      return "geometric:" + std::string(buf, res.ptr);
    }
    case Rule::Custom: return "custom";
  }
  return "custom";
}

CoefficientGenerator parse_generator(std::string_view text) {
  CoefficientGenerator gen;
  if (text == "reciprocal_factorial") return gen;
  if (text.substr(0, 9) == "geometric") {
    gen.rule = CoefficientGenerator::Rule::Geometric;
    if (text.size() == 9) return gen;
    if (text[9] != ':') throw InvalidArgument("unknown coefficient rule '" + std::string(text) + "'");
    const auto rest = text.substr(10);
    const auto res = std::from_chars(rest.data(), rest.data() + rest.size(), gen.ratio);
    if (res.ec != std::errc() || res.ptr != rest.data() + rest.size() || !std::isfinite(gen.ratio)) {
      throw InvalidArgument("bad geometric ratio '" + std::string(rest) + "'");
    }
    return gen;
  }
  throw InvalidArgument("unknown coefficient rule '" + std::string(text) + "'");
}

namespace {

constexpr double kHuge = std::numeric_limits<double>::infinity();

// Solves the 4x4 system a x = b by Gaussian elimination with partial pivoting.
bool solve4(std::array<std::array<double, 4>, 4> a, std::array<double, 4> b, std::array<double, 4>& x) {
  for (int c = 0; c < 4; ++c) {
    int piv = c;
    for (int r = c + 1; r < 4; ++r)
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    if (!(std::abs(a[piv][c]) > 1e-300)) return false;
    std::swap(a[c], a[piv]);
    std::swap(b[c], b[piv]);
    for (int r = c + 1; r < 4; ++r) {
      const double f = a[r][c] / a[c][c];
      for (int k = c; k < 4; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  for (int r = 3; r >= 0; --r) {
    double s = b[r];
    for (int k = r + 1; k < 4; ++k) s -= a[r][k] * x[k];
    x[r] = s / a[r][r];
  }
  return std::all_of(x.begin(), x.end(), [](double v) { return std::isfinite(v); });
}

std::array<double, 4> as_array(const Quaternion& q) { return {q.x0, q.x1, q.x2, q.x3}; }

class TargetSearch {
 public:
  TargetSearch(const LaurentExpansion& series, const Quaternion& p, double r, double eps, int budget)
      : series_(series), p_(p), r_(r), eps_(eps), budget_(budget) {}

  Witness run(const Quaternion& target, Rng& rng, const std::vector<Quaternion>& hints, int starts, int refine) {
    target_ = target;
    best_ = {target, p_, kHuge, false};
    std::vector<std::pair<double, Quaternion>> pool;
    auto consider = [&](const Quaternion& q) {
      const double res = residual(q);
      pool.emplace_back(res, q);
    };
    for (const auto& h : hints) {
      if (done()) break;
      if (inside(h)) consider(h);
    }
    for (int k = 0; k < starts && !done(); ++k) consider(sample(rng));
    std::stable_sort(pool.begin(), pool.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (int k = 0; k < refine && k < static_cast<int>(pool.size()) && !done(); ++k) newton(pool[k].second, pool[k].first);
    while (!done()) {
      const Quaternion q = sample(rng);
      newton(q, residual(q));
    }
    best_.hit = best_.residual < eps_;
    return best_;
  }

 private:
  bool done() const { return used_ >= budget_ || best_.residual < eps_; }

  bool inside(const Quaternion& q) const {
    if (!(sigma(q, p_) < r_)) return false;
    return !on_sphere(q, sphere_of(p_), 1e-12);
  }

  double residual(const Quaternion& q) {
    ++used_;
    double res = kHuge;
    try {
      const Quaternion v = eval_truncated(series_, q).value;
      res = norm(v - target_);
      if (!std::isfinite(res)) res = kHuge;
    } catch (const PoleEvaluation&) {
    }
    if (res < best_.residual) {
      best_.residual = res;
      best_.point = q;
    }
    return res;
  }

  Quaternion sample(Rng& rng) const {
    const bool real_center = imag_norm(p_) <= tol::kUnit;
    for (int attempt = 0; attempt < 8; ++attempt) {
      Quaternion q;
      if (real_center || (attempt % 2 == 1)) {
        q = p_ + random_in_ball(rng, r_);
      } else {
        const UnitImaginary unit = slice_unit(p_);
        const double rho = r_ * std::sqrt(rng.uniform());
        const double theta = 2.0 * std::numbers::pi * rng.uniform();
        q = p_ + from_complex(std::polar(rho, theta), unit);
      }
      if (inside(q)) return q;
    }
    const UnitImaginary unit = slice_unit_or(p_, UnitImaginary::i());
    return p_ + from_complex(std::polar(0.5 * r_, 2.0 * std::numbers::pi * rng.uniform()), unit);
  }

  Quaternion value(const Quaternion& q) {
    ++used_;
    return eval_truncated(series_, q).value;
  }

  void newton(Quaternion q, double res) {
    for (int it = 0; it < 60 && !done(); ++it) {
      Quaternion fq;
      try {
        fq = value(q) - target_;
      } catch (const PoleEvaluation&) {
        return;
      }
      const double h = 1e-7 * std::max(norm(q - p_), 1e-6);
      std::array<std::array<double, 4>, 4> jac{};
      for (int c = 0; c < 4; ++c) {
        Quaternion dq;
        (&dq.x0)[c] = h;
        Quaternion df;
        try {
          df = (value(q + dq) - target_ - fq) / h;
        } catch (const PoleEvaluation&) {
          return;
        }
        const auto col = as_array(df);
        for (int r = 0; r < 4; ++r) jac[r][c] = col[r];
      }
      std::array<double, 4> step{};
      const auto rhs = as_array(-fq);
      if (!solve4(jac, rhs, step)) return;
      Quaternion delta(step[0], step[1], step[2], step[3]);
      const double cap = 0.5 * std::max(norm(q - p_), 1e-9);
      if (norm(delta) > cap) delta = delta * (cap / norm(delta));
      bool improved = false;
      for (int halve = 0; halve < 10 && !done(); ++halve) {
        const Quaternion trial = q + delta;
        if (inside(trial)) {
          const double tres = residual(trial);
          if (tres < res) {
            q = trial;
            res = tres;
            improved = true;
            break;
          }
        }
        delta = delta * 0.5;
      }
      if (!improved) return;
    }
  }

  const LaurentExpansion& series_;
  Quaternion p_;
  double r_;
  double eps_;
  int budget_;
  int used_ = 0;
  Quaternion target_;
  Witness best_;
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  return seed ^ (0x9e3779b97f4a7c15ULL * (index + 1));
}

}  // namespace

DensityScanResult casorati_scan(const CoefficientGenerator& gen, const Quaternion& p, double r, double eps,
                                int ntargets, std::uint64_t seed, int truncation, const ScanOptions& options) {
  if (!(r > 0.0)) throw InvalidArgument("scan radius must be positive");
  if (!(eps > 0.0)) throw InvalidArgument("eps must be positive");
  if (options.budget < 1) throw InvalidArgument("budget must be positive");
  std::vector<Quaternion> targets = options.targets;
  if (targets.empty()) {
    if (ntargets < 0) throw InvalidArgument("target count must be nonnegative");
    Rng rng(seed);
    for (int k = 0; k < ntargets; ++k) targets.push_back(random_in_ball(rng, 2.0));
  }

  DensityScanResult result;
  result.parameters = {p, r, eps, truncation, static_cast<int>(targets.size()), seed, options.budget, gen.name()};
  result.targets = static_cast<int>(targets.size());
  const LaurentExpansion series = gen.series(p, truncation);
  static const std::vector<Quaternion> no_hints;
  for (std::size_t k = 0; k < targets.size(); ++k) {
    Rng rng(mix_seed(seed, k));
    TargetSearch search(series, p, r, eps, options.budget);
    const auto& hints = k < options.hints.size() ? options.hints[k] : no_hints;
    Witness w = search.run(targets[k], rng, hints, options.random_starts, options.refined_candidates);
    if (w.hit) ++result.hits;
    result.witnesses.push_back(w);
  }
  return result;
}

namespace {

struct Trial {
  double residual = 0.0;  // normalized
  std::string instance;
};

using TrialFn = std::function<std::optional<Trial>(Rng&)>;

QPolynomial poly(Rng& rng, int lo = 1, int hi = 4) { return random_polynomial(rng, rng.uniform_int(lo, hi)); }

std::optional<Trial> product_formula(Rng& rng) {
  const QPolynomial f = poly(rng), g = poly(rng);
  const Quaternion q = random_quaternion(rng);
  const Quaternion fq = eval(f, q);
  if (norm(fq) <= 1e-8 * eval_scale(f, norm(q))) return std::nullopt;
  const Quaternion lhs = eval(star_mul(f, g), q);
  const Quaternion rhs = fq * eval(g, inverse(fq) * q * fq);
  const double scale = 1.0 + eval_scale(f, norm(q)) * eval_scale(g, norm(q));
  return Trial{norm(lhs - rhs) / scale, "q=" + to_string(q)};
}

std::optional<Trial> representation(Rng& rng) {
  const QPolynomial f = poly(rng, 1, 6);
  const UnitImaginary i = random_unit_imaginary(rng);
  const UnitImaginary j = random_unit_imaginary(rng);
  const double x = rng.normal();
  const double y = std::abs(rng.normal()) + 1e-3;
  const Quaternion q = Quaternion(x) + j.value() * y;
  const Quaternion lhs = eval(f, q);
  const Quaternion rhs = represent(eval(f, Quaternion(x) + i.value() * y), eval(f, Quaternion(x) - i.value() * y), i, j);
  return Trial{norm(lhs - rhs) / (1.0 + eval_scale(f, norm(q))), "q=" + to_string(q)};
}

std::optional<Trial> reciprocal_identity(Rng& rng) {
  const QPolynomial f = poly(rng, 1, 3);
  const RealPolynomial fs = symmetrize(f);
  const Quaternion q = random_quaternion(rng);
  const double fsq = norm(eval(fs, q));
  if (fsq <= 1e-6 * eval_scale(fs, norm(q))) return std::nullopt;
  const QRational a(f);
  const QRational inv = reciprocal(a);
  const double r1 = norm(eval(star_mul(a, inv), q) - kOne);
  const double r2 = norm(eval(star_mul(inv, a), q) - kOne);
  const double scale = 1.0 + eval_scale(fs, norm(q)) / fsq;
  return Trial{std::max(r1, r2) / scale, "q=" + to_string(q)};
}

std::optional<Trial> transport_identity(Rng& rng) {
  const QPolynomial f = poly(rng, 1, 3), g = poly(rng, 0, 3);
  const Quaternion q = random_quaternion(rng);
  const RealPolynomial fs = symmetrize(f);
  const double fsq = norm(eval(fs, q));
  if (fsq <= 1e-6 * eval_scale(fs, norm(q))) return std::nullopt;
  const Quaternion t = transport(f, q);
  const Quaternion ft = eval(f, t);
  const Quaternion rhs = inverse(ft) * eval(g, t);
  const Quaternion lhs = eval(from_quotient(f, g), q);
  const double scale = (1.0 + norm(rhs)) * (1.0 + eval_scale(f, norm(q)) / norm(ft));
  const double r1 = norm(lhs - rhs) / scale;
  // T_{f^c} o T_f = id is held to a tenfold tighter bound.
  const double r2 = 10.0 * norm(transport(regular_conj(f), t) - q) / (1.0 + norm(q)) / (1.0 + eval_scale(f, norm(q)) / norm(ft));
  return Trial{std::max(r1, r2), "q=" + to_string(q)};
}

std::optional<Trial> conj_reversal(Rng& rng) {
  const QPolynomial f = poly(rng), g = poly(rng);
  const QPolynomial lhs = regular_conj(star_mul(f, g));
  const QPolynomial rhs = star_mul(regular_conj(g), regular_conj(f));
  return Trial{(lhs - rhs).norm() / (1.0 + f.norm() * g.norm()), "deg " + std::to_string(f.degree()) + "," + std::to_string(g.degree())};
}

std::optional<Trial> associativity(Rng& rng) {
  const QPolynomial f = poly(rng), g = poly(rng), h = poly(rng);
  const QPolynomial lhs = star_mul(star_mul(f, g), h);
  const QPolynomial rhs = star_mul(f, star_mul(g, h));
  return Trial{(lhs - rhs).norm() / (1.0 + f.norm() * g.norm() * h.norm()), "deg " + std::to_string(f.degree())};
}

std::optional<Trial> symmetrization_product(Rng& rng) {
  const QPolynomial f = poly(rng), g = poly(rng);
  const RealPolynomial lhs = symmetrize(star_mul(f, g));
  const RealPolynomial rhs = symmetrize(f) * symmetrize(g);
  const double scale = 1.0 + f.norm() * f.norm() * g.norm() * g.norm();
  return Trial{(lhs - rhs).norm() / scale, "deg " + std::to_string(f.degree())};
}

std::optional<Trial> power_estimates(Rng& rng) {
  const Quaternion p = random_quaternion(rng);
  const Quaternion q = random_quaternion(rng);
  int n = rng.uniform_int(1, 20);
  if (rng.uniform() < 0.5) n = -n;
  double bound;
  if (n > 0) {
    bound = std::pow(sigma(q, p), n);
  } else {
    const double t = tau(q, p);
    if (t <= 1e-3) return std::nullopt;
    bound = std::pow(t, n);
  }
  const double value = norm(star_power_value(p, n, q));
  // Relative excess over the bound, reported against 1e-10 by rescaling.
  return Trial{std::max(0.0, value / bound - 1.0) * 1e2, "n=" + std::to_string(n) + " q=" + to_string(q)};
}

struct Entry {
  const char* name;
  TrialFn fn;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {"product_formula", product_formula},
      {"representation", representation},
      {"reciprocal", reciprocal_identity},
      {"transport", transport_identity},
      {"conj_reversal", conj_reversal},
      {"associativity", associativity},
      {"symmetrization_product", symmetrization_product},
      {"power_estimates", power_estimates},
  };
  return entries;
}

}  // namespace

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : registry()) out.emplace_back(e.name);
    return out;
  }();
  return names;
}

SweepReport identity_sweep(std::string_view which, int trials, std::uint64_t seed) {
  const auto& entries = registry();
  const auto it = std::find_if(entries.begin(), entries.end(), [&](const Entry& e) { return which == e.name; });
  if (it == entries.end()) throw UnknownIdentity("no identity named '" + std::string(which) + "'");
  if (trials < 0) throw InvalidArgument("trials must be nonnegative");
  SweepReport report;
  report.identity = it->name;
  report.trials = trials;
  report.seed = seed;
  report.tolerance = 1e-8;
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    std::optional<Trial> trial;
    try {
      trial = it->fn(rng);
    } catch (const Error& e) {
      trial = Trial{kHuge, std::string(e.kind()) + ": " + e.what()};
    }
    if (!trial) continue;
    if (trial->residual > report.worst_residual || !std::isfinite(trial->residual)) {
      report.worst_residual = std::isfinite(trial->residual) ? trial->residual : kHuge;
    }
    if (!(trial->residual <= report.tolerance) && report.passed) {
      report.passed = false;
      report.failing_instance = "trial " + std::to_string(t) + ": " + trial->instance;
    }
  }
  return report;
}

}  // namespace sliceq
