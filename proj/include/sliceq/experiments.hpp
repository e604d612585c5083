#pragma once

// Randomized verification sweeps and the Casorati-Weierstrass density scan.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sliceq/laurent.hpp"
#include "sliceq/random.hpp"

namespace sliceq {

struct CoefficientGenerator {
  enum class Rule { ReciprocalFactorial, Geometric, Custom };
  enum class Direction { Negative, Nonnegative };

  Rule rule = Rule::ReciprocalFactorial;
  Direction direction = Direction::Negative;
  double ratio = 0.5;                // geometric(r)
  Quaternion scale = kOne;           // c
  std::vector<Quaternion> custom;    // a_0, a_{-1}, ... (or a_0, a_1, ...)

  /// c/m!, r^m c or custom[m], for m = 0 .. truncation.
  std::vector<Quaternion> magnitudes(int truncation) const;
  /// Series about p: a_{-m} (or a_m) from magnitudes(truncation). The
  /// negative tail is never marked exact.
  LaurentExpansion series(const Quaternion& p, int truncation) const;
  std::string name() const;
};

/// "reciprocal_factorial", "geometric" (ratio 0.5) or "geometric:<r>".
CoefficientGenerator parse_generator(std::string_view text);

struct Witness {
  Quaternion target;
  Quaternion point;
  double residual = 0.0;
  bool hit = false;
};

struct ScanParameters {
  Quaternion center;
  double radius = 0.5;
  double eps = 0.1;
  int truncation = 40;
  int targets = 100;
  std::uint64_t seed = 0;
  int budget = 10000;
  std::string rule;
};

struct DensityScanResult {
  int targets = 0;
  int hits = 0;
  std::vector<Witness> witnesses;
  ScanParameters parameters;
  double hit_fraction() const noexcept { return targets > 0 ? static_cast<double>(hits) / targets : 0.0; }
};

struct ScanOptions {
  int budget = 10000;
  int random_starts = 200;
  int refined_candidates = 8;
  /// Extra starting points tried before the random ones (target index -> points).
  std::vector<std::vector<Quaternion>> hints;
  /// Explicit targets; when empty, targets are uniform in the radius-2 ball.
  std::vector<Quaternion> targets;
};

/// Searches Sigma(p, 0, r) off p's sphere for |f(q) - v| < eps, f the
/// truncated series. Deterministic for a given seed.
DensityScanResult casorati_scan(const CoefficientGenerator& gen, const Quaternion& p, double r, double eps,
                                int ntargets, std::uint64_t seed, int truncation = 40, const ScanOptions& options = {});

struct SweepReport {
  std::string identity;
  int trials = 0;
  std::uint64_t seed = 0;
  bool passed = true;
  double worst_residual = 0.0;  // already divided by the per-trial scale
  double tolerance = 0.0;
  std::optional<std::string> failing_instance;
};

const std::vector<std::string>& identity_names();
/// Throws UnknownIdentity for names outside identity_names().
SweepReport identity_sweep(std::string_view which, int trials, std::uint64_t seed);

}  // namespace sliceq
