#pragma once

// Slices R + IR, the sigma/tau/omega gauges and the convergence regions built
// from them.

#include <complex>
#include <limits>
#include <string_view>
#include <utility>
#include <vector>

#include "sliceq/quaternion.hpp"

namespace sliceq {

/// Basis (1, I, J, IJ) of H over the slice R + IR, with J orthogonal to I.
/// Every quaternion v splits as v = F + G J with F, G in R + IR.
class SplitBasis {
 public:
  /// J is the first of {j, k, i}, Gram-Schmidt corrected against I, whose
  /// corrected norm is at least 1/2.
  explicit SplitBasis(const UnitImaginary& unit);

  const UnitImaginary& I() const noexcept { return i_; }
  const UnitImaginary& J() const noexcept { return j_; }

  std::pair<std::complex<double>, std::complex<double>> split(const Quaternion& v) const noexcept;
  Quaternion join(std::complex<double> f, std::complex<double> g) const noexcept;

 private:
  UnitImaginary i_;
  UnitImaginary j_;
  Quaternion ij_;
};

/// Both points real, or slice units equal up to sign within tol::kSameLine.
bool same_line(const Quaternion& q, const Quaternion& p) noexcept;

double omega(const Quaternion& q, const Quaternion& p) noexcept;
double sigma(const Quaternion& q, const Quaternion& p) noexcept;
double tau(const Quaternion& q, const Quaternion& p) noexcept;
/// The off-line branch of tau evaluated everywhere; its sublevel sets
/// {tau_off <= R} are the closures of T(p, R).
double tau_off_line(const Quaternion& q, const Quaternion& p) noexcept;

enum class RegionKind { SigmaBall, OmegaBall, TauSet, Shell, OpenShell };

std::string_view to_string(RegionKind kind) noexcept;
RegionKind parse_region_kind(std::string_view text);

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Balls and tau-sets use `outer` as their radius; shells use (inner, outer).
struct RegionSpec {
  RegionKind kind = RegionKind::SigmaBall;
  Quaternion center;
  double inner = 0.0;
  double outer = kInfinity;

  /// Throws InvalidArgument unless 0 <= inner < outer (shells) or outer > 0.
  void validate() const;
};

/// Strict-inequality membership; boundary points are outside.
bool region_contains(const RegionSpec& region, const Quaternion& q);

/// Value at x + Jy of any regular function from its values at x + Iy and
/// x - Iy:  (1 - JI)/2 valz + (1 + JI)/2 valzbar.
Quaternion represent(const Quaternion& valz, const Quaternion& valzbar, const UnitImaginary& I,
                     const UnitImaginary& J) noexcept;

/// Shape of a sigma-ball Sigma(p, R).
enum class BallRegime {
  Disc,            // R <= |Im p|: a disc in p's slice
  DiscAndOmega,    // 0 < |Im p| < R: slice disc joined to Omega(p, R)
  EuclideanBall,   // Im p = 0
};

std::string_view to_string(BallRegime regime) noexcept;
BallRegime ball_regime(const Quaternion& center, double radius) noexcept;

/// Samples of the level set sigma(q, p) = R (or tau(q, p) = R for tau-sets),
/// restricted to the 3-space spanned by 1, I and J where I is p's slice unit
/// (i for real p) and J a unit orthogonal to I, taken from j, then i, then k.
/// Whenever p lies in R + iR + jR the samples do too. Requires kind SigmaBall
/// or TauSet and count >= 8.
std::vector<Quaternion> ball_boundary_points(const RegionSpec& region, int count);

}  // namespace sliceq
