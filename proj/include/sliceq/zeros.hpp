#pragma once

// Zero sets of quaternionic polynomials: candidate spheres from the
// symmetrization, per-sphere classification, and the factorization
// f = [(q-x)^2 + y^2]^m (q - p_1) * ... * (q - p_n) * g.

#include <complex>
#include <vector>

#include "sliceq/complex_poly.hpp"
#include "sliceq/polynomial.hpp"

namespace sliceq {

struct ComplexRoot {
  Complex value;
  int multiplicity = 1;
};

/// Roots of a real polynomial, sorted by (real, imag). Nonreal roots come in
/// conjugate pairs of equal multiplicity; real roots have imag exactly 0.
struct ComplexRootSet {
  std::vector<ComplexRoot> roots;
  int total_multiplicity() const noexcept;
};

struct RootOptions {
  int max_iterations = 200;
  double cluster_radius = tol::kCluster;
  double valuation_tolerance = tol::kValuation;
};

/// Aberth-Ehrlich simultaneous iteration from a perturbed circle at the
/// Cauchy radius, followed by valuation-verified cluster merging.
/// Throws NoConvergence if a root fails the residual test
/// |d(r)| <= 1e-8 ||d|| (1 + |r|)^deg.
ComplexRootSet real_poly_roots(const RealPolynomial& d, const RootOptions& options = {});

/// One sphere per conjugate pair (y > 0) or real root (y = 0), with the
/// complex multiplicity of x + iy. Sorted by (x, y).
struct RootSphere {
  Sphere sphere;
  int multiplicity = 0;
};
std::vector<RootSphere> root_spheres(const ComplexRootSet& roots);

enum class SphereZeroKind { NoZero, WholeSphere, Isolated };

struct SphereClassification {
  SphereZeroKind kind = SphereZeroKind::NoZero;
  Quaternion point;  // meaningful for Isolated
};

/// Decides how f vanishes on a nondegenerate sphere using the values at
/// x + iy and x - iy. `tolerance` scales the evaluation size sum |a_n| |q|^n.
SphereClassification sphere_classify(const QPolynomial& f, const Sphere& s, double tolerance = tol::kZeroVerify);

/// m_f(p): the largest n with f = (q - p)^{*n} * g, computed as the smaller
/// complex valuation of the two split components on p's slice.
int classical_multiplicity(const QPolynomial& f, const Quaternion& p, double tolerance = tol::kValuation);

struct SphericalZero {
  Sphere sphere;
  int multiplicity = 0;  // 2m
};

struct IsolatedZero {
  Quaternion point;
  int classical = 0;
  int isolated = 0;
  std::vector<Quaternion> chain;  // p_1 = point, ..., p_n
};

/// Local factorization of f at one sphere: f = factor^m * chain * residual.
struct SphereFactorization {
  Sphere sphere;
  int spherical_exponent = 0;  // m
  std::vector<Quaternion> chain;
  QPolynomial residual;
};

struct ZeroReport {
  std::vector<SphericalZero> spherical;
  std::vector<IsolatedZero> isolated;
  std::vector<SphereFactorization> factorizations;

  /// Sum of spherical and isolated multiplicities.
  int accounted_degree() const noexcept;
};

struct ZeroOptions {
  double verify_tolerance = tol::kZeroVerify;
  RootOptions roots;
};

ZeroReport analyze_zeros(const QPolynomial& f, const ZeroOptions& options = {});

/// factor^m * (q - chain_1) * ... * (q - chain_n) * residual
QPolynomial reconstruct(const SphereFactorization& factorization);

}  // namespace sliceq
