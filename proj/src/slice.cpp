#include "sliceq/slice.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace sliceq {

SplitBasis::SplitBasis(const UnitImaginary& unit) : i_(unit), j_(UnitImaginary::j()) {
  const Quaternion& I = unit.value();
  for (const Quaternion& e : std::array{kJ, kK, kI}) {
    const Quaternion r = e - I * dot(e, I);
    if (norm(r) >= 0.5) {
      j_ = UnitImaginary::from_direction(r);
      break;
    }
  }
  ij_ = mul(I, j_.value());
}

std::pair<std::complex<double>, std::complex<double>> SplitBasis::split(const Quaternion& v) const noexcept {
  return {{v.x0, dot(v, i_.value())}, {dot(v, j_.value()), dot(v, ij_)}};
}

Quaternion SplitBasis::join(std::complex<double> f, std::complex<double> g) const noexcept {
  return Quaternion(f.real()) + i_.value() * f.imag() + j_.value() * g.real() + ij_ * g.imag();
}

bool same_line(const Quaternion& q, const Quaternion& p) noexcept {
  const double rq = imag_norm(q);
  const double rp = imag_norm(p);
  if (rq <= tol::kUnit || rp <= tol::kUnit) return true;
  const Quaternion uq = q.imag() * (1.0 / rq);
  const Quaternion up = p.imag() * (1.0 / rp);
  return norm(uq - up) <= tol::kSameLine || norm(uq + up) <= tol::kSameLine;
}

double omega(const Quaternion& q, const Quaternion& p) noexcept {
  return std::hypot(q.x0 - p.x0, imag_norm(q) + imag_norm(p));
}

double tau_off_line(const Quaternion& q, const Quaternion& p) noexcept {
  return std::hypot(q.x0 - p.x0, imag_norm(q) - imag_norm(p));
}

double sigma(const Quaternion& q, const Quaternion& p) noexcept {
  return same_line(q, p) ? norm(q - p) : omega(q, p);
}

double tau(const Quaternion& q, const Quaternion& p) noexcept {
  return same_line(q, p) ? norm(q - p) : tau_off_line(q, p);
}

std::string_view to_string(RegionKind kind) noexcept {
  switch (kind) {
    case RegionKind::SigmaBall: return "sigma_ball";
    case RegionKind::OmegaBall: return "omega_ball";
    case RegionKind::TauSet: return "tau_set";
    case RegionKind::Shell: return "shell";
    case RegionKind::OpenShell: return "open_shell";
  }
  return "sigma_ball";
}

RegionKind parse_region_kind(std::string_view text) {
  for (RegionKind k : {RegionKind::SigmaBall, RegionKind::OmegaBall, RegionKind::TauSet, RegionKind::Shell,
                       RegionKind::OpenShell}) {
    if (text == to_string(k)) return k;
  }
  throw UnsupportedRegionKind("unknown region kind '" + std::string(text) + "'");
}

void RegionSpec::validate() const {
  if (!is_finite(center)) throw NonFinite("region center is not finite");
  const bool shell = kind == RegionKind::Shell || kind == RegionKind::OpenShell;
  if (std::isnan(inner) || std::isnan(outer)) throw InvalidArgument("region radius is NaN");
  if (shell) {
    if (!(inner >= 0.0 && inner < outer)) throw InvalidArgument("shell radii must satisfy 0 <= R1 < R2");
  } else if (!(outer > 0.0)) {
    throw InvalidArgument("ball radius must be positive");
  }
}

bool region_contains(const RegionSpec& region, const Quaternion& q) {
  const Quaternion& p = region.center;
  switch (region.kind) {
    case RegionKind::SigmaBall: return sigma(q, p) < region.outer;
    case RegionKind::OmegaBall: return omega(q, p) < region.outer;
    case RegionKind::TauSet: return tau(q, p) < region.outer;
    case RegionKind::Shell: return tau(q, p) > region.inner && sigma(q, p) < region.outer;
    case RegionKind::OpenShell: return omega(q, p) < region.outer && tau_off_line(q, p) > region.inner;
  }
  return false;
}

Quaternion represent(const Quaternion& valz, const Quaternion& valzbar, const UnitImaginary& I,
                     const UnitImaginary& J) noexcept {
  const Quaternion ji = mul(J.value(), I.value());
  return mul(kOne - ji, valz) * 0.5 + mul(kOne + ji, valzbar) * 0.5;
}

std::string_view to_string(BallRegime regime) noexcept {
  switch (regime) {
    case BallRegime::Disc: return "disc";
    case BallRegime::DiscAndOmega: return "disc_and_omega";
    case BallRegime::EuclideanBall: return "euclidean_ball";
  }
  return "disc";
}

BallRegime ball_regime(const Quaternion& center, double radius) noexcept {
  const double y = imag_norm(center);
  if (y <= tol::kUnit) return BallRegime::EuclideanBall;
  return radius <= y ? BallRegime::Disc : BallRegime::DiscAndOmega;
}

namespace {

constexpr double kPi = std::numbers::pi;

// Point with real part `a` and imaginary part `b` along cos(psi) I + sin(psi) J.
struct ViewBasis {
  Quaternion I;
  Quaternion J;
};

ViewBasis view_basis(const UnitImaginary& unit) {
  const Quaternion& I = unit.value();
  for (const Quaternion& e : std::array{kJ, kI, kK}) {
    const Quaternion r = e - I * dot(e, I);
    if (norm(r) >= 0.5) return {I, r / norm(r)};
  }
  return {I, kJ};
}

Quaternion revolve(double a, double b, double psi, const ViewBasis& basis) {
  return Quaternion(a) + basis.I * (b * std::cos(psi)) + basis.J * (b * std::sin(psi));
}

void euclidean_sphere(double x, double radius, int count, const ViewBasis& basis, std::vector<Quaternion>& out) {
  const double golden = kPi * (3.0 - std::sqrt(5.0));
  for (int k = 0; k < count; ++k) {
    const double h = 1.0 - 2.0 * (k + 0.5) / count;
    const double r = std::sqrt(std::max(0.0, 1.0 - h * h));
    out.push_back(revolve(x + radius * h, radius * r, golden * k, basis));
  }
}

void slice_circle(double x, double y, double radius, int count, const ViewBasis& basis,
                  std::vector<Quaternion>& out) {
  for (int k = 0; k < count; ++k) {
    const double theta = 2.0 * kPi * k / count;
    out.push_back(Quaternion(x + radius * std::cos(theta)) + basis.I * (y + radius * std::sin(theta)));
  }
}

}  // namespace

std::vector<Quaternion> ball_boundary_points(const RegionSpec& region, int count) {
  if (region.kind != RegionKind::SigmaBall && region.kind != RegionKind::TauSet) {
    throw UnsupportedRegionKind("boundary samples exist for sigma_ball and tau_set only, got " +
                                std::string(to_string(region.kind)));
  }
  if (count < 8) throw InvalidArgument("boundary sampling needs count >= 8");
  region.validate();
  const double radius = region.outer;
  if (!std::isfinite(radius)) throw InvalidArgument("boundary of an unbounded region");

  const Quaternion& p = region.center;
  const ViewBasis basis = view_basis(slice_unit_or(p, UnitImaginary::i()));
  const double x = p.x0;
  const double y = imag_norm(p);
  std::vector<Quaternion> out;
  out.reserve(static_cast<std::size_t>(count));

  if (y <= tol::kUnit) {
    euclidean_sphere(x, radius, count, basis, out);
    return out;
  }
  const bool sigma_kind = region.kind == RegionKind::SigmaBall;
  if (sigma_kind && radius <= y) {
    slice_circle(x, y, radius, count, basis, out);
    return out;
  }

  // Slice circle plus a surface of revolution of the off-line branch:
  // sigma: (a - x)^2 + (b + y)^2 = R^2,  tau: (a - x)^2 + (b - y)^2 = R^2,  b > 0.
  const int on_slice = count / 2;
  const int off_slice = count - on_slice;
  slice_circle(x, y, radius, on_slice, basis, out);

  const double shift = sigma_kind ? -y : y;
  // Arc parameter range keeping b = shift + R sin(phi) > 0.
  const double s0 = std::clamp(-shift / radius, -1.0, 1.0);
  const double phi_lo = std::asin(s0);
  const double phi_hi = kPi - phi_lo;
  int n_psi = std::max(4, static_cast<int>(std::lround(std::sqrt(2.0 * off_slice))));
  if (n_psi % 2 != 0) ++n_psi;  // keeps psi away from pi, where tau switches branch
  const int n_phi = (off_slice + n_psi - 1) / n_psi;
  for (int k = 0; k < off_slice; ++k) {
    const int a_idx = k / n_psi;
    const int b_idx = k % n_psi;
    const double phi = phi_lo + (phi_hi - phi_lo) * (a_idx + 0.5) / n_phi;
    const double psi = 2.0 * kPi * (b_idx + 0.5) / n_psi;
    out.push_back(revolve(x + radius * std::cos(phi), shift + radius * std::sin(phi), psi, basis));
  }
  return out;
}

}  // namespace sliceq
