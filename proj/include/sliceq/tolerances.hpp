#pragma once

// Numerical thresholds shared across modules. Each is applied in exactly the
// form documented next to it; callers needing other values pass them
// explicitly through the option structs of the individual modules.
namespace sliceq::tol {

// |Re I| and | |I| - 1 | bound for accepting a unit imaginary.
inline constexpr double kUnit = 1e-12;
// Sphere membership and chain distinctness.
inline constexpr double kGeom = 1e-10;
// Two slice units are "the same line" when they agree up to sign within this.
inline constexpr double kSameLine = 1e-10;
// Leading polynomial coefficients with norm <= kTrim * (1 + max norm) are dropped.
inline constexpr double kTrim = 1e-13;
// Imaginary residue allowed in f*f^c, relative to 1 + ||f||^2.
inline constexpr double kSymmetrization = 1e-9;
// Remainder allowed by exact real division, relative to 1 + ||f||.
inline constexpr double kDivide = 1e-9;
// Residual accepted when verifying a reported zero, relative to the
// evaluation scale sum |a_n| |q|^n.
inline constexpr double kZeroVerify = 1e-8;
// Synthetic-division remainder threshold used for root valuations.
inline constexpr double kValuation = 1e-8;
// |D(q)| below this fraction of its evaluation scale is treated as a pole.
inline constexpr double kPoleEval = 1e-12;
// Root clusters closer than kCluster * (1 + |root|) are merged.
inline constexpr double kCluster = 1e-7;

}  // namespace sliceq::tol
