#pragma once

// Complex polynomial helpers for slice restrictions: once a slice R + IR is
// fixed, N(z) = N1(z) + N2(z) J with N1, N2 complex polynomials.

#include <complex>
#include <span>
#include <vector>

#include "sliceq/polynomial.hpp"
#include "sliceq/slice.hpp"

namespace sliceq {

using Complex = std::complex<double>;
using ComplexPoly = std::vector<Complex>;  // ascending coefficients

Complex eval(std::span<const Complex> p, Complex z) noexcept;
/// sum |c_n| |z|^n
double eval_scale(std::span<const Complex> p, double abs_z) noexcept;
bool is_zero_poly(std::span<const Complex> p) noexcept;

/// Divides by (z - c): returns the quotient; `remainder` receives p(c).
ComplexPoly synthetic_divide(std::span<const Complex> p, Complex c, Complex& remainder);

/// Number of times (z - c) divides p: repeated synthetic division while the
/// remainder stays within `tolerance` times the evaluation scale of the
/// current dividend at |c|. Returns -1 for the zero polynomial.
int valuation(std::span<const Complex> p, Complex c, double tolerance = tol::kValuation);

/// Coefficients of p in powers of (z - c).
ComplexPoly taylor_shift(std::span<const Complex> p, Complex c);

ComplexPoly to_complex_poly(const RealPolynomial& d);

/// Slice restriction of f: the complex polynomials (F, G) with
/// f(z) = F(z) + G(z) J for z in R + IR.
std::pair<ComplexPoly, ComplexPoly> split_polynomial(const QPolynomial& f, const SplitBasis& basis);

}  // namespace sliceq
