#include "sliceq/kernels.hpp"

namespace sliceq::kernels::detail {
namespace {

void mul_batch_scalar(const Quaternion* a, const Quaternion* b, Quaternion* out, std::size_t count) {
  for (std::size_t n = 0; n < count; ++n) out[n] = mul(a[n], b[n]);
}

void star_convolve_scalar(const Quaternion* f, std::size_t nf, const Quaternion* g, std::size_t ng,
                          Quaternion* out) {
  if (nf == 0 || ng == 0) return;
  for (std::size_t n = 0; n + 1 < nf + ng; ++n) {
    Quaternion acc;
    const std::size_t lo = n + 1 > ng ? n + 1 - ng : 0;
    const std::size_t hi = n < nf - 1 ? n : nf - 1;
    for (std::size_t k = lo; k <= hi; ++k) acc += mul(f[k], g[n - k]);
    out[n] = acc;
  }
}

void horner_batch_scalar(const Quaternion* coeffs, std::size_t ncoeffs, const Quaternion* points,
                         Quaternion* out, std::size_t npoints) {
  for (std::size_t m = 0; m < npoints; ++m) {
    Quaternion acc;
    for (std::size_t n = ncoeffs; n-- > 0;) acc = coeffs[n] + mul(points[m], acc);
    out[m] = acc;
  }
}

constexpr KernelTable kScalar{mul_batch_scalar, star_convolve_scalar, horner_batch_scalar};

}  // namespace

const KernelTable& scalar_table() noexcept { return kScalar; }

}  // namespace sliceq::kernels::detail
