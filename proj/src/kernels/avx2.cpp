// AVX2/FMA variants. Only the functions below carry the avx2 target
// attribute; the file itself is compiled for the baseline ISA so that inline
// helpers pulled in from headers stay portable.
#include "sliceq/kernels.hpp"

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define SLICEQ_HAVE_AVX2_KERNELS 1
#include <immintrin.h>
#endif

namespace sliceq::kernels::detail {

#ifdef SLICEQ_HAVE_AVX2_KERNELS
namespace {

#define SLICEQ_AVX2 __attribute__((target("avx2,fma")))

static_assert(sizeof(Quaternion) == 4 * sizeof(double));

// One quaternion per register, lanes (x0, x1, x2, x3). The Hamilton product
// a*b is a0*(b0,b1,b2,b3) + a1*(-b1,b0,-b3,b2) + a2*(-b2,b3,b0,-b1)
// + a3*(-b3,-b2,b1,b0).
struct Signs {
  __m256d s1, s2, s3;
};

SLICEQ_AVX2 inline Signs make_signs() {
  return {_mm256_setr_pd(-0.0, 0.0, -0.0, 0.0), _mm256_setr_pd(-0.0, 0.0, 0.0, -0.0),
          _mm256_setr_pd(-0.0, -0.0, 0.0, 0.0)};
}

SLICEQ_AVX2 inline __m256d fmadd_product(const double* a, __m256d b, __m256d acc, const Signs& s) {
  const __m256d p1 = _mm256_xor_pd(_mm256_permute_pd(b, 0b0101), s.s1);
  const __m256d p2 = _mm256_xor_pd(_mm256_permute4x64_pd(b, 0x4E), s.s2);
  const __m256d p3 = _mm256_xor_pd(_mm256_permute4x64_pd(b, 0x1B), s.s3);
  acc = _mm256_fmadd_pd(_mm256_broadcast_sd(a + 0), b, acc);
  acc = _mm256_fmadd_pd(_mm256_broadcast_sd(a + 1), p1, acc);
  acc = _mm256_fmadd_pd(_mm256_broadcast_sd(a + 2), p2, acc);
  acc = _mm256_fmadd_pd(_mm256_broadcast_sd(a + 3), p3, acc);
  return acc;
}

SLICEQ_AVX2 void mul_batch_avx2(const Quaternion* a, const Quaternion* b, Quaternion* out, std::size_t count) {
  const Signs s = make_signs();
  for (std::size_t n = 0; n < count; ++n) {
    const __m256d vb = _mm256_loadu_pd(&b[n].x0);
    _mm256_storeu_pd(&out[n].x0, fmadd_product(&a[n].x0, vb, _mm256_setzero_pd(), s));
  }
}

SLICEQ_AVX2 void star_convolve_avx2(const Quaternion* f, std::size_t nf, const Quaternion* g, std::size_t ng,
                                    Quaternion* out) {
  if (nf == 0 || ng == 0) return;
  const Signs s = make_signs();
  for (std::size_t n = 0; n + 1 < nf + ng; ++n) {
    __m256d acc = _mm256_setzero_pd();
    const std::size_t lo = n + 1 > ng ? n + 1 - ng : 0;
    const std::size_t hi = n < nf - 1 ? n : nf - 1;
    for (std::size_t k = lo; k <= hi; ++k) {
      acc = fmadd_product(&f[k].x0, _mm256_loadu_pd(&g[n - k].x0), acc, s);
    }
    _mm256_storeu_pd(&out[n].x0, acc);
  }
}

SLICEQ_AVX2 void horner_batch_avx2(const Quaternion* coeffs, std::size_t ncoeffs, const Quaternion* points,
                                   Quaternion* out, std::size_t npoints) {
  const Signs s = make_signs();
  for (std::size_t m = 0; m < npoints; ++m) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t n = ncoeffs; n-- > 0;) {
      acc = fmadd_product(&points[m].x0, acc, _mm256_loadu_pd(&coeffs[n].x0), s);
    }
    _mm256_storeu_pd(&out[m].x0, acc);
  }
}

constexpr KernelTable kAvx2{mul_batch_avx2, star_convolve_avx2, horner_batch_avx2};

}  // namespace

const KernelTable* avx2_table() noexcept { return &kAvx2; }
#else
const KernelTable* avx2_table() noexcept { return nullptr; }
#endif

}  // namespace sliceq::kernels::detail
