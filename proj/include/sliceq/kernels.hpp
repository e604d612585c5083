#pragma once

// Data-parallel inner loops of the quaternion algebra. Every kernel has a
// scalar reference implementation and, where the CPU supports it, an AVX2/FMA
// variant. The variant is picked once at runtime; SLICEQ_KERNELS=scalar|avx2
// in the environment forces a choice.

#include <cstddef>
#include <span>
#include <string_view>

#include "sliceq/quaternion.hpp"

namespace sliceq::kernels {

enum class Backend { Scalar, Avx2 };

struct KernelTable {
  // out[n] = a[n] * b[n]
  void (*mul_batch)(const Quaternion* a, const Quaternion* b, Quaternion* out, std::size_t count);
  // out[n] = sum_k f[k] * g[n-k], out has nf + ng - 1 entries.
  void (*star_convolve)(const Quaternion* f, std::size_t nf, const Quaternion* g, std::size_t ng,
                        Quaternion* out);
  // out[m] = sum_n points[m]^n * coeffs[n] by nested evaluation.
  void (*horner_batch)(const Quaternion* coeffs, std::size_t ncoeffs, const Quaternion* points,
                       Quaternion* out, std::size_t npoints);
};

bool available(Backend backend) noexcept;
const KernelTable& table(Backend backend);
Backend active() noexcept;
std::string_view name(Backend backend) noexcept;

void mul_batch(std::span<const Quaternion> a, std::span<const Quaternion> b, std::span<Quaternion> out);
void star_convolve(std::span<const Quaternion> f, std::span<const Quaternion> g, std::span<Quaternion> out);
void horner_batch(std::span<const Quaternion> coeffs, std::span<const Quaternion> points,
                  std::span<Quaternion> out);

namespace detail {
const KernelTable& scalar_table() noexcept;
// nullptr when the translation unit was built without x86 intrinsics.
const KernelTable* avx2_table() noexcept;
}  // namespace detail

}  // namespace sliceq::kernels
