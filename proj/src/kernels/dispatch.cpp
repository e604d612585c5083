#include <cstdlib>
#include <string>

#include "sliceq/kernels.hpp"

namespace sliceq::kernels {

namespace {

bool cpu_has_avx2() noexcept {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend select() noexcept {
  const bool avx2 = available(Backend::Avx2);
  if (const char* forced = std::getenv("SLICEQ_KERNELS")) {
    const std::string want(forced);
    if (want == "scalar") return Backend::Scalar;
    if (want == "avx2" && avx2) return Backend::Avx2;
  }
  return avx2 ? Backend::Avx2 : Backend::Scalar;
}

void check_sizes(bool ok, const char* what) {
  if (!ok) throw InvalidArgument(std::string("kernel size mismatch: ") + what);
}

}  // namespace

bool available(Backend backend) noexcept {
  switch (backend) {
    case Backend::Scalar: return true;
    case Backend::Avx2: return detail::avx2_table() != nullptr && cpu_has_avx2();
  }
  return false;
}

const KernelTable& table(Backend backend) {
  if (!available(backend)) throw InvalidArgument("kernel backend not available on this CPU");
  return backend == Backend::Avx2 ? *detail::avx2_table() : detail::scalar_table();
}

Backend active() noexcept {
  static const Backend chosen = select();
  return chosen;
}

std::string_view name(Backend backend) noexcept { return backend == Backend::Avx2 ? "avx2" : "scalar"; }

void mul_batch(std::span<const Quaternion> a, std::span<const Quaternion> b, std::span<Quaternion> out) {
  check_sizes(a.size() == b.size() && out.size() == a.size(), "mul_batch");
  table(active()).mul_batch(a.data(), b.data(), out.data(), a.size());
}

void star_convolve(std::span<const Quaternion> f, std::span<const Quaternion> g, std::span<Quaternion> out) {
  if (f.empty() || g.empty()) {
    check_sizes(out.empty(), "star_convolve");
    return;
  }
  check_sizes(out.size() == f.size() + g.size() - 1, "star_convolve");
  table(active()).star_convolve(f.data(), f.size(), g.data(), g.size(), out.data());
}

void horner_batch(std::span<const Quaternion> coeffs, std::span<const Quaternion> points,
                  std::span<Quaternion> out) {
  check_sizes(points.size() == out.size(), "horner_batch");
  table(active()).horner_batch(coeffs.data(), coeffs.size(), points.data(), out.data(), points.size());
}

}  // namespace sliceq::kernels
