#include "nnklms/simd.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace nnklms::simd {

namespace {

bool cpu_has_avx2() {
#if defined(NNKLMS_HAVE_AVX2)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend resolve_initial() {
  if (const char* env = std::getenv("NNKLMS_SIMD")) {
    if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
    if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2()) return Backend::avx2;
    // anything else, including an unavailable request, falls through to auto
  }
  return cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
}

std::atomic<Backend>& state() {
  static std::atomic<Backend> current{resolve_initial()};
  return current;
}

}  // namespace

Backend active_backend() { return state().load(std::memory_order_relaxed); }

bool backend_available(Backend b) {
  return b == Backend::scalar || (b == Backend::avx2 && cpu_has_avx2());
}

const char* backend_name(Backend b) {
  return b == Backend::avx2 ? "avx2" : "scalar";
}

bool force_backend(Backend b) {
  if (!backend_available(b)) return false;
  state().store(b, std::memory_order_relaxed);
  return true;
}

double dot(const double* a, const double* b, std::size_t n) {
#if defined(NNKLMS_HAVE_AVX2)
  if (active_backend() == Backend::avx2) return detail::dot_avx2(a, b, n);
#endif
  return detail::dot_scalar(a, b, n);
}

double squared_distance(const double* a, const double* b, std::size_t n) {
#if defined(NNKLMS_HAVE_AVX2)
  if (active_backend() == Backend::avx2) return detail::squared_distance_avx2(a, b, n);
#endif
  return detail::squared_distance_scalar(a, b, n);
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
#if defined(NNKLMS_HAVE_AVX2)
  if (active_backend() == Backend::avx2) return detail::axpy_avx2(alpha, x, y, n);
#endif
  detail::axpy_scalar(alpha, x, y, n);
}

}  // namespace nnklms::simd
