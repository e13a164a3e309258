#pragma once

#include <cstddef>

// Dense inner-loop primitives behind a runtime-selected backend.
// The scalar versions are the reference; vector backends must agree with
// them to reassociation tolerance (FMA changes rounding, so not bitwise).
namespace nnklms::simd {

enum class Backend { scalar, avx2 };

// Backend in effect. Resolved once from CPU features; the NNKLMS_SIMD
// environment variable (scalar|avx2|auto) overrides detection, and
// force_backend() overrides both.
Backend active_backend();
bool backend_available(Backend b);
const char* backend_name(Backend b);

// Pins the backend. Returns false and leaves state unchanged when this
// host cannot run it.
bool force_backend(Backend b);

double dot(const double* a, const double* b, std::size_t n);
double squared_distance(const double* a, const double* b, std::size_t n);
// y := y + alpha * x
void axpy(double alpha, const double* x, double* y, std::size_t n);

namespace detail {
double dot_scalar(const double* a, const double* b, std::size_t n);
double squared_distance_scalar(const double* a, const double* b, std::size_t n);
void axpy_scalar(double alpha, const double* x, double* y, std::size_t n);
double dot_avx2(const double* a, const double* b, std::size_t n);
double squared_distance_avx2(const double* a, const double* b, std::size_t n);
void axpy_avx2(double alpha, const double* x, double* y, std::size_t n);
}  // namespace detail

}  // namespace nnklms::simd
