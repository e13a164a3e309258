#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "nnklms/rng.hpp"
#include "nnklms/simd.hpp"
#include "support.hpp"

using namespace nnklms;

namespace {

std::vector<double> random_vec(Rng& rng, std::size_t n) {
  std::vector<double> v(n);
  for (double& x : v) x = rng.uniform(-2.0, 2.0);
  return v;
}

}  // namespace

TEST_CASE("scalar kernels match straightforward math") {
  const std::vector<double> a = {1.0, 2.0, -3.0};
  const std::vector<double> b = {0.5, -1.0, 4.0};
  CHECK(simd::detail::dot_scalar(a.data(), b.data(), 3) == doctest::Approx(-13.5));
  CHECK(simd::detail::squared_distance_scalar(a.data(), b.data(), 3) ==
        doctest::Approx(0.25 + 9.0 + 49.0));
  std::vector<double> y = {1.0, 1.0, 1.0};
  simd::detail::axpy_scalar(2.0, a.data(), y.data(), 3);
  CHECK(y == std::vector<double>{3.0, 5.0, -5.0});
}

TEST_CASE("zero length is a no-op") {
  CHECK(simd::dot(nullptr, nullptr, 0) == 0.0);
  CHECK(simd::squared_distance(nullptr, nullptr, 0) == 0.0);
  simd::axpy(1.0, nullptr, nullptr, 0);
}

TEST_CASE("vector backend agrees with scalar on every remainder length") {
  if (!simd::backend_available(simd::Backend::avx2)) {
    MESSAGE("avx2 unavailable on this host, dispatch equivalence skipped");
    return;
  }
  Rng rng(42);
  for (std::size_t n = 1; n <= 67; ++n) {
    const auto a = random_vec(rng, n);
    const auto b = random_vec(rng, n);
    const double d_s = simd::detail::dot_scalar(a.data(), b.data(), n);
    const double d_v = simd::detail::dot_avx2(a.data(), b.data(), n);
    CHECK(testsup::rel_near(d_v, d_s, 1e-12));
    const double q_s = simd::detail::squared_distance_scalar(a.data(), b.data(), n);
    const double q_v = simd::detail::squared_distance_avx2(a.data(), b.data(), n);
    CHECK(testsup::rel_near(q_v, q_s, 1e-12));
    auto y_s = random_vec(rng, n);
    auto y_v = y_s;
    simd::detail::axpy_scalar(0.75, a.data(), y_s.data(), n);
    simd::detail::axpy_avx2(0.75, a.data(), y_v.data(), n);
    for (std::size_t i = 0; i < n; ++i) CHECK(testsup::rel_near(y_v[i], y_s[i], 1e-13));
  }
}

TEST_CASE("force_backend pins and reports availability") {
  const simd::Backend before = simd::active_backend();
  CHECK(simd::force_backend(simd::Backend::scalar));
  CHECK(simd::active_backend() == simd::Backend::scalar);
  if (simd::backend_available(simd::Backend::avx2)) {
    CHECK(simd::force_backend(simd::Backend::avx2));
    CHECK(simd::active_backend() == simd::Backend::avx2);
  } else {
    CHECK_FALSE(simd::force_backend(simd::Backend::avx2));
    CHECK(simd::active_backend() == simd::Backend::scalar);
  }
  simd::force_backend(before);
}

TEST_CASE("dispatched entry points honor the forced backend") {
  const simd::Backend before = simd::active_backend();
  Rng rng(7);
  const auto a = random_vec(rng, 33);
  const auto b = random_vec(rng, 33);
  REQUIRE(simd::force_backend(simd::Backend::scalar));
  const double scalar_dot = simd::dot(a.data(), b.data(), 33);
  CHECK(scalar_dot == simd::detail::dot_scalar(a.data(), b.data(), 33));
  if (simd::force_backend(simd::Backend::avx2)) {
    const double vec_dot = simd::dot(a.data(), b.data(), 33);
    CHECK(vec_dot == simd::detail::dot_avx2(a.data(), b.data(), 33));
    CHECK(testsup::rel_near(vec_dot, scalar_dot, 1e-12));
  }
  simd::force_backend(before);
}

TEST_CASE("backend names") {
  CHECK(std::string(simd::backend_name(simd::Backend::scalar)) == "scalar");
  CHECK(std::string(simd::backend_name(simd::Backend::avx2)) == "avx2");
}
