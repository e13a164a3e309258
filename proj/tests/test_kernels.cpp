#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "nnklms/kernels.hpp"
#include "nnklms/rng.hpp"
#include "support.hpp"

using namespace nnklms;

namespace {

std::vector<double> random_vec(Rng& rng, std::size_t n, double lo = -1.0, double hi = 1.0) {
  std::vector<double> v(n);
  for (double& x : v) x = rng.uniform(lo, hi);
  return v;
}

}  // namespace

TEST_CASE("gaussian fixed points") {
  KernelSpec g;  // gaussian sigma 1
  CHECK(kernel_eval(g, {0.3, 0.7}, {0.3, 0.7}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(testsup::near(kernel_eval(g, {0.0}, {1.0}), 0.6065306597126334, 1e-6));
  g.sigma = 2.0;
  CHECK(testsup::near(kernel_eval(g, {0.0}, {1.0}), std::exp(-1.0 / 8.0), 1e-12));
}

TEST_CASE("polynomial and linear fixed points") {
  KernelSpec p{KernelKind::polynomial, 1.0, 2, 1.0};
  CHECK(kernel_eval(p, {1.0, 2.0}, {0.0, 1.0}) == doctest::Approx(9.0));
  p.degree = 3;
  CHECK(kernel_eval(p, {1.0, 2.0}, {0.0, 1.0}) == doctest::Approx(27.0));
  KernelSpec lin{KernelKind::linear};
  CHECK(kernel_eval(lin, {1.0, 2.0}, {0.0, 1.0}) == doctest::Approx(2.0));
}

TEST_CASE("k(x,x) is exactly 1 for gaussians") {
  KernelSpec g;
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const auto x = random_vec(rng, 4);
    CHECK(testsup::near(kernel_eval(g, x, x), 1.0, 1e-12));
  }
}

TEST_CASE("symmetry is exact") {
  Rng rng(6);
  for (const KernelSpec spec :
       {KernelSpec{KernelKind::gaussian, 0.7, 2, 1.0},
        KernelSpec{KernelKind::polynomial, 1.0, 3, 0.5}, KernelSpec{KernelKind::linear}}) {
    for (int i = 0; i < 1000; ++i) {
      const auto x = random_vec(rng, 5);
      const auto y = random_vec(rng, 5);
      CHECK(kernel_eval(spec, x, y) == kernel_eval(spec, y, x));
    }
  }
}

TEST_CASE("gaussian output in (0,1]") {
  KernelSpec g{KernelKind::gaussian, 0.5, 2, 1.0};
  Rng rng(7);
  for (int i = 0; i < 1000; ++i) {
    const auto x = random_vec(rng, 3, -5.0, 5.0);
    const auto y = random_vec(rng, 3, -5.0, 5.0);
    const double k = kernel_eval(g, x, y);
    CHECK(k > 0.0);
    CHECK(k <= 1.0);
  }
}

TEST_CASE("gram matrices are positive semidefinite") {
  Rng rng(8);
  for (const KernelSpec spec : {KernelSpec{KernelKind::gaussian, 1.0, 2, 1.0},
                                KernelSpec{KernelKind::polynomial, 1.0, 2, 1.0}}) {
    for (int rep = 0; rep < 20; ++rep) {
      std::vector<std::vector<double>> pts;
      for (int i = 0; i < 8; ++i) pts.push_back(random_vec(rng, 3));
      std::vector<std::vector<double>> gram(8, std::vector<double>(8));
      for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) gram[i][j] = kernel_eval(spec, pts[i], pts[j]);
      CHECK(testsup::min_symmetric_eigenvalue(gram) >= -1e-8);
    }
  }
}

TEST_CASE("jacobi helper solves a known matrix") {
  // eigenvalues of [[2,1],[1,2]] are 1 and 3
  CHECK(testsup::near(testsup::min_symmetric_eigenvalue({{2, 1}, {1, 2}}), 1.0, 1e-10));
}

TEST_CASE("explicit degree-2 map reproduces the kernel") {
  // phi(x).phi(x) = (x.x + 1)^2 = 36 for x = [1,2]
  const auto phi = explicit_poly2_map({1, 2}, 1.0);
  CHECK(phi.size() == 6);
  double dot_xx = 0;
  for (double v : phi) dot_xx += v * v;
  CHECK(dot_xx == doctest::Approx(36.0));

  const auto phix = explicit_poly2_map({1, 2}, 1.0);
  const auto phiy = explicit_poly2_map({0, 1}, 1.0);
  double dot_xy = 0;
  for (std::size_t i = 0; i < phix.size(); ++i) dot_xy += phix[i] * phiy[i];
  CHECK(dot_xy == doctest::Approx(9.0));

  const auto zero = explicit_poly2_map({0.0, 0.0, 0.0}, 0.0);
  for (double v : zero) CHECK(v == 0.0);
}

TEST_CASE("feature map consistent with kernel on random pairs") {
  const KernelSpec p{KernelKind::polynomial, 1.0, 2, 1.0};
  Rng rng(9);
  for (int i = 0; i < 1000; ++i) {
    const auto x = random_vec(rng, 4);
    const auto y = random_vec(rng, 4);
    const auto phix = explicit_poly2_map(x, 1.0);
    const auto phiy = explicit_poly2_map(y, 1.0);
    double d = 0;
    for (std::size_t k = 0; k < phix.size(); ++k) d += phix[k] * phiy[k];
    CHECK(testsup::near(d, kernel_eval(p, x, y), 1e-10));
  }
}

TEST_CASE("dimension of the map is (n^2+3n+2)/2") {
  for (std::size_t n : {1u, 2u, 5u, 9u}) {
    const auto phi = explicit_poly2_map(std::vector<double>(n, 0.5), 1.0);
    CHECK(phi.size() == (n * n + 3 * n + 2) / 2);
  }
}

TEST_CASE("errors carry stable exact messages") {
  KernelSpec g;
  CHECK_THROWS_WITH_AS(kernel_eval(g, {1.0}, {1.0, 2.0}), "dimension mismatch",
                       std::invalid_argument);
  KernelSpec bad_sigma{KernelKind::gaussian, 0.0, 2, 1.0};
  CHECK_THROWS_WITH_AS(kernel_eval(bad_sigma, {1.0}, {1.0}), "invalid kernel parameters",
                       std::invalid_argument);
  KernelSpec bad_degree{KernelKind::polynomial, 1.0, 0, 1.0};
  CHECK_THROWS_WITH_AS(kernel_eval(bad_degree, {1.0}, {1.0}), "invalid kernel parameters",
                       std::invalid_argument);
  KernelSpec bad_offset{KernelKind::polynomial, 1.0, 2, -0.5};
  CHECK_THROWS_WITH_AS(kernel_eval(bad_offset, {1.0}, {1.0}), "invalid kernel parameters",
                       std::invalid_argument);
  CHECK_THROWS_AS(kernel_eval(g, {}, {}), std::invalid_argument);
}
