#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "nnklms/adaptive_filters.hpp"
#include "nnklms/rng.hpp"
#include "support.hpp"

using namespace nnklms;

TEST_CASE("lms predict") {
  CHECK(lms_predict({{0.0, 0.0}, 0.1}, {1.0, 2.0}) == 0.0);
  CHECK(lms_predict({{0.2, 0.4}, 0.1}, {1.0, 2.0}) == doctest::Approx(1.0));
  CHECK(lms_predict({{1.0}, 0.1}, {-3.0}) == doctest::Approx(-3.0));
  CHECK_THROWS_WITH_AS(lms_predict({{1.0}, 0.1}, {1.0, 2.0}), "dimension mismatch",
                       std::invalid_argument);
}

TEST_CASE("lms step") {
  LmsFilter f{{0.0, 0.0}, 0.1};
  CHECK(lms_step(f, {1.0, 2.0}, 1.0) == doctest::Approx(1.0));
  CHECK(f.weights[0] == doctest::Approx(0.2));
  CHECK(f.weights[1] == doctest::Approx(0.4));

  // zero error is a fixed point
  LmsFilter g{{0.5, -0.5}, 0.1};
  const auto before = g.weights;
  CHECK(lms_step(g, {2.0, 2.0}, 0.0) == 0.0);
  CHECK(g.weights == before);

  // zero input cannot move weights
  LmsFilter h{{0.0}, 0.1};
  CHECK(lms_step(h, {0.0}, 5.0) == doctest::Approx(5.0));
  CHECK(h.weights[0] == 0.0);
}

TEST_CASE("klms predict") {
  KlmsState s;
  CHECK(klms_predict(s, {4.0, 5.0}) == 0.0);

  s.eta = 0.5;
  const std::vector<double> x{1.0, 0.0};
  s.push(1.0, x.data(), 2);
  CHECK(klms_predict(s, {1.0, 0.0}) == doctest::Approx(0.5));

  KlmsState lin;
  lin.kernel.kind = KernelKind::linear;
  const std::vector<double> one{1.0};
  lin.push(1.0, one.data(), 1);
  CHECK(klms_predict(lin, {2.0}) == doctest::Approx(2.0));
  CHECK_THROWS_WITH_AS(klms_predict(lin, {2.0, 3.0}), "dimension mismatch",
                       std::invalid_argument);
}

TEST_CASE("klms step appends the error and enforces the cap") {
  KlmsState s;
  CHECK(klms_step(s, {1.0}, 1.0) == doctest::Approx(1.0));
  REQUIRE(s.size() == 1);
  CHECK(s.coeffs[0] == doctest::Approx(1.0));
  CHECK(s.inputs(0, 0) == 1.0);

  KlmsState capped;
  capped.cap = 1;
  klms_step(capped, {1.0}, 1.0);
  klms_step(capped, {2.0}, 3.0);
  CHECK(capped.size() == 1);

  KlmsState lin;
  lin.kernel.kind = KernelKind::linear;
  klms_step(lin, {1.0}, 1.0);
  CHECK(klms_step(lin, {2.0}, 0.0) == doctest::Approx(-2.0));
}

TEST_CASE("linear-kernel klms is input-space lms") {
  const double mu = 0.05;
  LmsFilter f{std::vector<double>(4, 0.0), mu};
  KlmsState s;
  s.kernel.kind = KernelKind::linear;
  s.eta = 2.0 * mu;

  Rng rng(11);
  for (int n = 0; n < 500; ++n) {
    std::vector<double> u(4);
    for (double& v : u) v = rng.uniform(-1.0, 1.0);
    const double d = rng.uniform(-1.0, 1.0);
    const double e_lms = lms_step(f, u, d);
    const double e_klms = klms_step(s, u, d);
    CHECK(testsup::near(e_lms, e_klms, 1e-9));
  }
}

TEST_CASE("poly2 klms equals lms in the explicit feature space") {
  const double mu = 0.02;
  KlmsState s;
  s.kernel = {KernelKind::polynomial, 1.0, 2, 1.0};
  s.eta = 2.0 * mu;
  LmsFilter f;
  f.step_size = mu;

  Rng rng(12);
  for (int n = 0; n < 200; ++n) {
    std::vector<double> u(3);
    for (double& v : u) v = rng.uniform(0.0, 1.0);
    const auto phi = explicit_poly2_map(u, 1.0);
    if (f.weights.empty()) f.weights.assign(phi.size(), 0.0);
    const double d = rng.uniform(0.0, 1.0);
    CHECK(testsup::rel_near(klms_predict(s, u), lms_predict(f, phi), 1e-8));
    lms_step(f, phi, d);
    klms_step(s, u, d);
  }
}

TEST_CASE("capped dictionary is exactly the first entries of the uncapped run") {
  KlmsState full;
  KlmsState capped;
  capped.cap = 10;

  Rng rng(13);
  std::vector<std::vector<double>> probes;
  for (int n = 0; n < 50; ++n) {
    std::vector<double> u(2);
    for (double& v : u) v = rng.uniform(0.0, 1.0);
    const double d = rng.uniform(0.0, 1.0);
    klms_step(full, u, d);
    klms_step(capped, u, d);
    if (n % 10 == 0) probes.push_back(u);
  }
  REQUIRE(capped.size() == 10);
  REQUIRE(full.size() == 50);

  KlmsState head = full;
  head.cap = capped.cap;
  head.coeffs.resize(10);
  head.inputs.rows = 10;
  head.inputs.data.resize(10 * head.inputs.cols);
  CHECK(head == capped);
  for (const auto& u : probes) CHECK(klms_predict(capped, u) == klms_predict(head, u));
}

TEST_CASE("identical streams give bit-identical states") {
  auto run = [] {
    KlmsState s;
    s.kernel.sigma = 0.8;
    Rng rng(14);
    for (int n = 0; n < 40; ++n) {
      std::vector<double> u{rng.uniform(), rng.uniform()};
      klms_step(s, u, rng.uniform());
    }
    return s;
  };
  CHECK(run() == run());
}

TEST_CASE("push rejects once the cap is reached and reports dimension drift") {
  KernelExpansion e;
  e.cap = 2;
  const std::vector<double> a{1.0, 2.0};
  CHECK(e.push(0.5, a.data(), 2));
  CHECK(e.push(0.25, a.data(), 2));
  CHECK_FALSE(e.push(0.125, a.data(), 2));
  CHECK(e.size() == 2);
  CHECK_THROWS_WITH_AS(e.push(0.1, a.data(), 1), "dimension mismatch", std::invalid_argument);
}
