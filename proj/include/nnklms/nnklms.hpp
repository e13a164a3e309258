#pragma once

#include <cstdint>
#include <vector>

#include "nnklms/adaptive_filters.hpp"
#include "nnklms/matrix.hpp"

namespace nnklms {

double logistic(double s);
// f(s) (1 - f(s)), maximum 0.25 at s = 0
double logistic_prime(double s);

// Activation hook. Training folds act.df(s) into the stored coefficients, so
// swapping in {identity, one} makes the neuron collapse to raw KLMS; tests
// rely on that reduction.
struct Activation {
  double (*f)(double);
  double (*df)(double);
};
const Activation& logistic_activation();
const Activation& identity_activation();

// Kernel LMS neuron: logistic over a kernel expansion whose coefficients are
// E_i = e_i f'(s_i).
struct NeuronState {
  KernelExpansion expansion;

  bool operator==(const NeuronState&) const = default;
};

// eta * sum_i E_i k(X_i, x); 0 when the dictionary is empty
double neuron_preactivation(const NeuronState& n, const std::vector<double>& x);
// logistic(preactivation), in (0,1)
double neuron_predict(const NeuronState& n, const std::vector<double>& x);
// s = preactivation, y = f(s), e = d - y; appends (e f'(s), x) subject to the
// cap. Returns e. d must lie in [0,1].
double neuron_step(NeuronState& n, const std::vector<double>& x, double d,
                   const Activation& act = logistic_activation());

struct CombinerConfig {
  KernelSpec kernel;       // gaussian sigma 1 by default
  double eta = 1.0;
  std::size_t cap = 0;     // 0 = unlimited
  int passes = 5;
  std::uint64_t seed = 0;  // drives the per-pass shuffle
};

// One-vs-all bank: CN neurons sharing hyperparameters, trained on one-hot
// targets, decided by argmax.
struct CombinerModel {
  std::vector<NeuronState> neurons;  // one per class
  std::size_t num_base = 0;          // BN
  std::size_t num_classes = 0;       // CN
  int passes = 0;

  bool operator==(const CombinerModel&) const = default;
};

// Trains on row-major flattened BN x CN profiles. Sample order is reshuffled
// each pass; every neuron consumes the identical order.
CombinerModel combiner_train(const std::vector<DecisionProfile>& profiles,
                             const std::vector<int>& labels, const CombinerConfig& config);

struct CombinerDecision {
  std::vector<double> ny;  // per-class neuron outputs
  int cls = 0;
};

CombinerDecision combiner_predict(const CombinerModel& m, const DecisionProfile& profile);

}  // namespace nnklms
