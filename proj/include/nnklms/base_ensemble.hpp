#pragma once

#include <cstdint>
#include <vector>

#include "nnklms/matrix.hpp"

namespace nnklms {

// Feedforward net, logistic on every layer, trained by plain SGD on squared
// error with one-hot targets.
struct MlpModel {
  std::vector<std::size_t> layer_sizes;   // input first, output (CN) last
  std::vector<RowMatrix> weights;         // weights[l]: sizes[l+1] x sizes[l]
  std::vector<std::vector<double>> biases;

  bool operator==(const MlpModel&) const = default;
};

// Weights and biases uniform in [-0.5, 0.5], drawn layer by layer (weight
// rows, then biases) from Rng(seed).
MlpModel mlp_init(const std::vector<std::size_t>& layer_sizes, std::uint64_t seed);

std::vector<double> mlp_forward(const MlpModel& m, const std::vector<double>& x);
std::vector<double> mlp_forward(const MlpModel& m, const double* x, std::size_t n);

// Per-epoch shuffled SGD. Returns the training error rate recorded per epoch
// (misclassification fraction of the pre-update forward pass within the
// epoch). learn_rate 0 is allowed and leaves the model unchanged.
std::vector<double> mlp_train(MlpModel& m, const RowMatrix& samples,
                              const std::vector<int>& labels, int epochs, double learn_rate,
                              std::uint64_t seed);

struct EnsembleConfig {
  std::size_t count = 10;                 // BN, >= 2
  std::vector<std::size_t> hidden_sizes;  // cycled across members; empty = auto
  int epochs = 300;
  double learn_rate = 0.5;
  std::uint64_t seed = 0;                 // member i inits from seed + i
};

struct EnsembleModel {
  std::vector<MlpModel> members;
  std::size_t num_features = 0;  // FN
  std::size_t num_classes = 0;   // CN

  bool operator==(const EnsembleModel&) const = default;
};

// Trains every member on the full training set (fusion, not selection).
// Diversity comes from cycled hidden sizes and per-member seeds. With an
// empty hidden_sizes list the cycle is {FN, ceil(1.5 FN), 2 FN}.
EnsembleModel ensemble_build(const EnsembleConfig& cfg, const RowMatrix& samples,
                             const std::vector<int>& labels, std::size_t num_classes);

// Row i = member i's class-support vector for x.
DecisionProfile decision_profile(const EnsembleModel& e, const double* x, std::size_t n);
DecisionProfile decision_profile(const EnsembleModel& e, const std::vector<double>& x);

}  // namespace nnklms
