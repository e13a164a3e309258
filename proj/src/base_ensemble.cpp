#include "nnklms/base_ensemble.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "nnklms/nnklms.hpp"
#include "nnklms/rng.hpp"
#include "nnklms/simd.hpp"

namespace nnklms {

MlpModel mlp_init(const std::vector<std::size_t>& layer_sizes, std::uint64_t seed) {
  if (layer_sizes.size() < 2) throw std::invalid_argument("need at least two layers");
  for (std::size_t s : layer_sizes)
    if (s == 0) throw std::invalid_argument("zero layer size");

  MlpModel m;
  m.layer_sizes = layer_sizes;
  Rng rng(seed);
  for (std::size_t l = 0; l + 1 < layer_sizes.size(); ++l) {
    RowMatrix w(layer_sizes[l + 1], layer_sizes[l]);
    for (double& v : w.data) v = rng.uniform(-0.5, 0.5);
    m.weights.push_back(std::move(w));
    std::vector<double> b(layer_sizes[l + 1]);
    for (double& v : b) v = rng.uniform(-0.5, 0.5);
    m.biases.push_back(std::move(b));
  }
  return m;
}

namespace {

// activations[l] holds layer l's output; activations[0] is the input copy
void forward_layers(const MlpModel& m, const double* x,
                    std::vector<std::vector<double>>& activations) {
  activations.resize(m.layer_sizes.size());
  activations[0].assign(x, x + m.layer_sizes[0]);
  for (std::size_t l = 0; l < m.weights.size(); ++l) {
    const RowMatrix& w = m.weights[l];
    const auto& prev = activations[l];
    auto& out = activations[l + 1];
    out.resize(w.rows);
    for (std::size_t i = 0; i < w.rows; ++i)
      out[i] = logistic(simd::dot(w.row(i), prev.data(), w.cols) + m.biases[l][i]);
  }
}

}  // namespace

std::vector<double> mlp_forward(const MlpModel& m, const double* x, std::size_t n) {
  if (n != m.layer_sizes.front()) throw std::invalid_argument("dimension mismatch");
  std::vector<std::vector<double>> acts;
  forward_layers(m, x, acts);
  return acts.back();
}

std::vector<double> mlp_forward(const MlpModel& m, const std::vector<double>& x) {
  return mlp_forward(m, x.data(), x.size());
}

std::vector<double> mlp_train(MlpModel& m, const RowMatrix& samples,
                              const std::vector<int>& labels, int epochs, double learn_rate,
                              std::uint64_t seed) {
  if (samples.rows == 0) throw std::invalid_argument("empty training set");
  if (samples.rows != labels.size()) throw std::invalid_argument("dimension mismatch");
  if (samples.cols != m.layer_sizes.front()) throw std::invalid_argument("dimension mismatch");
  if (epochs < 1) throw std::invalid_argument("epochs must be >= 1");
  if (learn_rate < 0.0) throw std::invalid_argument("negative learning rate");
  const std::size_t cn = m.layer_sizes.back();
  for (int lab : labels)
    if (lab < 0 || static_cast<std::size_t>(lab) >= cn)
      throw std::invalid_argument("label out of range");

  const std::size_t layers = m.weights.size();
  std::vector<std::vector<double>> acts;
  std::vector<std::vector<double>> deltas(layers);
  std::vector<std::size_t> order(samples.rows);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(seed);

  std::vector<double> epoch_errors;
  epoch_errors.reserve(static_cast<std::size_t>(epochs));
  for (int epoch = 0; epoch < epochs; ++epoch) {
    rng.shuffle(order);
    std::size_t wrong = 0;
    for (std::size_t idx : order) {
      forward_layers(m, samples.row(idx), acts);
      const auto& out = acts.back();
      if (argmax_lowest(out) != static_cast<std::size_t>(labels[idx])) ++wrong;

      // output delta for E = 1/2 sum (t - y)^2:  (y - t) y (1 - y)
      deltas[layers - 1].resize(out.size());
      for (std::size_t i = 0; i < out.size(); ++i) {
        const double t = (static_cast<std::size_t>(labels[idx]) == i) ? 1.0 : 0.0;
        deltas[layers - 1][i] = (out[i] - t) * out[i] * (1.0 - out[i]);
      }
      for (std::size_t l = layers - 1; l-- > 0;) {
        const RowMatrix& w = m.weights[l + 1];
        const auto& next = deltas[l + 1];
        auto& cur = deltas[l];
        const auto& a = acts[l + 1];
        cur.assign(a.size(), 0.0);
        for (std::size_t i = 0; i < w.rows; ++i)
          simd::axpy(next[i], w.row(i), cur.data(), w.cols);
        for (std::size_t j = 0; j < cur.size(); ++j) cur[j] *= a[j] * (1.0 - a[j]);
      }
      for (std::size_t l = 0; l < layers; ++l) {
        RowMatrix& w = m.weights[l];
        const auto& prev = acts[l];
        for (std::size_t i = 0; i < w.rows; ++i) {
          simd::axpy(-learn_rate * deltas[l][i], prev.data(), w.row(i), w.cols);
          m.biases[l][i] -= learn_rate * deltas[l][i];
        }
      }
    }
    epoch_errors.push_back(static_cast<double>(wrong) / static_cast<double>(samples.rows));
  }
  return epoch_errors;
}

EnsembleModel ensemble_build(const EnsembleConfig& cfg, const RowMatrix& samples,
                             const std::vector<int>& labels, std::size_t num_classes) {
  if (cfg.count < 2) throw std::invalid_argument("ensemble needs at least two members");
  if (samples.rows == 0) throw std::invalid_argument("empty training set");
  const std::size_t fn = samples.cols;

  std::vector<std::size_t> cycle = cfg.hidden_sizes;
  if (cycle.empty()) {
    cycle = {fn, static_cast<std::size_t>(std::ceil(1.5 * static_cast<double>(fn))),
             2 * fn};
  }

  EnsembleModel e;
  e.num_features = fn;
  e.num_classes = num_classes;
  e.members.reserve(cfg.count);
  for (std::size_t i = 0; i < cfg.count; ++i) {
    const std::size_t hidden = cycle[i % cycle.size()];
    const std::uint64_t member_seed = cfg.seed + i;
    MlpModel m = mlp_init({fn, hidden, num_classes}, member_seed);
    mlp_train(m, samples, labels, cfg.epochs, cfg.learn_rate, mix_seed(member_seed, 1));
    e.members.push_back(std::move(m));
  }
  return e;
}

DecisionProfile decision_profile(const EnsembleModel& e, const double* x, std::size_t n) {
  if (n != e.num_features) throw std::invalid_argument("dimension mismatch");
  DecisionProfile p(e.members.size(), e.num_classes);
  for (std::size_t i = 0; i < e.members.size(); ++i) {
    const auto out = mlp_forward(e.members[i], x, n);
    for (std::size_t j = 0; j < e.num_classes; ++j) p(i, j) = out[j];
  }
  return p;
}

DecisionProfile decision_profile(const EnsembleModel& e, const std::vector<double>& x) {
  return decision_profile(e, x.data(), x.size());
}

}  // namespace nnklms
