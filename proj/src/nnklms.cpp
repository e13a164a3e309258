#include "nnklms/nnklms.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "nnklms/rng.hpp"

namespace nnklms {

double logistic(double s) { return 1.0 / (1.0 + std::exp(-s)); }

double logistic_prime(double s) {
  const double y = logistic(s);
  return y * (1.0 - y);
}

const Activation& logistic_activation() {
  static const Activation a{&logistic, &logistic_prime};
  return a;
}

const Activation& identity_activation() {
  static const Activation a{[](double s) { return s; }, [](double) { return 1.0; }};
  return a;
}

double neuron_preactivation(const NeuronState& n, const std::vector<double>& x) {
  return n.expansion.weighted_kernel_sum(x.data(), x.size());
}

double neuron_predict(const NeuronState& n, const std::vector<double>& x) {
  return logistic(neuron_preactivation(n, x));
}

double neuron_step(NeuronState& n, const std::vector<double>& x, double d,
                   const Activation& act) {
  if (d < 0.0 || d > 1.0 || !std::isfinite(d))
    throw std::invalid_argument("desired output outside [0,1]");
  const double s = neuron_preactivation(n, x);
  const double e = d - act.f(s);
  n.expansion.push(e * act.df(s), x.data(), x.size());
  return e;
}

CombinerModel combiner_train(const std::vector<DecisionProfile>& profiles,
                             const std::vector<int>& labels, const CombinerConfig& config) {
  if (profiles.empty()) throw std::invalid_argument("empty training set");
  if (profiles.size() != labels.size()) throw std::invalid_argument("dimension mismatch");
  const std::size_t bn = profiles.front().rows;
  const std::size_t cn = profiles.front().cols;
  if (bn == 0 || cn == 0) throw std::invalid_argument("empty profile");
  for (const auto& p : profiles)
    if (p.rows != bn || p.cols != cn) throw std::invalid_argument("inconsistent profile shapes");
  for (int lab : labels)
    if (lab < 0 || static_cast<std::size_t>(lab) >= cn)
      throw std::invalid_argument("label out of range");

  CombinerModel model;
  model.num_base = bn;
  model.num_classes = cn;
  model.passes = config.passes;
  model.neurons.resize(cn);
  for (auto& nrn : model.neurons) {
    nrn.expansion.kernel = config.kernel;
    nrn.expansion.eta = config.eta;
    nrn.expansion.cap = config.cap;
  }

  std::vector<std::size_t> order(profiles.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(config.seed);
  for (int pass = 0; pass < config.passes; ++pass) {
    rng.shuffle(order);
    for (std::size_t idx : order) {
      const auto& flat = profiles[idx].data;
      for (std::size_t c = 0; c < cn; ++c)
        neuron_step(model.neurons[c], flat, labels[idx] == static_cast<int>(c) ? 1.0 : 0.0);
    }
  }
  return model;
}

CombinerDecision combiner_predict(const CombinerModel& m, const DecisionProfile& profile) {
  if (profile.rows != m.num_base || profile.cols != m.num_classes)
    throw std::invalid_argument("dimension mismatch");
  CombinerDecision out;
  out.ny.reserve(m.num_classes);
  for (const auto& nrn : m.neurons) out.ny.push_back(neuron_predict(nrn, profile.data));
  out.cls = static_cast<int>(argmax_lowest(out.ny));
  return out;
}

}  // namespace nnklms
