#include "nnklms/fusion_baselines.hpp"

#include <cmath>
#include <stdexcept>

#include "nnklms/simd.hpp"

namespace nnklms {

namespace {

void check_profile(const DecisionProfile& p) {
  if (p.rows == 0 || p.cols == 0) throw std::invalid_argument("empty profile");
}

void check_shapes(const DecisionTemplates& t, const DecisionProfile& p) {
  check_profile(p);
  if (t.templates.empty()) throw std::invalid_argument("empty templates");
  for (const auto& dt : t.templates)
    if (dt.rows != p.rows || dt.cols != p.cols)
      throw std::invalid_argument("dimension mismatch");
}

}  // namespace

int vote(const DecisionProfile& p) {
  check_profile(p);
  std::vector<std::size_t> tally(p.cols, 0);
  for (std::size_t i = 0; i < p.rows; ++i) ++tally[argmax_lowest(p.row(i), p.cols)];
  std::size_t best = 0;
  for (std::size_t c = 1; c < p.cols; ++c)
    if (tally[c] > tally[best]) best = c;
  return static_cast<int>(best);
}

int mean_rule(const DecisionProfile& p) {
  check_profile(p);
  std::vector<double> support(p.cols, 0.0);
  for (std::size_t i = 0; i < p.rows; ++i)
    for (std::size_t c = 0; c < p.cols; ++c) support[c] += p(i, c);
  for (double& s : support) s /= static_cast<double>(p.rows);
  return static_cast<int>(argmax_lowest(support));
}

int max_rule(const DecisionProfile& p) {
  check_profile(p);
  std::vector<double> support(p.row(0), p.row(0) + p.cols);
  for (std::size_t i = 1; i < p.rows; ++i)
    for (std::size_t c = 0; c < p.cols; ++c) support[c] = std::max(support[c], p(i, c));
  return static_cast<int>(argmax_lowest(support));
}

int min_rule(const DecisionProfile& p) {
  check_profile(p);
  std::vector<double> support(p.row(0), p.row(0) + p.cols);
  for (std::size_t i = 1; i < p.rows; ++i)
    for (std::size_t c = 0; c < p.cols; ++c) support[c] = std::min(support[c], p(i, c));
  return static_cast<int>(argmax_lowest(support));
}

int product_rule(const DecisionProfile& p) {
  check_profile(p);
  std::vector<double> support(p.cols, 1.0);
  for (std::size_t i = 0; i < p.rows; ++i)
    for (std::size_t c = 0; c < p.cols; ++c) support[c] *= p(i, c);
  return static_cast<int>(argmax_lowest(support));
}

DecisionTemplates dt_build(const std::vector<DecisionProfile>& profiles,
                           const std::vector<int>& labels, std::size_t num_classes) {
  if (profiles.empty()) throw std::invalid_argument("empty training set");
  if (profiles.size() != labels.size()) throw std::invalid_argument("dimension mismatch");
  const std::size_t bn = profiles.front().rows;
  const std::size_t cn = profiles.front().cols;
  DecisionTemplates t;
  t.templates.assign(num_classes, RowMatrix(bn, cn));
  t.counts.assign(num_classes, 0);
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    const auto& p = profiles[i];
    if (p.rows != bn || p.cols != cn) throw std::invalid_argument("inconsistent profile shapes");
    const int lab = labels[i];
    if (lab < 0 || static_cast<std::size_t>(lab) >= num_classes)
      throw std::invalid_argument("label out of range");
    auto& dt = t.templates[static_cast<std::size_t>(lab)];
    for (std::size_t k = 0; k < dt.data.size(); ++k) dt.data[k] += p.data[k];
    ++t.counts[static_cast<std::size_t>(lab)];
  }
  for (std::size_t c = 0; c < num_classes; ++c) {
    if (t.counts[c] == 0) throw std::invalid_argument("class missing from training data");
    for (double& v : t.templates[c].data) v /= static_cast<double>(t.counts[c]);
  }
  return t;
}

std::vector<double> dt_similarity_euclidean(const DecisionTemplates& t,
                                            const DecisionProfile& p) {
  check_shapes(t, p);
  std::vector<double> sim;
  sim.reserve(t.templates.size());
  for (const auto& dt : t.templates) {
    const double d2 = simd::squared_distance(dt.data.data(), p.data.data(), p.data.size());
    sim.push_back(1.0 - d2 / static_cast<double>(p.data.size()));
  }
  return sim;
}

int dt_predict_euclidean(const DecisionTemplates& t, const DecisionProfile& p) {
  return static_cast<int>(argmax_lowest(dt_similarity_euclidean(t, p)));
}

std::vector<double> dt_similarity_symdiff(const DecisionTemplates& t, const DecisionProfile& p) {
  check_shapes(t, p);
  std::vector<double> sim;
  sim.reserve(t.templates.size());
  for (const auto& dt : t.templates) {
    double acc = 0.0;
    for (std::size_t k = 0; k < p.data.size(); ++k) {
      const double a = dt.data[k];
      const double b = p.data[k];
      acc += std::max(std::min(a, 1.0 - b), std::min(1.0 - a, b));
    }
    sim.push_back(1.0 - acc / static_cast<double>(p.data.size()));
  }
  return sim;
}

int dt_predict_symdiff(const DecisionTemplates& t, const DecisionProfile& p) {
  return static_cast<int>(argmax_lowest(dt_similarity_symdiff(t, p)));
}

std::vector<double> ds_support(const DecisionTemplates& t, const DecisionProfile& p) {
  check_shapes(t, p);
  const std::size_t cn = t.templates.size();
  std::vector<double> mu(cn, 1.0);
  std::vector<double> prox(cn);
  std::vector<double> belief(cn);
  for (std::size_t i = 0; i < p.rows; ++i) {
    double norm = 0.0;
    for (std::size_t c = 0; c < cn; ++c) {
      const double d2 =
          simd::squared_distance(t.templates[c].row(i), p.row(i), p.cols);
      prox[c] = 1.0 / (1.0 + d2);
      norm += prox[c];
    }
    for (std::size_t c = 0; c < cn; ++c) prox[c] /= norm;

    bool degenerate = false;
    for (std::size_t c = 0; c < cn; ++c) {
      double rest = 1.0;
      for (std::size_t k = 0; k < cn; ++k)
        if (k != c) rest *= 1.0 - prox[k];
      const double den = 1.0 - prox[c] * (1.0 - rest);
      if (!(den > 0.0) || !std::isfinite(den)) {
        degenerate = true;
        break;
      }
      belief[c] = prox[c] * rest / den;
    }
    if (degenerate)
      for (std::size_t c = 0; c < cn; ++c) belief[c] = 1.0 / static_cast<double>(cn);
    for (std::size_t c = 0; c < cn; ++c) mu[c] *= belief[c];
  }
  double total = 0.0;
  for (double v : mu) total += v;
  if (!(total > 0.0) || !std::isfinite(total))
    return std::vector<double>(cn, 1.0 / static_cast<double>(cn));
  for (double& v : mu) v /= total;
  return mu;
}

int ds_predict(const DecisionTemplates& t, const DecisionProfile& p) {
  return static_cast<int>(argmax_lowest(ds_support(t, p)));
}

}  // namespace nnklms
