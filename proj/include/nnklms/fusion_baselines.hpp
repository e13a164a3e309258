#pragma once

#include <cstddef>
#include <vector>

#include "nnklms/matrix.hpp"

namespace nnklms {

// Classical fusion rules over one decision profile. Every tie anywhere is
// broken toward the lowest class index.

// Each row votes its argmax; most votes wins.
int vote(const DecisionProfile& p);
// Column-wise aggregate then argmax.
int mean_rule(const DecisionProfile& p);
int max_rule(const DecisionProfile& p);
int min_rule(const DecisionProfile& p);
int product_rule(const DecisionProfile& p);

// DT_c = elementwise mean of the training profiles of class c.
struct DecisionTemplates {
  std::vector<RowMatrix> templates;  // one BN x CN matrix per class
  std::vector<std::size_t> counts;   // training samples per class

  bool operator==(const DecisionTemplates&) const = default;
};

// Every class in [0, num_classes) must have at least one sample.
DecisionTemplates dt_build(const std::vector<DecisionProfile>& profiles,
                           const std::vector<int>& labels, std::size_t num_classes);

// S_c = 1 - mean squared entry difference to DT_c.
std::vector<double> dt_similarity_euclidean(const DecisionTemplates& t, const DecisionProfile& p);
int dt_predict_euclidean(const DecisionTemplates& t, const DecisionProfile& p);

// Fuzzy symmetric difference: per entry d = max(min(DT, 1-DP), min(1-DT, DP));
// S_c = 1 - mean(d).
std::vector<double> dt_similarity_symdiff(const DecisionTemplates& t, const DecisionProfile& p);
int dt_predict_symdiff(const DecisionTemplates& t, const DecisionProfile& p);

// Dempster-Shafer: per-row template proximities become belief masses that are
// combined multiplicatively; returns the normalized per-class support. A
// degenerate belief denominator makes that classifier's belief uniform.
std::vector<double> ds_support(const DecisionTemplates& t, const DecisionProfile& p);
int ds_predict(const DecisionTemplates& t, const DecisionProfile& p);

}  // namespace nnklms
