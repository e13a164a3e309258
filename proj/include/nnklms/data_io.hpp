#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nnklms/matrix.hpp"

namespace nnklms {

struct Dataset {
  std::string name;
  RowMatrix features;                    // N x FN
  std::vector<int> labels;               // 0..CN-1, first-appearance order
  std::vector<std::string> label_names;  // class index -> original label string
  std::size_t num_classes = 0;

  std::size_t size() const { return features.rows; }
  std::size_t num_features() const { return features.cols; }
};

enum class MissingPolicy { drop, impute_mean };

struct CsvSchema {
  int label_column = -1;  // negative counts from the end, -1 = last
  char delimiter = ',';
  bool has_header = false;
  MissingPolicy missing = MissingPolicy::drop;
};

// Missing fields are "", "?" or "NA". A space delimiter treats runs of
// whitespace as one separator.
Dataset load_csv(const std::string& path, const CsvSchema& schema = {});

struct MinMaxScaler {
  std::vector<double> min;
  std::vector<double> max;
};

MinMaxScaler minmax_fit(const RowMatrix& rows);
// x' = (x - min) / (max - min); constant columns map to 0
void minmax_apply(const MinMaxScaler& s, RowMatrix& rows);
// fit + apply over the whole dataset
Dataset normalize_minmax(const Dataset& d);

enum class ProtocolKind { holdout, window_cv, loo };

struct Fold {
  std::vector<std::size_t> test_indices;
  std::vector<std::size_t> train_indices;
};

struct FoldPlan {
  ProtocolKind kind = ProtocolKind::holdout;
  std::vector<Fold> folds;
};

// Single stratified fold: per class, round(train_fraction * n_c) rows go to
// train (clamped so both sides keep one), selection shuffled by seed. Errors
// when a class has fewer than 2 samples.
FoldPlan holdout_split(const Dataset& d, double train_fraction, std::uint64_t seed);

// Contiguous test windows [0,m), [m,2m), ...; a final partial window is
// kept. m = 1 degenerates to leave-one-out.
FoldPlan window_cv(std::size_t n, std::size_t m);
FoldPlan leave_one_out(std::size_t n);

struct ProtocolConfig {
  std::optional<ProtocolKind> override_kind;
  std::size_t window = 20;
  double train_fraction = 0.6;
  std::uint64_t seed = 0;
};

// n < 200 -> loo; 200 <= n < 500 -> window_cv; n >= 500 -> holdout.
// override_kind short-circuits the size rule.
FoldPlan choose_protocol(const Dataset& d, const ProtocolConfig& cfg = {});

const char* protocol_kind_name(ProtocolKind k);
std::string protocol_label(const FoldPlan& plan, const ProtocolConfig& cfg);

}  // namespace nnklms
