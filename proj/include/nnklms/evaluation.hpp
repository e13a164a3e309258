#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "nnklms/base_ensemble.hpp"
#include "nnklms/data_io.hpp"
#include "nnklms/fusion_baselines.hpp"
#include "nnklms/nnklms.hpp"

namespace nnklms {

struct ConfusionMatrix {
  std::size_t num_classes = 0;
  std::vector<std::size_t> counts;  // CN x CN row-major, rows = true class

  ConfusionMatrix() = default;
  explicit ConfusionMatrix(std::size_t cn) : num_classes(cn), counts(cn * cn, 0) {}

  void add(int truth, int pred);
  void merge(const ConfusionMatrix& other);
  std::size_t at(std::size_t t, std::size_t p) const { return counts[t * num_classes + p]; }
  std::size_t total() const;
  std::size_t correct() const;
  double error_rate() const;  // 1 - trace/total

  bool operator==(const ConfusionMatrix&) const = default;
};

ConfusionMatrix confusion(const std::vector<int>& preds, const std::vector<int>& labels,
                          std::size_t num_classes);

// Report column order; fixed.
enum Method : std::size_t { VT, DS, DTED, DTSD, SM, MAX, PT, MIN, NNKLMS, kNumMethods };
extern const std::array<const char*, kNumMethods> kMethodNames;

struct ExperimentConfig {
  EnsembleConfig ensemble;  // per-fold seeds are derived from `seed`, not ensemble.seed
  CombinerConfig combiner;  // likewise
  ProtocolConfig protocol;  // holdout shuffle seed likewise
  bool fit_scaler_on_train = false;  // default reproduces whole-dataset normalization
  std::uint64_t seed = 1;
  int jobs = 1;
};

// Models retained from a fold when requested (fold 0 of an experiment).
struct FoldModels {
  EnsembleModel ensemble;
  CombinerModel combiner;
  DecisionTemplates templates;
  MinMaxScaler scaler;  // identity-range scaler when normalization already applied
  bool scaler_fitted = false;
};

struct FoldResult {
  bool skipped = false;
  std::string warning;
  std::vector<int> truth;                                // per test sample
  std::array<std::vector<int>, kNumMethods> preds;       // per method
  std::vector<std::vector<int>> member_preds;            // BN x test-size
  std::unique_ptr<FoldModels> models;
};

// Two-stage pipeline on one fold: train the ensemble on the train rows,
// train combiner + templates on the train rows' decision profiles, then push
// each test profile through all nine fusion methods. Folds whose train side
// misses a class are skipped with a warning. When cfg.fit_scaler_on_train is
// set, `d` must be raw and min-max is fitted on the train rows; otherwise `d`
// is used as-is.
FoldResult run_fold(const std::vector<std::size_t>& train_idx,
                    const std::vector<std::size_t>& test_idx, const Dataset& d,
                    const ExperimentConfig& cfg, std::size_t fold_index,
                    bool keep_models = false);

struct FusionReport {
  std::string dataset;
  std::string protocol;
  std::size_t folds_run = 0;
  std::size_t folds_skipped = 0;
  std::size_t samples_evaluated = 0;
  std::array<double, kNumMethods> method_error_pct{};
  std::array<ConfusionMatrix, kNumMethods> method_confusion;
  std::vector<double> member_error_pct;
  std::vector<ConfusionMatrix> member_confusion;
  std::string config_fingerprint;  // serialized resolved config, reproduces the run
  std::vector<std::string> warnings;
};

struct ExperimentResult {
  FusionReport report;
  FoldPlan plan;
  std::vector<FoldResult> folds;
};

// Pools counts across folds (errors-summed / samples-summed) rather than
// averaging per-fold rates, so unequal final windows weigh correctly. Folds
// run independently; with jobs > 1 results are bit-identical to serial
// because every fold's seeds derive from (seed, fold index).
ExperimentResult run_experiment_full(const Dataset& d, const ExperimentConfig& cfg,
                                     bool keep_fold0_models = false);
FusionReport run_experiment(const Dataset& d, const ExperimentConfig& cfg);

std::string report_table(const FusionReport& r);
std::string confusion_table(const ConfusionMatrix& m, const std::vector<std::string>& names);

}  // namespace nnklms
