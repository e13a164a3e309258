#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "nnklms/evaluation.hpp"

namespace nnklms {

// JSON round trips are lossless: doubles serialize as shortest decimals that
// parse back to the identical bits. ordered_json keeps key order stable so
// identical runs produce identical bytes.
using Json = nlohmann::ordered_json;

Json kernel_to_json(const KernelSpec& k);
KernelSpec kernel_from_json(const Json& j);

Json expansion_to_json(const KernelExpansion& e);
KernelExpansion expansion_from_json(const Json& j);

Json combiner_to_json(const CombinerModel& m);
CombinerModel combiner_from_json(const Json& j);

Json mlp_to_json(const MlpModel& m);
MlpModel mlp_from_json(const Json& j);

Json ensemble_to_json(const EnsembleModel& e);
EnsembleModel ensemble_from_json(const Json& j);

Json templates_to_json(const DecisionTemplates& t);
DecisionTemplates templates_from_json(const Json& j);

Json scaler_to_json(const MinMaxScaler& s);
MinMaxScaler scaler_from_json(const Json& j);

Json foldplan_to_json(const FoldPlan& p);

Json experiment_config_to_json(const ExperimentConfig& c);
// Missing keys keep their defaults, so a config file may be partial.
ExperimentConfig experiment_config_from_json(const Json& j);

Json report_to_json(const FusionReport& r);

// Everything cmd_inspect needs to replay a trained fold.
struct ModelBundle {
  std::string dataset_name;
  std::vector<std::string> label_names;
  EnsembleModel ensemble;
  CombinerModel combiner;
  DecisionTemplates templates;
  MinMaxScaler scaler;
  std::vector<std::size_t> train_indices;
  std::vector<std::size_t> test_indices;
};

Json bundle_to_json(const ModelBundle& b);
ModelBundle bundle_from_json(const Json& j);

void write_json_file(const std::string& path, const Json& j);
Json read_json_file(const std::string& path);

}  // namespace nnklms
