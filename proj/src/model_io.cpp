#include "nnklms/model_io.hpp"

#include <fstream>
#include <stdexcept>

namespace nnklms {

namespace {

KernelKind kind_from_name(const std::string& s) {
  if (s == "gaussian") return KernelKind::gaussian;
  if (s == "polynomial") return KernelKind::polynomial;
  if (s == "linear") return KernelKind::linear;
  throw std::invalid_argument("unknown kernel kind: " + s);
}

RowMatrix matrix_from_json(const Json& j) {
  RowMatrix m;
  m.rows = j.at("rows").get<std::size_t>();
  m.cols = j.at("cols").get<std::size_t>();
  m.data = j.at("data").get<std::vector<double>>();
  if (m.data.size() != m.rows * m.cols) throw std::invalid_argument("matrix size mismatch");
  return m;
}

Json matrix_to_json(const RowMatrix& m) {
  return Json{{"rows", m.rows}, {"cols", m.cols}, {"data", m.data}};
}

}  // namespace

Json kernel_to_json(const KernelSpec& k) {
  return Json{{"kind", kernel_kind_name(k.kind)},
              {"sigma", k.sigma},
              {"degree", k.degree},
              {"offset", k.offset}};
}

KernelSpec kernel_from_json(const Json& j) {
  KernelSpec k;
  if (j.contains("kind")) k.kind = kind_from_name(j.at("kind").get<std::string>());
  if (j.contains("sigma")) k.sigma = j.at("sigma").get<double>();
  if (j.contains("degree")) k.degree = j.at("degree").get<int>();
  if (j.contains("offset")) k.offset = j.at("offset").get<double>();
  k.validate();
  return k;
}

Json expansion_to_json(const KernelExpansion& e) {
  return Json{{"kernel", kernel_to_json(e.kernel)},
              {"eta", e.eta},
              {"cap", e.cap},
              {"coeffs", e.coeffs},
              {"inputs", matrix_to_json(e.inputs)}};
}

KernelExpansion expansion_from_json(const Json& j) {
  KernelExpansion e;
  e.kernel = kernel_from_json(j.at("kernel"));
  e.eta = j.at("eta").get<double>();
  e.cap = j.at("cap").get<std::size_t>();
  e.coeffs = j.at("coeffs").get<std::vector<double>>();
  e.inputs = matrix_from_json(j.at("inputs"));
  if (e.coeffs.size() != e.inputs.rows) throw std::invalid_argument("dictionary size mismatch");
  return e;
}

Json combiner_to_json(const CombinerModel& m) {
  Json neurons = Json::array();
  for (const auto& n : m.neurons) neurons.push_back(expansion_to_json(n.expansion));
  return Json{{"num_base", m.num_base},
              {"num_classes", m.num_classes},
              {"passes", m.passes},
              {"neurons", neurons}};
}

CombinerModel combiner_from_json(const Json& j) {
  CombinerModel m;
  m.num_base = j.at("num_base").get<std::size_t>();
  m.num_classes = j.at("num_classes").get<std::size_t>();
  m.passes = j.at("passes").get<int>();
  for (const auto& nj : j.at("neurons")) {
    NeuronState n;
    n.expansion = expansion_from_json(nj);
    m.neurons.push_back(std::move(n));
  }
  if (m.neurons.size() != m.num_classes)
    throw std::invalid_argument("neuron count mismatch");
  return m;
}

Json mlp_to_json(const MlpModel& m) {
  Json weights = Json::array();
  for (const auto& w : m.weights) weights.push_back(matrix_to_json(w));
  return Json{{"layer_sizes", m.layer_sizes}, {"weights", weights}, {"biases", m.biases}};
}

MlpModel mlp_from_json(const Json& j) {
  MlpModel m;
  m.layer_sizes = j.at("layer_sizes").get<std::vector<std::size_t>>();
  for (const auto& wj : j.at("weights")) m.weights.push_back(matrix_from_json(wj));
  m.biases = j.at("biases").get<std::vector<std::vector<double>>>();
  return m;
}

Json ensemble_to_json(const EnsembleModel& e) {
  Json members = Json::array();
  for (const auto& m : e.members) members.push_back(mlp_to_json(m));
  return Json{{"num_features", e.num_features},
              {"num_classes", e.num_classes},
              {"members", members}};
}

EnsembleModel ensemble_from_json(const Json& j) {
  EnsembleModel e;
  e.num_features = j.at("num_features").get<std::size_t>();
  e.num_classes = j.at("num_classes").get<std::size_t>();
  for (const auto& mj : j.at("members")) e.members.push_back(mlp_from_json(mj));
  return e;
}

Json templates_to_json(const DecisionTemplates& t) {
  Json arr = Json::array();
  for (const auto& m : t.templates) arr.push_back(matrix_to_json(m));
  return Json{{"templates", arr}, {"counts", t.counts}};
}

DecisionTemplates templates_from_json(const Json& j) {
  DecisionTemplates t;
  for (const auto& mj : j.at("templates")) t.templates.push_back(matrix_from_json(mj));
  t.counts = j.at("counts").get<std::vector<std::size_t>>();
  return t;
}

Json scaler_to_json(const MinMaxScaler& s) {
  return Json{{"min", s.min}, {"max", s.max}};
}

MinMaxScaler scaler_from_json(const Json& j) {
  MinMaxScaler s;
  s.min = j.at("min").get<std::vector<double>>();
  s.max = j.at("max").get<std::vector<double>>();
  return s;
}

Json foldplan_to_json(const FoldPlan& p) {
  Json folds = Json::array();
  for (const auto& f : p.folds)
    folds.push_back(Json{{"test", f.test_indices}, {"train", f.train_indices}});
  return Json{{"kind", protocol_kind_name(p.kind)}, {"folds", folds}};
}

Json experiment_config_to_json(const ExperimentConfig& c) {
  Json protocol;
  protocol["kind"] =
      c.protocol.override_kind ? protocol_kind_name(*c.protocol.override_kind) : "auto";
  protocol["window"] = c.protocol.window;
  protocol["train_fraction"] = c.protocol.train_fraction;
  return Json{{"ensemble",
               {{"count", c.ensemble.count},
                {"hidden_sizes", c.ensemble.hidden_sizes},
                {"epochs", c.ensemble.epochs},
                {"learn_rate", c.ensemble.learn_rate}}},
              {"combiner",
               {{"kernel", kernel_to_json(c.combiner.kernel)},
                {"eta", c.combiner.eta},
                {"cap", c.combiner.cap},
                {"passes", c.combiner.passes}}},
              {"protocol", protocol},
              {"fit_scaler_on_train", c.fit_scaler_on_train},
              {"seed", c.seed}};
}

ExperimentConfig experiment_config_from_json(const Json& j) {
  ExperimentConfig c;
  if (j.contains("ensemble")) {
    const Json& e = j.at("ensemble");
    if (e.contains("count")) c.ensemble.count = e.at("count").get<std::size_t>();
    if (e.contains("hidden_sizes"))
      c.ensemble.hidden_sizes = e.at("hidden_sizes").get<std::vector<std::size_t>>();
    if (e.contains("epochs")) c.ensemble.epochs = e.at("epochs").get<int>();
    if (e.contains("learn_rate")) c.ensemble.learn_rate = e.at("learn_rate").get<double>();
  }
  if (j.contains("combiner")) {
    const Json& k = j.at("combiner");
    if (k.contains("kernel")) c.combiner.kernel = kernel_from_json(k.at("kernel"));
    if (k.contains("eta")) c.combiner.eta = k.at("eta").get<double>();
    if (k.contains("cap")) c.combiner.cap = k.at("cap").get<std::size_t>();
    if (k.contains("passes")) c.combiner.passes = k.at("passes").get<int>();
  }
  if (j.contains("protocol")) {
    const Json& p = j.at("protocol");
    if (p.contains("kind")) {
      const std::string kind = p.at("kind").get<std::string>();
      if (kind == "holdout") c.protocol.override_kind = ProtocolKind::holdout;
      else if (kind == "window_cv") c.protocol.override_kind = ProtocolKind::window_cv;
      else if (kind == "loo") c.protocol.override_kind = ProtocolKind::loo;
      else if (kind != "auto") throw std::invalid_argument("unknown protocol kind: " + kind);
    }
    if (p.contains("window")) c.protocol.window = p.at("window").get<std::size_t>();
    if (p.contains("train_fraction"))
      c.protocol.train_fraction = p.at("train_fraction").get<double>();
  }
  if (j.contains("fit_scaler_on_train"))
    c.fit_scaler_on_train = j.at("fit_scaler_on_train").get<bool>();
  if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("jobs")) c.jobs = j.at("jobs").get<int>();
  return c;
}

Json report_to_json(const FusionReport& r) {
  Json methods;
  for (std::size_t m = 0; m < kNumMethods; ++m) {
    methods[kMethodNames[m]] = Json{
        {"error_pct", r.method_error_pct[m]},
        {"confusion", r.method_confusion[m].counts},
    };
  }
  return Json{{"dataset", r.dataset},
              {"protocol", r.protocol},
              {"folds_run", r.folds_run},
              {"folds_skipped", r.folds_skipped},
              {"samples_evaluated", r.samples_evaluated},
              {"method_order", kMethodNames},
              {"methods", methods},
              {"base_classifier_error_pct", r.member_error_pct},
              {"config_fingerprint", Json::parse(r.config_fingerprint)},
              {"warnings", r.warnings}};
}

Json bundle_to_json(const ModelBundle& b) {
  return Json{{"format", "nnklms-model"},
              {"version", 1},
              {"dataset", b.dataset_name},
              {"label_names", b.label_names},
              {"scaler", scaler_to_json(b.scaler)},
              {"ensemble", ensemble_to_json(b.ensemble)},
              {"combiner", combiner_to_json(b.combiner)},
              {"templates", templates_to_json(b.templates)},
              {"train_indices", b.train_indices},
              {"test_indices", b.test_indices}};
}

ModelBundle bundle_from_json(const Json& j) {
  if (!j.contains("format") || j.at("format").get<std::string>() != "nnklms-model")
    throw std::invalid_argument("not a model file");
  ModelBundle b;
  b.dataset_name = j.at("dataset").get<std::string>();
  b.label_names = j.at("label_names").get<std::vector<std::string>>();
  b.scaler = scaler_from_json(j.at("scaler"));
  b.ensemble = ensemble_from_json(j.at("ensemble"));
  b.combiner = combiner_from_json(j.at("combiner"));
  b.templates = templates_from_json(j.at("templates"));
  b.train_indices = j.at("train_indices").get<std::vector<std::size_t>>();
  b.test_indices = j.at("test_indices").get<std::vector<std::size_t>>();
  return b;
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
  if (!out) throw std::runtime_error("write failed: " + path);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
  return j;
}

}  // namespace nnklms
