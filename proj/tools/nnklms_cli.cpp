// Command-line front end: run one experiment, benchmark the bundled datasets
// against every fusion method, or inspect a serialized model.

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nnklms/evaluation.hpp"
#include "nnklms/model_io.hpp"

namespace fs = std::filesystem;
using nnklms::Json;

namespace {

struct DatasetRef {
  std::string path;
  std::string name;  // defaults to the file stem
  nnklms::CsvSchema schema;
};

DatasetRef dataset_ref_from_json(const Json& j) {
  DatasetRef ref;
  ref.path = j.at("path").get<std::string>();
  ref.name = j.contains("name") ? j.at("name").get<std::string>() : fs::path(ref.path).stem().string();
  if (j.contains("label_column")) ref.schema.label_column = j.at("label_column").get<int>();
  if (j.contains("delimiter")) {
    const std::string d = j.at("delimiter").get<std::string>();
    if (d.size() != 1) throw std::invalid_argument("delimiter must be one character");
    ref.schema.delimiter = d[0];
  }
  if (j.contains("has_header")) ref.schema.has_header = j.at("has_header").get<bool>();
  if (j.contains("missing")) {
    const std::string m = j.at("missing").get<std::string>();
    if (m == "drop") ref.schema.missing = nnklms::MissingPolicy::drop;
    else if (m == "impute-mean") ref.schema.missing = nnklms::MissingPolicy::impute_mean;
    else throw std::invalid_argument("missing policy must be drop or impute-mean");
  }
  return ref;
}

Json dataset_ref_to_json(const DatasetRef& ref) {
  return Json{{"path", ref.path},
              {"name", ref.name},
              {"label_column", ref.schema.label_column},
              {"delimiter", std::string(1, ref.schema.delimiter)},
              {"has_header", ref.schema.has_header},
              {"missing",
               ref.schema.missing == nnklms::MissingPolicy::drop ? "drop" : "impute-mean"}};
}

nnklms::Dataset load_dataset(const DatasetRef& ref) {
  nnklms::Dataset d = nnklms::load_csv(ref.path, ref.schema);
  d.name = ref.name;
  return d;
}

Json fold_confusions_json(const nnklms::ExperimentResult& result, std::size_t num_classes) {
  Json folds = Json::array();
  for (std::size_t f = 0; f < result.folds.size(); ++f) {
    const auto& fr = result.folds[f];
    Json entry;
    entry["fold"] = f;
    if (fr.skipped) {
      entry["skipped"] = true;
      entry["warning"] = fr.warning;
    } else {
      Json per_method;
      for (std::size_t m = 0; m < nnklms::kNumMethods; ++m)
        per_method[nnklms::kMethodNames[m]] =
            nnklms::confusion(fr.preds[m], fr.truth, num_classes).counts;
      entry["confusion"] = per_method;
    }
    folds.push_back(std::move(entry));
  }
  return folds;
}

struct RunOutput {
  nnklms::FusionReport report;
  bool model_written = false;
};

RunOutput do_run(const DatasetRef& ref, const nnklms::ExperimentConfig& cfg,
                 const std::string& out_dir) {
  const nnklms::Dataset raw = load_dataset(ref);
  fs::create_directories(out_dir);
  nnklms::ExperimentResult result = nnklms::run_experiment_full(raw, cfg, true);

  nnklms::write_json_file(out_dir + "/report.json", nnklms::report_to_json(result.report));
  {
    std::ofstream txt(out_dir + "/report.txt");
    txt << nnklms::report_table(result.report);
  }
  Json folds;
  folds["plan"] = nnklms::foldplan_to_json(result.plan);
  folds["confusions"] = fold_confusions_json(result, raw.num_classes);
  nnklms::write_json_file(out_dir + "/folds.json", folds);

  Json resolved;
  resolved["dataset"] = dataset_ref_to_json(ref);
  resolved["experiment"] = nnklms::experiment_config_to_json(cfg);
  resolved["jobs"] = cfg.jobs;
  nnklms::write_json_file(out_dir + "/config.json", resolved);

  RunOutput out;
  out.report = result.report;
  for (const auto& fr : result.folds) {
    if (fr.skipped || !fr.models) continue;
    nnklms::ModelBundle bundle;
    bundle.dataset_name = raw.name;
    bundle.label_names = raw.label_names;
    bundle.ensemble = fr.models->ensemble;
    bundle.combiner = fr.models->combiner;
    bundle.templates = fr.models->templates;
    bundle.scaler =
        fr.models->scaler_fitted ? fr.models->scaler : nnklms::minmax_fit(raw.features);
    bundle.train_indices = result.plan.folds.front().train_indices;
    bundle.test_indices = result.plan.folds.front().test_indices;
    nnklms::write_json_file(out_dir + "/model.json", nnklms::bundle_to_json(bundle));
    out.model_written = true;
    break;
  }
  return out;
}

std::vector<DatasetRef> default_bench_refs(const std::string& data_dir) {
  // Table layout order; rows whose file is absent are skipped with a warning.
  std::vector<DatasetRef> refs;
  for (const char* name :
       {"ocr", "breast", "iris", "glass", "wine", "wpbc", "diabetes", "heart"}) {
    DatasetRef ref;
    ref.path = data_dir + "/" + name + ".csv";
    ref.name = name;
    refs.push_back(std::move(ref));
  }
  return refs;
}

int do_bench(const std::vector<DatasetRef>& refs, const nnklms::ExperimentConfig& base_cfg,
             const std::string& reference_path, const std::string& out_dir) {
  std::optional<Json> reference;
  if (!reference_path.empty()) reference = nnklms::read_json_file(reference_path);

  fs::create_directories(out_dir);
  Json rows = Json::array();
  std::ostringstream table;
  char buf[64];
  table << "dataset   ";
  for (std::size_t m = 0; m < nnklms::kNumMethods; ++m) {
    std::snprintf(buf, sizeof buf, "%8s", nnklms::kMethodNames[m]);
    table << buf;
  }
  table << "\n";

  std::size_t ran = 0;
  for (const auto& ref : refs) {
    if (!fs::exists(ref.path)) {
      std::cerr << "warning: " << ref.path << " missing, row skipped\n";
      continue;
    }
    nnklms::FusionReport report;
    try {
      report = nnklms::run_experiment(load_dataset(ref), base_cfg);
    } catch (const std::exception& e) {
      std::cerr << "warning: " << ref.name << " failed (" << e.what() << "), row skipped\n";
      continue;
    }
    ++ran;

    std::snprintf(buf, sizeof buf, "%-10s", ref.name.c_str());
    table << buf;
    for (std::size_t m = 0; m < nnklms::kNumMethods; ++m) {
      std::snprintf(buf, sizeof buf, "%8.2f", report.method_error_pct[m]);
      table << buf;
    }
    table << "\n";

    Json row;
    row["dataset"] = ref.name;
    row["protocol"] = report.protocol;
    Json measured;
    for (std::size_t m = 0; m < nnklms::kNumMethods; ++m)
      measured[nnklms::kMethodNames[m]] = report.method_error_pct[m];
    row["measured"] = measured;

    if (reference && reference->at("datasets").contains(ref.name)) {
      const auto& method_names = reference->at("methods");
      const auto& vals = reference->at("datasets").at(ref.name);
      Json ref_vals, delta_vals;
      std::array<double, nnklms::kNumMethods> ref_by_col{};
      std::array<bool, nnklms::kNumMethods> have{};
      for (std::size_t i = 0; i < method_names.size() && i < vals.size(); ++i) {
        const std::string name = method_names[i].get<std::string>();
        for (std::size_t m = 0; m < nnklms::kNumMethods; ++m) {
          if (name == nnklms::kMethodNames[m]) {
            ref_by_col[m] = vals[i].get<double>();
            have[m] = true;
          }
        }
      }
      table << "  ref     ";
      for (std::size_t m = 0; m < nnklms::kNumMethods; ++m) {
        if (have[m]) std::snprintf(buf, sizeof buf, "%8.2f", ref_by_col[m]);
        else std::snprintf(buf, sizeof buf, "%8s", "-");
        table << buf;
      }
      table << "\n  delta   ";
      for (std::size_t m = 0; m < nnklms::kNumMethods; ++m) {
        if (have[m]) {
          std::snprintf(buf, sizeof buf, "%+8.2f", report.method_error_pct[m] - ref_by_col[m]);
          ref_vals[nnklms::kMethodNames[m]] = ref_by_col[m];
          delta_vals[nnklms::kMethodNames[m]] = report.method_error_pct[m] - ref_by_col[m];
        } else {
          std::snprintf(buf, sizeof buf, "%8s", "-");
        }
        table << buf;
      }
      table << "\n";
      row["reference"] = ref_vals;
      row["delta"] = delta_vals;
    }
    rows.push_back(std::move(row));
  }

  if (ran == 0) {
    std::cerr << "error: no dataset could be benchmarked\n";
    return 1;
  }
  std::cout << table.str();
  {
    std::ofstream txt(out_dir + "/bench.txt");
    txt << table.str();
  }
  nnklms::write_json_file(out_dir + "/bench.json", rows);
  return 0;
}

int do_inspect(const std::string& model_path, const DatasetRef& ref, const std::string& rows) {
  const nnklms::ModelBundle bundle =
      nnklms::bundle_from_json(nnklms::read_json_file(model_path));
  nnklms::Dataset d = load_dataset(ref);

  std::vector<std::size_t> idx;
  if (rows == "all") {
    idx.resize(d.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  } else if (rows == "train") {
    idx = bundle.train_indices;
  } else if (rows == "test") {
    idx = bundle.test_indices;
  } else {
    throw std::invalid_argument("--rows must be all, train or test");
  }
  for (std::size_t i : idx)
    if (i >= d.size()) throw std::invalid_argument("model fold indices exceed dataset size");

  const std::size_t cn = bundle.ensemble.num_classes;
  std::vector<int> truth;
  std::vector<int> comb_preds;
  std::vector<std::vector<int>> member_preds(bundle.ensemble.members.size());
  std::vector<double> row(d.num_features());
  for (std::size_t i : idx) {
    const double* src = d.features.row(i);
    row.assign(src, src + d.num_features());
    for (std::size_t j = 0; j < row.size(); ++j) {
      const double range = bundle.scaler.max[j] - bundle.scaler.min[j];
      row[j] = range > 0.0 ? (row[j] - bundle.scaler.min[j]) / range : 0.0;
    }
    const nnklms::DecisionProfile profile =
        nnklms::decision_profile(bundle.ensemble, row.data(), row.size());
    truth.push_back(d.labels[i]);
    comb_preds.push_back(nnklms::combiner_predict(bundle.combiner, profile).cls);
    for (std::size_t b = 0; b < member_preds.size(); ++b)
      member_preds[b].push_back(
          static_cast<int>(nnklms::argmax_lowest(profile.row(b), profile.cols)));
  }

  const auto comb_cm = nnklms::confusion(comb_preds, truth, cn);
  std::cout << "model: " << model_path << "  dataset: " << d.name << "  rows: " << rows << " ("
            << idx.size() << " samples)\n\n";
  std::cout << "combiner (error " << 100.0 * comb_cm.error_rate() << "%)\n"
            << nnklms::confusion_table(comb_cm, bundle.label_names) << "\n";
  for (std::size_t b = 0; b < member_preds.size(); ++b) {
    const auto cm = nnklms::confusion(member_preds[b], truth, cn);
    std::cout << "base classifier " << b + 1 << " (error " << 100.0 * cm.error_rate() << "%)\n"
              << nnklms::confusion_table(cm, bundle.label_names) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kernel-LMS neuron classifier combiner over an MLP ensemble"};
  app.require_subcommand(1);
  app.footer(
      "Config files are JSON. Run config keys: dataset{path,name,label_column,delimiter,"
      "has_header,missing}, ensemble{count,hidden_sizes,epochs,learn_rate}, combiner{kernel{"
      "kind,sigma,degree,offset},eta,cap,passes}, protocol{kind,window,train_fraction}, "
      "fit_scaler_on_train, seed, jobs. Bench config: {defaults:{...}, datasets:[{...}]}. "
      "Missing keys keep the defaults shown in --help.");

  std::optional<std::uint64_t> seed_flag;
  std::optional<int> jobs_flag;
  app.add_option("--seed", seed_flag, "Master seed override (default 1)");
  app.add_option("--jobs", jobs_flag, "Parallel folds (default 1; results independent of it)");

  auto* run = app.add_subcommand("run", "Run one experiment and write reports");
  std::string run_config, run_data, run_name, run_out = "out";
  int run_label_col = -1;
  std::string run_delim = ",";
  bool run_header = false;
  std::string run_missing = "drop";
  run->add_option("--config", run_config, "JSON run config")->check(CLI::ExistingFile);
  run->add_option("--data", run_data, "Dataset CSV (overrides config dataset path)");
  run->add_option("--name", run_name, "Dataset display name (default: file stem)");
  run->add_option("--out", run_out, "Output directory")->capture_default_str();
  run->add_option("--label-column", run_label_col, "Label column, negative counts from the end")
      ->capture_default_str();
  run->add_option("--delimiter", run_delim, "Field delimiter")->capture_default_str();
  run->add_flag("--header", run_header, "Skip a header row");
  run->add_option("--missing", run_missing, "Missing-value policy: drop | impute-mean")
      ->capture_default_str();

  auto* bench = app.add_subcommand("bench", "Benchmark all datasets, one table row each");
  std::string bench_config, bench_reference, bench_out = "out", bench_data_dir = "data";
  bench->add_option("--config", bench_config, "JSON bench config")->check(CLI::ExistingFile);
  bench->add_option("--reference", bench_reference, "Published reference errors JSON")
      ->check(CLI::ExistingFile);
  bench->add_option("--out", bench_out, "Output directory")->capture_default_str();
  bench->add_option("--data-dir", bench_data_dir, "Directory with the standard CSVs")
      ->capture_default_str();

  auto* inspect = app.add_subcommand("inspect", "Print confusion matrices of a saved model");
  std::string ins_model, ins_data, ins_rows = "test";
  inspect->add_option("--model", ins_model, "model.json written by run")
      ->required()
      ->check(CLI::ExistingFile);
  inspect->add_option("--data", ins_data, "Dataset CSV the model was trained on")->required();
  inspect->add_option("--rows", ins_rows, "Rows to evaluate: all | train | test")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      Json cfg_json = Json::object();
      if (!run_config.empty()) cfg_json = nnklms::read_json_file(run_config);
      nnklms::ExperimentConfig cfg = nnklms::experiment_config_from_json(cfg_json);
      if (seed_flag) cfg.seed = *seed_flag;
      if (jobs_flag) cfg.jobs = *jobs_flag;

      DatasetRef ref;
      if (cfg_json.contains("dataset")) ref = dataset_ref_from_json(cfg_json.at("dataset"));
      if (!run_data.empty()) {
        ref.path = run_data;
        ref.name = fs::path(run_data).stem().string();
        ref.schema.label_column = run_label_col;
        ref.schema.delimiter = run_delim.empty() ? ',' : run_delim[0];
        ref.schema.has_header = run_header;
        ref.schema.missing = run_missing == "impute-mean" ? nnklms::MissingPolicy::impute_mean
                                                          : nnklms::MissingPolicy::drop;
      }
      if (!run_name.empty()) ref.name = run_name;
      if (ref.path.empty())
        throw std::invalid_argument("no dataset: give --data or a config with a dataset entry");

      const RunOutput out = do_run(ref, cfg, run_out);
      std::cout << nnklms::report_table(out.report);
      std::cout << "wrote " << run_out << "/report.json, report.txt, folds.json, config.json"
                << (out.model_written ? ", model.json" : "") << "\n";
      return 0;
    }
    if (bench->parsed()) {
      nnklms::ExperimentConfig base_cfg;
      std::vector<DatasetRef> refs;
      if (!bench_config.empty()) {
        const Json j = nnklms::read_json_file(bench_config);
        base_cfg = nnklms::experiment_config_from_json(
            j.contains("defaults") ? j.at("defaults") : Json::object());
        if (j.contains("datasets"))
          for (const auto& dj : j.at("datasets")) refs.push_back(dataset_ref_from_json(dj));
      }
      if (refs.empty()) refs = default_bench_refs(bench_data_dir);
      if (seed_flag) base_cfg.seed = *seed_flag;
      if (jobs_flag) base_cfg.jobs = *jobs_flag;
      return do_bench(refs, base_cfg, bench_reference, bench_out);
    }
    if (inspect->parsed()) {
      DatasetRef ref;
      ref.path = ins_data;
      ref.name = fs::path(ins_data).stem().string();
      return do_inspect(ins_model, ref, ins_rows);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
