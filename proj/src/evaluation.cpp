#include "nnklms/evaluation.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "nnklms/model_io.hpp"
#include "nnklms/rng.hpp"

namespace nnklms {

const std::array<const char*, kNumMethods> kMethodNames = {
    "VT", "DS", "DTED", "DTSD", "SM", "MAX", "PT", "MIN", "NNKLMS"};

void ConfusionMatrix::add(int truth, int pred) {
  if (truth < 0 || pred < 0 || static_cast<std::size_t>(truth) >= num_classes ||
      static_cast<std::size_t>(pred) >= num_classes)
    throw std::invalid_argument("class index out of range");
  ++counts[static_cast<std::size_t>(truth) * num_classes + static_cast<std::size_t>(pred)];
}

void ConfusionMatrix::merge(const ConfusionMatrix& other) {
  if (num_classes == 0) {
    *this = other;
    return;
  }
  if (other.num_classes != num_classes) throw std::invalid_argument("dimension mismatch");
  for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
}

std::size_t ConfusionMatrix::total() const {
  std::size_t t = 0;
  for (std::size_t v : counts) t += v;
  return t;
}

std::size_t ConfusionMatrix::correct() const {
  std::size_t t = 0;
  for (std::size_t i = 0; i < num_classes; ++i) t += at(i, i);
  return t;
}

double ConfusionMatrix::error_rate() const {
  const std::size_t n = total();
  if (n == 0) return 0.0;
  return 1.0 - static_cast<double>(correct()) / static_cast<double>(n);
}

ConfusionMatrix confusion(const std::vector<int>& preds, const std::vector<int>& labels,
                          std::size_t num_classes) {
  if (preds.size() != labels.size()) throw std::invalid_argument("length mismatch");
  ConfusionMatrix m(num_classes);
  for (std::size_t i = 0; i < preds.size(); ++i) m.add(labels[i], preds[i]);
  return m;
}

namespace {

void apply_scaler_row(const MinMaxScaler& s, std::vector<double>& row) {
  for (std::size_t j = 0; j < row.size(); ++j) {
    const double range = s.max[j] - s.min[j];
    row[j] = range > 0.0 ? (row[j] - s.min[j]) / range : 0.0;
  }
}

}  // namespace

FoldResult run_fold(const std::vector<std::size_t>& train_idx,
                    const std::vector<std::size_t>& test_idx, const Dataset& d,
                    const ExperimentConfig& cfg, std::size_t fold_index, bool keep_models) {
  FoldResult res;
  const std::size_t fn = d.num_features();
  const std::size_t cn = d.num_classes;

  RowMatrix train(train_idx.size(), fn);
  std::vector<int> train_labels(train_idx.size());
  std::vector<bool> seen(cn, false);
  for (std::size_t i = 0; i < train_idx.size(); ++i) {
    const double* src = d.features.row(train_idx[i]);
    std::copy(src, src + fn, train.row(i));
    train_labels[i] = d.labels[train_idx[i]];
    seen[static_cast<std::size_t>(train_labels[i])] = true;
  }
  for (std::size_t c = 0; c < cn; ++c) {
    if (!seen[c]) {
      res.skipped = true;
      res.warning = "fold " + std::to_string(fold_index) + " skipped: class " +
                    std::to_string(c) + " absent from training rows";
      return res;
    }
  }

  MinMaxScaler scaler;
  if (cfg.fit_scaler_on_train) {
    scaler = minmax_fit(train);
    minmax_apply(scaler, train);
  }

  EnsembleConfig ecfg = cfg.ensemble;
  ecfg.seed = mix_seed(cfg.seed, 2 * fold_index);
  const EnsembleModel ensemble = ensemble_build(ecfg, train, train_labels, cn);

  std::vector<DecisionProfile> train_profiles;
  train_profiles.reserve(train.rows);
  for (std::size_t i = 0; i < train.rows; ++i)
    train_profiles.push_back(decision_profile(ensemble, train.row(i), fn));

  CombinerConfig ccfg = cfg.combiner;
  ccfg.seed = mix_seed(cfg.seed, 2 * fold_index + 1);
  const CombinerModel combiner = combiner_train(train_profiles, train_labels, ccfg);
  const DecisionTemplates templates = dt_build(train_profiles, train_labels, cn);

  res.truth.reserve(test_idx.size());
  for (auto& v : res.preds) v.reserve(test_idx.size());
  res.member_preds.assign(ensemble.members.size(), {});

  std::vector<double> row(fn);
  for (std::size_t t : test_idx) {
    const double* src = d.features.row(t);
    row.assign(src, src + fn);
    if (cfg.fit_scaler_on_train) apply_scaler_row(scaler, row);
    const DecisionProfile profile = decision_profile(ensemble, row.data(), fn);

    res.truth.push_back(d.labels[t]);
    res.preds[VT].push_back(vote(profile));
    res.preds[DS].push_back(ds_predict(templates, profile));
    res.preds[DTED].push_back(dt_predict_euclidean(templates, profile));
    res.preds[DTSD].push_back(dt_predict_symdiff(templates, profile));
    res.preds[SM].push_back(mean_rule(profile));
    res.preds[MAX].push_back(max_rule(profile));
    res.preds[PT].push_back(product_rule(profile));
    res.preds[MIN].push_back(min_rule(profile));
    res.preds[NNKLMS].push_back(combiner_predict(combiner, profile).cls);
    for (std::size_t b = 0; b < ensemble.members.size(); ++b)
      res.member_preds[b].push_back(
          static_cast<int>(argmax_lowest(profile.row(b), profile.cols)));
  }

  if (keep_models) {
    res.models = std::make_unique<FoldModels>();
    res.models->ensemble = ensemble;
    res.models->combiner = combiner;
    res.models->templates = templates;
    res.models->scaler = scaler;
    res.models->scaler_fitted = cfg.fit_scaler_on_train;
  }
  return res;
}

ExperimentResult run_experiment_full(const Dataset& d, const ExperimentConfig& cfg,
                                     bool keep_fold0_models) {
  ExperimentResult out;

  ProtocolConfig pcfg = cfg.protocol;
  pcfg.seed = mix_seed(cfg.seed, 0x70726f74);  // protocol stream
  const Dataset data = cfg.fit_scaler_on_train ? d : normalize_minmax(d);
  out.plan = choose_protocol(data, pcfg);

  const std::size_t nfolds = out.plan.folds.size();
  out.folds.resize(nfolds);
  const int jobs = std::max(1, cfg.jobs);
  if (jobs == 1 || nfolds <= 1) {
    for (std::size_t f = 0; f < nfolds; ++f)
      out.folds[f] = run_fold(out.plan.folds[f].train_indices, out.plan.folds[f].test_indices,
                              data, cfg, f, keep_fold0_models && f == 0);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mu;
    auto worker = [&] {
      for (;;) {
        const std::size_t f = next.fetch_add(1);
        if (f >= nfolds) return;
        try {
          out.folds[f] =
              run_fold(out.plan.folds[f].train_indices, out.plan.folds[f].test_indices, data,
                       cfg, f, keep_fold0_models && f == 0);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!first_error) first_error = std::current_exception();
        }
      }
    };
    std::vector<std::thread> pool;
    const std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(jobs), nfolds);
    pool.reserve(nthreads);
    for (std::size_t i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  FusionReport& rep = out.report;
  rep.dataset = d.name;
  rep.protocol = protocol_label(out.plan, cfg.protocol);
  for (auto& m : rep.method_confusion) m = ConfusionMatrix(d.num_classes);
  rep.member_confusion.assign(cfg.ensemble.count, ConfusionMatrix(d.num_classes));

  for (const FoldResult& fr : out.folds) {
    if (fr.skipped) {
      ++rep.folds_skipped;
      rep.warnings.push_back(fr.warning);
      continue;
    }
    ++rep.folds_run;
    rep.samples_evaluated += fr.truth.size();
    for (std::size_t m = 0; m < kNumMethods; ++m)
      rep.method_confusion[m].merge(confusion(fr.preds[m], fr.truth, d.num_classes));
    for (std::size_t b = 0; b < fr.member_preds.size(); ++b)
      rep.member_confusion[b].merge(confusion(fr.member_preds[b], fr.truth, d.num_classes));
  }
  if (rep.samples_evaluated == 0) throw std::runtime_error("all folds failed");

  for (std::size_t m = 0; m < kNumMethods; ++m)
    rep.method_error_pct[m] = 100.0 * rep.method_confusion[m].error_rate();
  rep.member_error_pct.reserve(rep.member_confusion.size());
  for (const auto& mc : rep.member_confusion)
    rep.member_error_pct.push_back(100.0 * mc.error_rate());

  nlohmann::ordered_json fp;
  fp["dataset"] = {{"name", d.name},
                   {"samples", d.size()},
                   {"features", d.num_features()},
                   {"classes", d.num_classes}};
  fp["config"] = experiment_config_to_json(cfg);
  fp["protocol"] = rep.protocol;
  rep.config_fingerprint = fp.dump();
  return out;
}

FusionReport run_experiment(const Dataset& d, const ExperimentConfig& cfg) {
  return run_experiment_full(d, cfg).report;
}

std::string report_table(const FusionReport& r) {
  std::ostringstream os;
  os << "== " << r.dataset << "  (" << r.protocol << ", " << r.samples_evaluated
     << " samples, " << r.folds_run << " folds";
  if (r.folds_skipped > 0) os << ", " << r.folds_skipped << " skipped";
  os << ") ==\n";
  char buf[32];
  for (std::size_t m = 0; m < kNumMethods; ++m) {
    std::snprintf(buf, sizeof buf, "%8s", kMethodNames[m]);
    os << buf;
  }
  os << "\n";
  for (std::size_t m = 0; m < kNumMethods; ++m) {
    std::snprintf(buf, sizeof buf, "%8.2f", r.method_error_pct[m]);
    os << buf;
  }
  os << "\n";
  os << "base classifiers (error %):";
  for (std::size_t b = 0; b < r.member_error_pct.size(); ++b) {
    std::snprintf(buf, sizeof buf, " %.2f", r.member_error_pct[b]);
    os << buf;
  }
  os << "\n";
  return os.str();
}

std::string confusion_table(const ConfusionMatrix& m, const std::vector<std::string>& names) {
  std::ostringstream os;
  char buf[64];
  os << "true\\pred";
  for (std::size_t c = 0; c < m.num_classes; ++c) {
    const std::string& n = c < names.size() ? names[c] : std::to_string(c);
    std::snprintf(buf, sizeof buf, " %10s", n.c_str());
    os << buf;
  }
  os << "\n";
  for (std::size_t t = 0; t < m.num_classes; ++t) {
    const std::string& n = t < names.size() ? names[t] : std::to_string(t);
    std::snprintf(buf, sizeof buf, "%-9s", n.c_str());
    os << buf;
    for (std::size_t p = 0; p < m.num_classes; ++p) {
      std::snprintf(buf, sizeof buf, " %10zu", m.at(t, p));
      os << buf;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace nnklms
