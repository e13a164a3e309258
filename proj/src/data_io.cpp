#include "nnklms/data_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "nnklms/rng.hpp"

namespace nnklms {

namespace {

bool is_missing(const std::string& field) {
  return field.empty() || field == "?" || field == "NA";
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_fields(const std::string& line, char delim) {
  std::vector<std::string> out;
  if (delim == ' ') {
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
  }
  std::string cur;
  for (char ch : line) {
    if (ch == delim) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(trim(cur));
  return out;
}

double parse_number(const std::string& field, const std::string& path, std::size_t line_no) {
  char* end = nullptr;
  const double v = std::strtod(field.c_str(), &end);
  if (end == field.c_str() || *end != '\0')
    throw std::runtime_error(path + ":" + std::to_string(line_no) + ": non-numeric feature '" +
                             field + "'");
  return v;
}

}  // namespace

Dataset load_csv(const std::string& path, const CsvSchema& schema) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);

  std::vector<std::vector<std::string>> rows;
  std::string line;
  std::size_t line_no = 0;
  bool header_pending = schema.has_header;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    if (header_pending) {
      header_pending = false;
      continue;
    }
    rows.push_back(split_fields(line, schema.delimiter));
    if (rows.back().size() != rows.front().size())
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": ragged row");
  }
  if (rows.empty()) throw std::runtime_error("empty dataset: " + path);

  const std::size_t width = rows.front().size();
  if (width < 2) throw std::runtime_error("need at least one feature and a label: " + path);
  std::size_t label_col;
  if (schema.label_column >= 0) {
    label_col = static_cast<std::size_t>(schema.label_column);
  } else {
    const long long idx = static_cast<long long>(width) + schema.label_column;
    if (idx < 0) throw std::runtime_error("label column out of range");
    label_col = static_cast<std::size_t>(idx);
  }
  if (label_col >= width) throw std::runtime_error("label column out of range");
  const std::size_t fn = width - 1;

  // first pass: flag missing, collect sums for imputation
  std::vector<bool> row_has_missing(rows.size(), false);
  std::vector<double> col_sum(fn, 0.0);
  std::vector<std::size_t> col_count(fn, 0);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::size_t f = 0;
    for (std::size_t c = 0; c < width; ++c) {
      if (c == label_col) {
        if (is_missing(rows[r][c])) row_has_missing[r] = true;  // label can't be imputed
        continue;
      }
      if (is_missing(rows[r][c])) {
        if (schema.missing == MissingPolicy::drop) row_has_missing[r] = true;
      } else {
        col_sum[f] += parse_number(rows[r][c], path, r + 1);
        ++col_count[f];
      }
      ++f;
    }
  }
  std::vector<double> col_mean(fn, 0.0);
  for (std::size_t f = 0; f < fn; ++f)
    if (col_count[f] > 0) col_mean[f] = col_sum[f] / static_cast<double>(col_count[f]);

  Dataset d;
  d.name = path;
  std::map<std::string, int> label_ids;
  std::vector<double> feat;
  feat.reserve(fn);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (row_has_missing[r]) continue;
    feat.clear();
    std::size_t f = 0;
    for (std::size_t c = 0; c < width; ++c) {
      if (c == label_col) continue;
      if (is_missing(rows[r][c]))
        feat.push_back(col_mean[f]);
      else
        feat.push_back(parse_number(rows[r][c], path, r + 1));
      ++f;
    }
    const std::string& lab = rows[r][label_col];
    auto [it, inserted] = label_ids.try_emplace(lab, static_cast<int>(d.label_names.size()));
    if (inserted) d.label_names.push_back(lab);
    d.labels.push_back(it->second);
    d.features.data.insert(d.features.data.end(), feat.begin(), feat.end());
    ++d.features.rows;
  }
  d.features.cols = fn;
  d.num_classes = d.label_names.size();
  if (d.features.rows == 0) throw std::runtime_error("empty dataset: " + path);
  return d;
}

MinMaxScaler minmax_fit(const RowMatrix& rows) {
  if (rows.rows == 0) throw std::invalid_argument("empty training set");
  MinMaxScaler s;
  s.min.assign(rows.row(0), rows.row(0) + rows.cols);
  s.max = s.min;
  for (std::size_t i = 1; i < rows.rows; ++i)
    for (std::size_t j = 0; j < rows.cols; ++j) {
      s.min[j] = std::min(s.min[j], rows(i, j));
      s.max[j] = std::max(s.max[j], rows(i, j));
    }
  return s;
}

void minmax_apply(const MinMaxScaler& s, RowMatrix& rows) {
  if (rows.cols != s.min.size()) throw std::invalid_argument("dimension mismatch");
  for (std::size_t j = 0; j < rows.cols; ++j) {
    const double range = s.max[j] - s.min[j];
    for (std::size_t i = 0; i < rows.rows; ++i)
      rows(i, j) = range > 0.0 ? (rows(i, j) - s.min[j]) / range : 0.0;
  }
}

Dataset normalize_minmax(const Dataset& d) {
  Dataset out = d;
  minmax_apply(minmax_fit(d.features), out.features);
  return out;
}

FoldPlan holdout_split(const Dataset& d, double train_fraction, std::uint64_t seed) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0))
    throw std::invalid_argument("train fraction outside (0,1)");
  std::vector<std::vector<std::size_t>> by_class(d.num_classes);
  for (std::size_t i = 0; i < d.labels.size(); ++i)
    by_class[static_cast<std::size_t>(d.labels[i])].push_back(i);

  Fold fold;
  Rng rng(seed);
  for (auto& members : by_class) {
    if (members.size() < 2)
      throw std::invalid_argument("class with fewer than 2 samples cannot stratify");
    rng.shuffle(members);
    const auto want = static_cast<std::size_t>(
        std::llround(train_fraction * static_cast<double>(members.size())));
    const std::size_t take = std::clamp<std::size_t>(want, 1, members.size() - 1);
    fold.train_indices.insert(fold.train_indices.end(), members.begin(), members.begin() + take);
    fold.test_indices.insert(fold.test_indices.end(), members.begin() + take, members.end());
  }
  std::sort(fold.train_indices.begin(), fold.train_indices.end());
  std::sort(fold.test_indices.begin(), fold.test_indices.end());

  FoldPlan plan;
  plan.kind = ProtocolKind::holdout;
  plan.folds.push_back(std::move(fold));
  return plan;
}

FoldPlan window_cv(std::size_t n, std::size_t m) {
  if (m < 1 || m >= n) throw std::invalid_argument("window size outside [1, n)");
  FoldPlan plan;
  plan.kind = ProtocolKind::window_cv;
  for (std::size_t start = 0; start < n; start += m) {
    const std::size_t stop = std::min(start + m, n);
    Fold fold;
    for (std::size_t i = start; i < stop; ++i) fold.test_indices.push_back(i);
    for (std::size_t i = 0; i < n; ++i)
      if (i < start || i >= stop) fold.train_indices.push_back(i);
    plan.folds.push_back(std::move(fold));
  }
  return plan;
}

FoldPlan leave_one_out(std::size_t n) {
  FoldPlan plan = window_cv(n, 1);
  plan.kind = ProtocolKind::loo;
  return plan;
}

FoldPlan choose_protocol(const Dataset& d, const ProtocolConfig& cfg) {
  const std::size_t n = d.size();
  ProtocolKind kind;
  if (cfg.override_kind) {
    kind = *cfg.override_kind;
  } else if (n < 200) {
    kind = ProtocolKind::loo;
  } else if (n < 500) {
    kind = ProtocolKind::window_cv;
  } else {
    kind = ProtocolKind::holdout;
  }
  switch (kind) {
    case ProtocolKind::loo: return leave_one_out(n);
    case ProtocolKind::window_cv: return window_cv(n, cfg.window);
    case ProtocolKind::holdout: return holdout_split(d, cfg.train_fraction, cfg.seed);
  }
  throw std::logic_error("unreachable");
}

const char* protocol_kind_name(ProtocolKind k) {
  switch (k) {
    case ProtocolKind::holdout: return "holdout";
    case ProtocolKind::window_cv: return "window_cv";
    case ProtocolKind::loo: return "loo";
  }
  return "?";
}

std::string protocol_label(const FoldPlan& plan, const ProtocolConfig& cfg) {
  switch (plan.kind) {
    case ProtocolKind::holdout: {
      std::ostringstream os;
      os << "holdout(" << cfg.train_fraction << ")";
      return os.str();
    }
    case ProtocolKind::window_cv: {
      std::ostringstream os;
      os << "window_cv(m=" << cfg.window << ")";
      return os.str();
    }
    case ProtocolKind::loo: return "loo";
  }
  return "?";
}

}  // namespace nnklms
