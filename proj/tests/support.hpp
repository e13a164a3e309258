// Shared helpers for the unit and acceptance suites: tolerance comparisons,
// a small Jacobi eigensolver, independent brute-force fusion oracles, and
// synthetic fixtures.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "nnklms/base_ensemble.hpp"
#include "nnklms/matrix.hpp"
#include "nnklms/rng.hpp"

namespace testsup {

inline bool near(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

// relative with a floor so near-zero values compare absolutely
inline bool rel_near(double a, double b, double tol, double floor = 1.0) {
  return std::fabs(a - b) <= tol * std::max({floor, std::fabs(a), std::fabs(b)});
}

// Cyclic Jacobi on a symmetric matrix; returns the smallest eigenvalue.
inline double min_symmetric_eigenvalue(std::vector<std::vector<double>> a) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-26) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::fabs(a[p][q]) < 1e-300) continue;
        const double phi = 0.5 * std::atan2(2.0 * a[p][q], a[q][q] - a[p][p]);
        const double c = std::cos(phi);
        const double s = std::sin(phi);
        const double app = a[p][p];
        const double aqq = a[q][q];
        const double apq = a[p][q];
        a[p][p] = c * c * app - 2.0 * s * c * apq + s * s * aqq;
        a[q][q] = s * s * app + 2.0 * s * c * apq + c * c * aqq;
        a[p][q] = a[q][p] = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = a[p][k] = c * akp - s * akq;
          a[k][q] = a[q][k] = s * akp + c * akq;
        }
      }
    }
  }
  double mn = a[0][0];
  for (std::size_t i = 1; i < n; ++i) mn = std::min(mn, a[i][i]);
  return mn;
}

// ---- brute-force fusion oracles -------------------------------------------
// Deliberately independent re-implementations over nested vectors. With the
// scalar simd backend forced, supports are built in the same summation order
// as the library, so decisions must agree bit-for-bit, ties included.
namespace oracle {

using Profile = std::vector<std::vector<double>>;

inline Profile to_nested(const nnklms::DecisionProfile& p) {
  Profile out(p.rows, std::vector<double>(p.cols));
  for (std::size_t i = 0; i < p.rows; ++i)
    for (std::size_t j = 0; j < p.cols; ++j) out[i][j] = p(i, j);
  return out;
}

inline int first_argmax(const std::vector<double>& v) {
  return static_cast<int>(std::max_element(v.begin(), v.end()) - v.begin());
}

inline int vote(const Profile& p) {
  std::vector<double> tally(p[0].size(), 0.0);
  for (const auto& row : p) tally[static_cast<std::size_t>(first_argmax(row))] += 1.0;
  return first_argmax(tally);
}

inline int mean_rule(const Profile& p) {
  std::vector<double> s(p[0].size());
  for (std::size_t c = 0; c < s.size(); ++c) {
    double acc = 0.0;
    for (const auto& row : p) acc += row[c];
    s[c] = acc / static_cast<double>(p.size());
  }
  return first_argmax(s);
}

inline int max_rule(const Profile& p) {
  std::vector<double> s(p[0].size());
  for (std::size_t c = 0; c < s.size(); ++c) {
    double acc = p[0][c];
    for (const auto& row : p) acc = std::max(acc, row[c]);
    s[c] = acc;
  }
  return first_argmax(s);
}

inline int min_rule(const Profile& p) {
  std::vector<double> s(p[0].size());
  for (std::size_t c = 0; c < s.size(); ++c) {
    double acc = p[0][c];
    for (const auto& row : p) acc = std::min(acc, row[c]);
    s[c] = acc;
  }
  return first_argmax(s);
}

inline int product_rule(const Profile& p) {
  std::vector<double> s(p[0].size());
  for (std::size_t c = 0; c < s.size(); ++c) {
    double acc = 1.0;
    for (const auto& row : p) acc *= row[c];
    s[c] = acc;
  }
  return first_argmax(s);
}

// templates[c] is a nested BN x CN matrix
inline std::vector<Profile> build_templates(const std::vector<Profile>& profiles,
                                            const std::vector<int>& labels, std::size_t cn) {
  const std::size_t bn = profiles[0].size();
  const std::size_t cols = profiles[0][0].size();
  std::vector<Profile> dt(cn, Profile(bn, std::vector<double>(cols, 0.0)));
  std::vector<std::size_t> count(cn, 0);
  for (std::size_t s = 0; s < profiles.size(); ++s) {
    for (std::size_t i = 0; i < bn; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        dt[static_cast<std::size_t>(labels[s])][i][j] += profiles[s][i][j];
    ++count[static_cast<std::size_t>(labels[s])];
  }
  for (std::size_t c = 0; c < cn; ++c)
    for (auto& row : dt[c])
      for (auto& v : row) v /= static_cast<double>(count[c]);
  return dt;
}

inline int dt_euclidean(const std::vector<Profile>& dt, const Profile& p) {
  std::vector<double> sim(dt.size());
  const double sz = static_cast<double>(p.size() * p[0].size());
  for (std::size_t c = 0; c < dt.size(); ++c) {
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < p[0].size(); ++j) {
        const double d = dt[c][i][j] - p[i][j];
        acc += d * d;
      }
    sim[c] = 1.0 - acc / sz;
  }
  return first_argmax(sim);
}

inline int dt_symdiff(const std::vector<Profile>& dt, const Profile& p) {
  std::vector<double> sim(dt.size());
  const double sz = static_cast<double>(p.size() * p[0].size());
  for (std::size_t c = 0; c < dt.size(); ++c) {
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < p[0].size(); ++j) {
        const double a = dt[c][i][j];
        const double b = p[i][j];
        acc += std::max(std::min(a, 1.0 - b), std::min(1.0 - a, b));
      }
    sim[c] = 1.0 - acc / sz;
  }
  return first_argmax(sim);
}

inline int dempster_shafer(const std::vector<Profile>& dt, const Profile& p) {
  const std::size_t cn = dt.size();
  std::vector<double> mu(cn, 1.0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::vector<double> prox(cn);
    double norm = 0.0;
    for (std::size_t c = 0; c < cn; ++c) {
      double d2 = 0.0;
      for (std::size_t j = 0; j < p[0].size(); ++j) {
        const double d = dt[c][i][j] - p[i][j];
        d2 += d * d;
      }
      prox[c] = 1.0 / (1.0 + d2);
      norm += prox[c];
    }
    for (auto& v : prox) v /= norm;
    std::vector<double> belief(cn);
    bool degenerate = false;
    for (std::size_t c = 0; c < cn && !degenerate; ++c) {
      double rest = 1.0;
      for (std::size_t k = 0; k < cn; ++k)
        if (k != c) rest *= 1.0 - prox[k];
      const double den = 1.0 - prox[c] * (1.0 - rest);
      if (!(den > 0.0) || !std::isfinite(den)) degenerate = true;
      else belief[c] = prox[c] * rest / den;
    }
    if (degenerate) belief.assign(cn, 1.0 / static_cast<double>(cn));
    for (std::size_t c = 0; c < cn; ++c) mu[c] *= belief[c];
  }
  double total = 0.0;
  for (double v : mu) total += v;
  if (!(total > 0.0) || !std::isfinite(total)) {
    mu.assign(cn, 1.0 / static_cast<double>(cn));
  } else {
    for (double& v : mu) v /= total;
  }
  return first_argmax(mu);
}

}  // namespace oracle

// ---- synthetic fixtures ----------------------------------------------------

// Four profiles labeled by the XOR of the two rows' argmaxes; not separable
// by any linear rule on the flattened vector.
inline void xor_profile_set(std::vector<nnklms::DecisionProfile>& profiles,
                            std::vector<int>& labels) {
  const double lo = 0.1, hi = 0.9;
  auto make = [&](double a, double b, double c, double d) {
    nnklms::DecisionProfile p(2, 2);
    p(0, 0) = a; p(0, 1) = b;
    p(1, 0) = c; p(1, 1) = d;
    return p;
  };
  profiles = {make(hi, lo, hi, lo), make(hi, lo, lo, hi), make(lo, hi, hi, lo),
              make(lo, hi, lo, hi)};
  labels = {0, 1, 1, 0};
}

// Two-class problem on [0,1]^2 whose boundary rotates per quadrant, so each
// quadrant-trained expert is strong at home and weak elsewhere.
struct RegionalData {
  nnklms::RowMatrix train_x;
  std::vector<int> train_y;
  std::vector<int> train_quadrant;
  nnklms::RowMatrix test_x;
  std::vector<int> test_y;
};

inline int quadrant_of(double x0, double x1) {
  return (x0 >= 0.5 ? 1 : 0) + (x1 >= 0.5 ? 2 : 0);
}

inline RegionalData make_regional_data(std::uint64_t seed, std::size_t n_train = 400,
                                       std::size_t n_test = 400) {
  RegionalData d;
  d.train_x = nnklms::RowMatrix(n_train, 2);
  d.test_x = nnklms::RowMatrix(n_test, 2);
  nnklms::Rng rng(seed);
  auto fill = [&](nnklms::RowMatrix& xs, std::vector<int>& ys, std::vector<int>* quads) {
    for (std::size_t i = 0; i < xs.rows; ++i) {
      const double x0 = rng.uniform();
      const double x1 = rng.uniform();
      const int q = quadrant_of(x0, x1);
      const double theta = q * 0.25 * M_PI + 0.125 * M_PI;
      const double cx = (q & 1) ? 0.75 : 0.25;
      const double cy = (q & 2) ? 0.75 : 0.25;
      const double side = (x0 - cx) * std::cos(theta) + (x1 - cy) * std::sin(theta);
      xs(i, 0) = x0;
      xs(i, 1) = x1;
      ys.push_back(side > 0.0 ? 1 : 0);
      if (quads) quads->push_back(q);
    }
  };
  fill(d.train_x, d.train_y, &d.train_quadrant);
  fill(d.test_x, d.test_y, nullptr);
  return d;
}

}  // namespace testsup
