#pragma once

#include <cstddef>
#include <vector>

#include "nnklms/kernels.hpp"
#include "nnklms/matrix.hpp"

namespace nnklms {

// Classical input-space LMS. w(n+1) = w(n) + 2 mu e(n) u(n).
struct LmsFilter {
  std::vector<double> weights;
  double step_size = 0.1;  // mu
};

double lms_predict(const LmsFilter& f, const std::vector<double>& u);
// e = d - w.u, then w += 2 mu e u. Returns e.
double lms_step(LmsFilter& f, const std::vector<double>& u, double d);

// Growing kernel expansion eta * sum_i coeff_i k(input_i, .). The weight
// vector of feature-space LMS is never materialized; this expansion is it.
// Shared by the raw KLMS filter and the logistic neuron.
struct KernelExpansion {
  KernelSpec kernel;
  double eta = 1.0;    // effective step size; equals 2 mu of the LMS form
  std::size_t cap = 0; // 0 = unlimited, else dictionary frozen at first `cap` entries
  std::vector<double> coeffs;
  RowMatrix inputs;    // one stored input per row

  std::size_t size() const { return coeffs.size(); }
  // Appends unless the cap is reached. Returns whether the pair was stored.
  bool push(double coeff, const double* x, std::size_t dim);
  // eta * sum_i coeff_i k(input_i, x); 0 when empty
  double weighted_kernel_sum(const double* x, std::size_t dim) const;

  bool operator==(const KernelExpansion&) const = default;
};

// Raw (no activation) kernel LMS: the dictionary stores per-step errors.
using KlmsState = KernelExpansion;

double klms_predict(const KlmsState& s, const std::vector<double>& u);
// e = d - predict(u); append (e, u) subject to cap. Returns e.
double klms_step(KlmsState& s, const std::vector<double>& u, double d);

}  // namespace nnklms
