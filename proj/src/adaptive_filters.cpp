#include "nnklms/adaptive_filters.hpp"

#include <stdexcept>

#include "nnklms/simd.hpp"

namespace nnklms {

double lms_predict(const LmsFilter& f, const std::vector<double>& u) {
  if (u.size() != f.weights.size()) throw std::invalid_argument("dimension mismatch");
  return simd::dot(f.weights.data(), u.data(), u.size());
}

double lms_step(LmsFilter& f, const std::vector<double>& u, double d) {
  const double e = d - lms_predict(f, u);
  simd::axpy(2.0 * f.step_size * e, u.data(), f.weights.data(), u.size());
  return e;
}

bool KernelExpansion::push(double coeff, const double* x, std::size_t dim) {
  if (inputs.rows == 0) {
    inputs.cols = dim;
  } else if (dim != inputs.cols) {
    throw std::invalid_argument("dimension mismatch");
  }
  if (cap != 0 && coeffs.size() >= cap) return false;
  coeffs.push_back(coeff);
  inputs.data.insert(inputs.data.end(), x, x + dim);
  ++inputs.rows;
  return true;
}

double KernelExpansion::weighted_kernel_sum(const double* x, std::size_t dim) const {
  if (inputs.rows != 0 && dim != inputs.cols) throw std::invalid_argument("dimension mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < inputs.rows; ++i)
    sum += coeffs[i] * kernel_eval(kernel, inputs.row(i), x, dim);
  return eta * sum;
}

double klms_predict(const KlmsState& s, const std::vector<double>& u) {
  return s.weighted_kernel_sum(u.data(), u.size());
}

double klms_step(KlmsState& s, const std::vector<double>& u, double d) {
  const double e = d - klms_predict(s, u);
  s.push(e, u.data(), u.size());
  return e;
}

}  // namespace nnklms
