#include "nnklms/kernels.hpp"

#include <cmath>
#include <stdexcept>

#include "nnklms/simd.hpp"

namespace nnklms {

void KernelSpec::validate() const {
  switch (kind) {
    case KernelKind::gaussian:
      if (!(sigma > 0.0) || !std::isfinite(sigma))
        throw std::invalid_argument("invalid kernel parameters");
      return;
    case KernelKind::polynomial:
      if (degree < 1 || !(offset >= 0.0) || !std::isfinite(offset))
        throw std::invalid_argument("invalid kernel parameters");
      return;
    case KernelKind::linear:
      return;
  }
  throw std::invalid_argument("invalid kernel parameters");
}

const char* kernel_kind_name(KernelKind k) {
  switch (k) {
    case KernelKind::gaussian: return "gaussian";
    case KernelKind::polynomial: return "polynomial";
    case KernelKind::linear: return "linear";
  }
  return "?";
}

double kernel_eval(const KernelSpec& spec, const double* x, const double* y, std::size_t n) {
  spec.validate();
  if (n == 0) throw std::invalid_argument("dimension mismatch");
  switch (spec.kind) {
    case KernelKind::gaussian:
      return std::exp(-simd::squared_distance(x, y, n) / (2.0 * spec.sigma * spec.sigma));
    case KernelKind::polynomial: {
      const double base = simd::dot(x, y, n) + spec.offset;
      double p = base;
      for (int i = 1; i < spec.degree; ++i) p *= base;
      return p;
    }
    case KernelKind::linear:
      return simd::dot(x, y, n);
  }
  throw std::invalid_argument("invalid kernel parameters");
}

double kernel_eval(const KernelSpec& spec, const std::vector<double>& x,
                   const std::vector<double>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("dimension mismatch");
  return kernel_eval(spec, x.data(), y.data(), x.size());
}

std::vector<double> explicit_poly2_map(const std::vector<double>& x, double offset) {
  const std::size_t n = x.size();
  if (n == 0) throw std::invalid_argument("dimension mismatch");
  if (!(offset >= 0.0)) throw std::invalid_argument("invalid kernel parameters");
  std::vector<double> phi;
  phi.reserve((n * n + 3 * n + 2) / 2);
  for (std::size_t i = 0; i < n; ++i) phi.push_back(x[i] * x[i]);
  const double r2 = std::sqrt(2.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) phi.push_back(r2 * x[i] * x[j]);
  const double rc = std::sqrt(2.0 * offset);
  for (std::size_t i = 0; i < n; ++i) phi.push_back(rc * x[i]);
  phi.push_back(offset);
  return phi;
}

}  // namespace nnklms
