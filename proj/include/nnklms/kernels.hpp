#pragma once

#include <cstddef>
#include <vector>

namespace nnklms {

enum class KernelKind { gaussian, polynomial, linear };

struct KernelSpec {
  KernelKind kind = KernelKind::gaussian;
  double sigma = 1.0;   // gaussian width, > 0
  int degree = 2;       // polynomial degree, >= 1
  double offset = 1.0;  // polynomial constant c, >= 0

  // throws std::invalid_argument("invalid kernel parameters")
  void validate() const;

  bool operator==(const KernelSpec&) const = default;
};

const char* kernel_kind_name(KernelKind k);

// k(x,y). gaussian: exp(-|x-y|^2 / (2 sigma^2)); polynomial: (x.y + c)^degree;
// linear: x.y. Throws "dimension mismatch" / "invalid kernel parameters".
double kernel_eval(const KernelSpec& spec, const double* x, const double* y, std::size_t n);
double kernel_eval(const KernelSpec& spec, const std::vector<double>& x,
                   const std::vector<double>& y);

// phi(x) with phi(x).phi(y) == (x.y + c)^2 exactly for all x, y. Dimension
// (n^2 + 3n + 2) / 2: squares, sqrt(2)-scaled cross terms (i < j),
// sqrt(2c)-scaled linears, constant c. Correctness oracle for the degree-2
// polynomial kernel; never used on a hot path.
std::vector<double> explicit_poly2_map(const std::vector<double>& x, double offset);

}  // namespace nnklms
