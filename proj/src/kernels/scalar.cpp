#include "kernels_impl.hpp"

#include <cmath>

namespace commcent::kernels::detail {
namespace {

double sum_scalar(const double* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i];
  return s;
}

double dot_scalar(const double* x, const double* y, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

double l1_scalar(const double* x, const double* y, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += std::fabs(x[i] - y[i]);
  return s;
}

void multiply_scalar(double* out, const double* x, const double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = x[i] * y[i];
}

void axpby_scalar(double* out, double a, const double* x, double b, const double* y,
                  std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a * x[i] + b * y[i];
}

void affine_scalar(double* out, const double* x, double scale, double offset, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = scale * x[i] + offset;
}

void spmv_scalar(double* out, const std::size_t* offsets, const std::uint32_t* columns,
                 std::size_t rows, const double* x) {
  for (std::size_t r = 0; r < rows; ++r) {
    double s = 0.0;
    for (std::size_t k = offsets[r]; k < offsets[r + 1]; ++k) s += x[columns[k]];
    out[r] = s;
  }
}

}  // namespace

const KernelTable kScalarTable{
    Isa::scalar,  sum_scalar,      dot_scalar,  l1_scalar, multiply_scalar,
    axpby_scalar, affine_scalar,   spmv_scalar,
};

}  // namespace commcent::kernels::detail
