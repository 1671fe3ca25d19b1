#include "kernels_impl.hpp"

#include <immintrin.h>

#include <cmath>

namespace commcent::kernels::detail {
namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

double sum_avx2(const double* x, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(x + i));
    acc1 = _mm256_add_pd(acc1, _mm256_loadu_pd(x + i + 4));
  }
  for (; i + 4 <= n; i += 4) acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(x + i));
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) s += x[i];
  return s;
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4)
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

double l1_avx2(const double* x, const double* y, std::size_t n) {
  const __m256d sign = _mm256_set1_pd(-0.0);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
    acc = _mm256_add_pd(acc, _mm256_andnot_pd(sign, d));
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += std::fabs(x[i] - y[i]);
  return s;
}

void multiply_avx2(double* out, const double* x, const double* y, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  for (; i < n; ++i) out[i] = x[i] * y[i];
}

void axpby_avx2(double* out, double a, const double* x, double b, const double* y,
                std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  const __m256d vb = _mm256_set1_pd(b);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d by = _mm256_mul_pd(vb, _mm256_loadu_pd(y + i));
    _mm256_storeu_pd(out + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), by));
  }
  for (; i < n; ++i) out[i] = a * x[i] + b * y[i];
}

void affine_avx2(double* out, const double* x, double scale, double offset, std::size_t n) {
  const __m256d vs = _mm256_set1_pd(scale);
  const __m256d vo = _mm256_set1_pd(offset);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(out + i, _mm256_fmadd_pd(vs, _mm256_loadu_pd(x + i), vo));
  for (; i < n; ++i) out[i] = scale * x[i] + offset;
}

void spmv_avx2(double* out, const std::size_t* offsets, const std::uint32_t* columns,
               std::size_t rows, const double* x) {
  for (std::size_t r = 0; r < rows; ++r) {
    std::size_t k = offsets[r];
    const std::size_t end = offsets[r + 1];
    __m256d acc = _mm256_setzero_pd();
    for (; k + 4 <= end; k += 4) {
      const __m128i idx = _mm_loadu_si128(reinterpret_cast<const __m128i*>(columns + k));
      acc = _mm256_add_pd(acc, _mm256_i32gather_pd(x, idx, 8));
    }
    double s = hsum(acc);
    for (; k < end; ++k) s += x[columns[k]];
    out[r] = s;
  }
}

}  // namespace

const KernelTable kAvx2Table{
    Isa::avx2,  sum_avx2,    dot_avx2,  l1_avx2, multiply_avx2,
    axpby_avx2, affine_avx2, spmv_avx2,
};

}  // namespace commcent::kernels::detail
