#pragma once

// Dense and CSR arithmetic kernels shared by the iterative solvers and the
// statistics code. Each kernel has a portable scalar reference and, where the
// build and the CPU allow it, an AVX2 variant. The variant is picked once at
// startup; COMMCENT_ISA=scalar in the environment forces the reference path.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace commcent::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa) noexcept;

/// Function table for one instruction set. All pointers are non-null.
struct KernelTable {
  Isa isa;
  double (*sum)(const double* x, std::size_t n);
  double (*dot)(const double* x, const double* y, std::size_t n);
  double (*l1_distance)(const double* x, const double* y, std::size_t n);
  // out[i] = x[i] * y[i]
  void (*multiply)(double* out, const double* x, const double* y, std::size_t n);
  // out[i] = a * x[i] + b * y[i]; out may alias x or y
  void (*axpby)(double* out, double a, const double* x, double b, const double* y,
                std::size_t n);
  // out[i] = scale * x[i] + offset; out may alias x
  void (*affine)(double* out, const double* x, double scale, double offset, std::size_t n);
  // out[row] = sum of x[col] over the CSR row; out must not alias x
  void (*adjacency_spmv)(double* out, const std::size_t* offsets, const std::uint32_t* columns,
                         std::size_t rows, const double* x);
};

const KernelTable& scalar_table() noexcept;

/// AVX2 table, or nullptr when it was not compiled in or the CPU lacks AVX2/FMA.
const KernelTable* avx2_table() noexcept;

/// Table currently used by the span helpers below.
const KernelTable& active() noexcept;

/// Overrides the dispatch choice. Throws std::invalid_argument if the ISA is unavailable.
void select(Isa isa);

double sum(std::span<const double> x);
double dot(std::span<const double> x, std::span<const double> y);
double l1_distance(std::span<const double> x, std::span<const double> y);
void multiply(std::span<double> out, std::span<const double> x, std::span<const double> y);
void axpby(std::span<double> out, double a, std::span<const double> x, double b,
           std::span<const double> y);
void affine(std::span<double> out, std::span<const double> x, double scale, double offset);
void adjacency_spmv(std::span<double> out, std::span<const std::size_t> offsets,
                    std::span<const std::uint32_t> columns, std::span<const double> x);

}  // namespace commcent::kernels
