#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "kernels_impl.hpp"

namespace commcent::kernels {
namespace {

void require_lengths(bool ok) {
  if (!ok) throw std::invalid_argument("kernel operands differ in length");
}

bool cpu_has_avx2() noexcept {
#if defined(COMMCENT_BUILD_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable* initial_table() noexcept {
  if (const char* forced = std::getenv("COMMCENT_ISA"); forced != nullptr) {
    if (std::string(forced) == "scalar") return &detail::kScalarTable;
  }
  if (const KernelTable* t = avx2_table(); t != nullptr) return t;
  return &detail::kScalarTable;
}

std::atomic<const KernelTable*>& current() noexcept {
  static std::atomic<const KernelTable*> table{initial_table()};
  return table;
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

const KernelTable& scalar_table() noexcept { return detail::kScalarTable; }

const KernelTable* avx2_table() noexcept {
#if defined(COMMCENT_BUILD_AVX2)
  static const bool supported = cpu_has_avx2();
  return supported ? &detail::kAvx2Table : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() noexcept { return *current().load(std::memory_order_relaxed); }

void select(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      current().store(&detail::kScalarTable);
      return;
    case Isa::avx2:
      if (const KernelTable* t = avx2_table(); t != nullptr) {
        current().store(t);
        return;
      }
      throw std::invalid_argument("AVX2 kernels are not available on this machine");
  }
}

double sum(std::span<const double> x) { return active().sum(x.data(), x.size()); }

double dot(std::span<const double> x, std::span<const double> y) {
  require_lengths(x.size() == y.size());
  return active().dot(x.data(), y.data(), x.size());
}

double l1_distance(std::span<const double> x, std::span<const double> y) {
  require_lengths(x.size() == y.size());
  return active().l1_distance(x.data(), y.data(), x.size());
}

void multiply(std::span<double> out, std::span<const double> x, std::span<const double> y) {
  require_lengths(out.size() == x.size() && x.size() == y.size());
  active().multiply(out.data(), x.data(), y.data(), out.size());
}

void axpby(std::span<double> out, double a, std::span<const double> x, double b,
           std::span<const double> y) {
  require_lengths(out.size() == x.size() && x.size() == y.size());
  active().axpby(out.data(), a, x.data(), b, y.data(), out.size());
}

void affine(std::span<double> out, std::span<const double> x, double scale, double offset) {
  require_lengths(out.size() == x.size());
  active().affine(out.data(), x.data(), scale, offset, out.size());
}

void adjacency_spmv(std::span<double> out, std::span<const std::size_t> offsets,
                    std::span<const std::uint32_t> columns, std::span<const double> x) {
  require_lengths(offsets.size() == out.size() + 1);
  active().adjacency_spmv(out.data(), offsets.data(), columns.data(), out.size(), x.data());
}

}  // namespace commcent::kernels
