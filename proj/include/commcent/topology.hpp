#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <span>
#include <string_view>
#include <vector>

#include "commcent/graph.hpp"
#include "commcent/partition.hpp"

namespace commcent {

inline constexpr double kMissing = std::numeric_limits<double>::quiet_NaN();

struct MacroscopicSummary {
  double density = kMissing;
  double transitivity = kMissing;
  double assortativity = kMissing;
  double avg_distance = kMissing;
  double diameter = kMissing;
  double efficiency = kMissing;
  double degree_exponent = kMissing;
};

struct MesoscopicSummary {
  double modularity = kMissing;
  double mixing_parameter = kMissing;
  double internal_distance = kMissing;
  double internal_density = kMissing;
  double max_odf = kMissing;
  double avg_odf = kMissing;
  double flake_odf = kMissing;
  double embeddedness = kMissing;
  double hub_dominance = kMissing;
};

/// How per-community values are combined into one network-level number.
enum class CommunityAveraging { unweighted, size_weighted };

/// Feature names in report order; the first seven are macroscopic.
inline constexpr std::array<std::string_view, 16> kFeatureNames{
    "density",           "transitivity",     "assortativity", "avg_distance",
    "diameter",          "efficiency",       "gamma",         "modularity",
    "mu",                "internal_distance", "internal_density", "max_odf",
    "avg_odf",           "flake_odf",        "embeddedness",  "hub_dominance",
};

std::array<double, 16> feature_values(const MacroscopicSummary& macro,
                                      const MesoscopicSummary& meso);

/// 3 * triangles / connected triples (0 when the graph has no triples).
double transitivity(const Graph& g);

/// Pearson correlation of end-point degrees over edge stubs; NaN when degenerate.
double degree_assortativity(const Graph& g);

struct PowerLawFit {
  double alpha = kMissing;
  std::uint32_t x_min = 0;
  std::size_t tail_size = 0;
  double ks_distance = kMissing;

  bool ok() const noexcept { return alpha == alpha; }
};

/// Hurwitz zeta(s, q) for s > 1, q > 0.
double hurwitz_zeta(double s, double q);

/// Discrete power-law MLE with x_min chosen by minimising the KS distance.
/// Only candidates leaving at least `min_tail` observations are considered.
PowerLawFit fit_discrete_power_law(std::span<const std::uint32_t> samples,
                                   std::size_t min_tail = 10);

/// Requires a connected graph with N >= 3.
MacroscopicSummary macroscopic(const Graph& g);

MesoscopicSummary mesoscopic(const Graph& g, const Partition& p,
                             CommunityAveraging averaging = CommunityAveraging::unweighted);

}  // namespace commcent
