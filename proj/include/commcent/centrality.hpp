#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace commcent {

/// One measure's score per node.
struct CentralityVector {
  std::string measure;
  std::vector<double> scores;
};

enum class ClassicalMeasure {
  degree,
  leverage,
  laplacian,
  diffusion,
  mnc,
  betweenness,
  closeness,
  katz,
  pagerank,
  subgraph,
};

enum class CommunityMeasure { chb, pc, cbm, comm, mv, cbc, ksc };

inline constexpr std::array kClassicalMeasures{
    ClassicalMeasure::degree,      ClassicalMeasure::leverage,  ClassicalMeasure::laplacian,
    ClassicalMeasure::diffusion,   ClassicalMeasure::mnc,       ClassicalMeasure::betweenness,
    ClassicalMeasure::closeness,   ClassicalMeasure::katz,      ClassicalMeasure::pagerank,
    ClassicalMeasure::subgraph,
};

inline constexpr std::array kCommunityMeasures{
    CommunityMeasure::chb, CommunityMeasure::pc,  CommunityMeasure::cbm, CommunityMeasure::comm,
    CommunityMeasure::mv,  CommunityMeasure::cbc, CommunityMeasure::ksc,
};

std::string_view name(ClassicalMeasure m) noexcept;
std::string_view name(CommunityMeasure m) noexcept;
std::optional<ClassicalMeasure> parse_classical(std::string_view s) noexcept;
std::optional<CommunityMeasure> parse_community(std::string_view s) noexcept;

}  // namespace commcent
