#include "rangematch/architecture.hpp"

namespace rangematch {

namespace {

constexpr std::array<std::string_view, kArchitectureCount> kKeys{
    "pure_physical", "centrally_virtualized", "on_premise_cloud",
    "public_cloud",  "distributed_virtualization", "hybrid",
};

constexpr std::array<std::string_view, kArchitectureCount> kDisplayNames{
    "Pure Physical", "Centrally Virtualized", "On-Premise Cloud",
    "Public Cloud",  "Distributed Virtualization", "Hybrid",
};

}  // namespace

std::string_view to_key(ArchitectureId id) { return kKeys[index_of(id)]; }

std::string_view display_name(ArchitectureId id) { return kDisplayNames[index_of(id)]; }

std::optional<ArchitectureId> architecture_from_key(std::string_view key) {
  for (std::size_t i = 0; i < kKeys.size(); ++i) {
    if (kKeys[i] == key) return kArchitectures[i];
  }
  return std::nullopt;
}

}  // namespace rangematch
