#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "treeplace/contribution.hpp"
#include "treeplace/instance.hpp"

namespace treeplace {

struct OracleOptimum {
  std::size_t cardinality = 0;
  std::vector<NodeId> witness;      // first feasible set in cardinality-lexicographic order
  std::uint64_t optimal_sets = 0;   // feasible sets of that cardinality
};

struct OracleResult {
  std::optional<OracleOptimum> optimum;  // absent iff nothing is feasible
  std::uint64_t explored = 0;            // subsets evaluated
  BandwidthMode mode = BandwidthMode::PaperLiteral;
};

inline constexpr std::size_t kDefaultOracleGuard = 20;

// Exhaustive minimum over subsets of the internal nodes, smallest size first.
// Feasibility comes from the verifier alone. Throws GuardExceeded when there
// are more than max_n internal nodes.
OracleResult brute_force_min(const NetworkInstance& inst, BandwidthMode mode,
                             std::size_t max_n = kDefaultOracleGuard);

}  // namespace treeplace
