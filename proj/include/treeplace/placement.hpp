#pragma once

#include <cstdint>
#include <vector>

#include "treeplace/contribution.hpp"
#include "treeplace/star_tree.hpp"

namespace treeplace {

// One Place-replica(node, level) call; `placed` is e(node, level), empty for leaves.
struct PlacementCall {
  NodeId node;
  int level = 0;
  std::vector<NodeId> placed;
};

struct PlacementResult {
  std::vector<NodeId> replicas_star;      // ascending
  std::vector<NodeId> replicas_original;  // ascending
  std::size_t cardinality = 0;
  std::vector<PlacementCall> trace;       // call order, children ascending
};

// Top-down pass from (r+, 0). Uses an explicit stack, so path-shaped trees of
// any depth are fine. Throws ContractViolation if it reaches an unbounded
// table entry or the count differs from m(T*).
PlacementResult place_replicas(const StarTree& tree, const ContributionTable& table);

// Re-derives the loads on T* from the placement and throws Infeasible
// (RootWorkload) if the root or any replica is over W, or if anything would
// have to travel above the original root.
void root_workload_check(const StarTree& tree, const ContributionTable& table, const PlacementResult& result);

std::vector<NodeId> map_replicas_to_original(const PlacementResult& result, const StarTree& tree);

}  // namespace treeplace
