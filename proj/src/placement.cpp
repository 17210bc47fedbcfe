#include "treeplace/placement.hpp"

#include <algorithm>
#include <string>

#include "treeplace/errors.hpp"

namespace treeplace {

PlacementResult place_replicas(const StarTree& tree, const ContributionTable& table) {
  PlacementResult result;
  std::vector<std::pair<std::size_t, int>> stack{{StarTree::kRootPlus, 0}};
  while (!stack.empty()) {
    const auto [v, level] = stack.back();
    stack.pop_back();
    const StarNode& node = tree.node(v);
    PlacementCall call{node.id, level, {}};
    if (node.leaf) {
      result.trace.push_back(std::move(call));
      continue;
    }
    const NodeTable& t = table[v];
    if (t.c(level).is_unbounded()) {
      throw ContractViolation("placement reached unbounded C(" + node.id.str() + ", " + std::to_string(level) + ")");
    }
    call.placed = t.e(level);
    for (const auto& id : call.placed) result.replicas_star.push_back(id);

    // Children go on the stack in reverse so they are visited ascending.
    for (auto it = node.children.rbegin(); it != node.children.rend(); ++it) {
      const NodeId& child = tree.node(*it).id;
      const bool equipped = std::binary_search(call.placed.begin(), call.placed.end(), child);
      stack.emplace_back(*it, equipped ? 0 : level + 1);
    }
    result.trace.push_back(std::move(call));
  }
  std::sort(result.replicas_star.begin(), result.replicas_star.end());
  result.replicas_original = map_replicas_to_original(result, tree);
  result.cardinality = result.replicas_star.size();
  if (static_cast<std::int64_t>(result.cardinality) != table.total()) {
    throw ContractViolation("placed " + std::to_string(result.cardinality) + " replicas, expected m(T*)=" +
                            std::to_string(table.total()));
  }
  return result;
}

void root_workload_check(const StarTree& tree, const ContributionTable& table, const PlacementResult& result) {
  std::vector<char> equipped(tree.size(), 0);
  for (const auto& id : result.replicas_star) equipped[tree.index_of(id)] = 1;
  std::vector<std::int64_t> load(tree.size(), 0);
  for (std::size_t v = 0; v < tree.size(); ++v) {
    const StarNode& node = tree.node(v);
    if (!node.leaf || node.leaf->weight == 0) continue;
    std::size_t cur = v;
    while (cur != StarTree::kRootPlus && !equipped[cur]) cur = *tree.node(cur).parent;
    load[cur] += node.leaf->weight;
  }
  const std::size_t root = tree.node(StarTree::kRootPlus).children.front();
  if (load[StarTree::kRootPlus] > 0) {
    throw Infeasible(InfeasibleReason::RootWorkload, {tree.node(root).id},
                     std::to_string(load[StarTree::kRootPlus]) + " requests would pass above the root");
  }
  for (std::size_t v = 0; v < tree.size(); ++v) {
    if (equipped[v] && !tree.node(v).leaf && load[v] != table[v].c(0)) {
      throw ContractViolation("load on '" + tree.node(v).id.str() + "' is " + std::to_string(load[v]) +
                              " but C(v,0) is " + table[v].c(0).to_string());
    }
    if (load[v] > tree.capacity()) {
      throw Infeasible(InfeasibleReason::RootWorkload, {tree.node(v).id},
                       "load " + std::to_string(load[v]) + " exceeds W=" + std::to_string(tree.capacity()));
    }
  }
}

std::vector<NodeId> map_replicas_to_original(const PlacementResult& result, const StarTree& tree) {
  std::vector<NodeId> out;
  out.reserve(result.replicas_star.size());
  for (const auto& id : result.replicas_star) out.push_back(tree.project(tree.index_of(id)));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace treeplace
