#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "treeplace/amount.hpp"
#include "treeplace/instance.hpp"

namespace treeplace {

// A leaf of the computation tree: either a former internal node whose
// children were all clients (suppressed, eligible for a replica) or a bundle
// of sibling clients compressed next to internal children (never eligible).
struct StarLeaf {
  NodeId id;
  std::int64_t weight = 0;  // merged request sum
  std::int64_t qos = 0;     // hop budget measured from this leaf
  bool eligible = false;
  std::optional<NodeId> former_internal;  // set iff eligible
  std::vector<NodeId> clients;            // merged original clients, ascending
};

struct StarNode {
  NodeId id;
  std::optional<std::size_t> parent;
  std::vector<std::size_t> children;  // ascending id
  Bandwidth link_bw = Bandwidth::unbounded();  // edge to parent; unbounded when there is none
  int depth = 0;                      // hops to the artificial root
  std::optional<StarLeaf> leaf;

  bool is_leaf() const { return leaf.has_value(); }
};

// The computation tree T*. Node 0 is the artificial root, node 1 the
// original root.
class StarTree {
 public:
  static constexpr std::size_t kRootPlus = 0;

  std::int64_t capacity() const { return capacity_; }
  std::span<const StarNode> nodes() const { return nodes_; }
  const StarNode& node(std::size_t i) const { return nodes_[i]; }
  std::size_t size() const { return nodes_.size(); }

  std::optional<std::size_t> find(const NodeId& id) const;
  // Throws ContractViolation for unknown ids.
  std::size_t index_of(const NodeId& id) const;

  // Children before parents, siblings ascending.
  std::span<const std::size_t> post_order() const { return post_order_; }

  // Original nodes represented by a T* node (empty for the artificial root).
  std::vector<NodeId> back_map(std::size_t i) const;
  // The original internal node a replica on T* node i stands for.
  NodeId project(std::size_t i) const;

  // Largest StarLeaf qos.
  std::int64_t max_leaf_qos() const { return max_leaf_qos_; }

  // Internal nodes of T that serve no client and were dropped.
  std::span<const NodeId> pruned() const { return pruned_; }

 private:
  friend class StarTreeBuilder;

  std::int64_t capacity_ = 0;
  std::vector<StarNode> nodes_;
  std::shared_ptr<const Topology> topo_;
  std::vector<std::size_t> star_of_;  // original node index -> T* index, npos if absent
  std::vector<std::size_t> post_order_;
  std::vector<NodeId> pruned_;
  std::int64_t max_leaf_qos_ = 0;
};

// Parent whose children are all clients becomes an eligible leaf with
// weight sum(w) and qos min(q) - 1. Throws QosExhausted when that is negative.
StarLeaf suppress_clients(const NodeId& parent, std::span<const NodeSpec> clients);
StarLeaf suppress_clients(const NodeId& parent, std::span<const NodeSpec* const> clients);

// Client children of a parent that also has internal children merge into one
// ineligible leaf with weight sum(w) and qos min(q). The leaf takes the
// smallest client id.
StarLeaf compress_clients(std::span<const NodeSpec> clients);
StarLeaf compress_clients(std::span<const NodeSpec* const> clients);

class StarTreeBuilder {
 public:
  // inst must be valid.
  explicit StarTreeBuilder(const NetworkInstance& inst);
  explicit StarTreeBuilder(std::shared_ptr<const Topology> topo);

  // Adds r+ above the root with a zero-bandwidth link. Throws
  // ContractViolation when called a second time.
  void add_artificial_root();
  bool has_artificial_root() const { return root_added_; }

  // Suppresses or compresses client bundles in one bottom-up pass.
  // Requires add_artificial_root() first.
  StarTree build() const;

 private:
  std::shared_ptr<const Topology> topo_;
  bool root_added_ = false;
};

// Precheck, artificial root, then suppression/compression. Throws Infeasible.
StarTree transform_to_star(const NetworkInstance& inst);
StarTree transform_to_star(std::shared_ptr<const Topology> topo);

}  // namespace treeplace
