#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "treeplace/instance.hpp"

namespace treeplace {

enum class TreeShape { Balanced, Path, Random };

std::string_view to_string(TreeShape shape);
TreeShape parse_shape(std::string_view text);  // throws ConfigError

struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

struct GenConfig {
  std::uint64_t seed = 1;
  std::size_t internal_count = 1;
  std::size_t client_count = 1;
  // Children per internal node. Balanced trees use `hi` as the arity; random
  // trees never exceed `hi` internal children.
  IntRange branching{1, 3};
  std::int64_t capacity = 15;
  IntRange bandwidth{1, 20};
  IntRange requests{0, 8};
  IntRange qos{1, 4};
  TreeShape shape = TreeShape::Random;
};

// Internal nodes are "n<k>", clients "c<k>", zero-padded so the id order is
// the creation order. Childless internal nodes get a client first, then the
// remaining clients attach uniformly. Deterministic for a given config on
// every platform. Throws ConfigError.
NetworkInstance generate(const GenConfig& config);

// Small-instance corpus used for oracle comparisons: at most 10 internal
// nodes and 12 clients, all parameters derived from the seed.
GenConfig small_instance_config(std::uint64_t seed);

// Dual-role model: every node may host a replica and may itself issue
// requests, served from distance 0 (itself) upwards.
struct DualRoleNode {
  NodeId id;
  std::optional<NodeId> parent;
  std::optional<std::int64_t> link_bw;
  std::int64_t demand = 0;
  std::int64_t qos = 0;  // hops, 0 = must be served by the node itself
};

struct DualRoleTree {
  std::int64_t capacity = 0;
  std::vector<DualRoleNode> nodes;
};

// {"W": int, "nodes": [{"id", "parent", "bw" (non-root), "w", "q"}]}; "w"/"q"
// optional, q required when w > 0. Throws MalformedDocument / StructureError.
DualRoleTree parse_dual_role(std::string_view text);
std::string serialize_dual_role(const DualRoleTree& tree);

// Every demanding node u gets a child client "u~client" with u's demand,
// q(u) + 1 hops (the extra edge) and a link wide enough never to bind.
NetworkInstance fictivize(const DualRoleTree& tree);

// internal_count nodes in the chosen shape, demands drawn from `requests`
// (zero means no demand) and qos from qos.lo - 1 .. qos.hi - 1.
DualRoleTree generate_dual_role(const GenConfig& config);

}  // namespace treeplace
