#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string_view>
#include <vector>

#include "treeplace/contribution.hpp"
#include "treeplace/instance.hpp"

namespace treeplace {

// Works on the original tree only; shares nothing with the transform or the DP.

enum class ViolationKind { Qos, Capacity, Bandwidth, Unserved };

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  NodeId location;      // client, server, or the child end of an edge
  std::int64_t amount;  // excess over the limit (unserved: the client's demand)
  NodeId bundle;        // per-bundle bandwidth violations: the bundle's parent
};

// A bundle is the set of clients under one parent.
struct BundleFlow {
  NodeId bundle;
  std::int64_t flow;
};

struct Assignment {
  std::map<NodeId, NodeId> server;   // client -> serving replica
  std::map<NodeId, int> distance;    // client -> hops to that replica
  std::vector<Violation> unserved;
};

struct FeasibilityReport {
  BandwidthMode mode = BandwidthMode::PaperLiteral;
  std::map<NodeId, NodeId> assignment;
  std::map<NodeId, std::int64_t> server_loads;
  std::map<NodeId, std::int64_t> link_flows;  // summed flow per edge
  std::map<NodeId, std::vector<BundleFlow>> bundle_flows;
  std::vector<Violation> violations;

  bool feasible() const { return violations.empty(); }
};

// Closest policy: each client goes to its nearest equipped strict ancestor
// (parent = 1 hop); no such ancestor within q hops means unserved.
// Throws ContractViolation if a replica is not an internal node.
Assignment closest_assignment(const NetworkInstance& inst, const std::set<NodeId>& replicas);

FeasibilityReport verify_placement(const NetworkInstance& inst, const std::set<NodeId>& replicas,
                                   BandwidthMode mode);

// Reusable verifier for many replica sets on one instance.
class PlacementVerifier {
 public:
  explicit PlacementVerifier(const NetworkInstance& inst);
  explicit PlacementVerifier(std::shared_ptr<const Topology> topo);

  const Topology& topology() const { return *topo_; }

  // `equipped` is indexed like the instance's node vector.
  FeasibilityReport verify(const std::vector<char>& equipped, BandwidthMode mode) const;
  bool feasible(const std::vector<char>& equipped, BandwidthMode mode) const;

  std::vector<char> mask(const std::set<NodeId>& replicas) const;

 private:
  FeasibilityReport evaluate(const std::vector<char>& equipped, BandwidthMode mode, bool detailed) const;

  std::shared_ptr<const Topology> topo_;
};

}  // namespace treeplace
