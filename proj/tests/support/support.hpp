#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "treeplace/contribution.hpp"
#include "treeplace/generator.hpp"
#include "treeplace/instance.hpp"
#include "treeplace/placement.hpp"
#include "treeplace/star_tree.hpp"

namespace treeplace::testing {

std::string fixture_path(const std::string& name);
std::string read_file(const std::string& path);
NetworkInstance load_fixture(const std::string& name);

// Terse hand-built instances.
class Builder {
 public:
  explicit Builder(std::int64_t capacity) { inst_.capacity = capacity; }
  Builder& root(const std::string& id);
  Builder& internal(const std::string& id, const std::string& parent, std::int64_t bw);
  Builder& client(const std::string& id, const std::string& parent, std::int64_t bw, std::int64_t w, std::int64_t q);
  NetworkInstance build() const { return inst_; }

 private:
  NetworkInstance inst_;
};

std::vector<NodeId> ids(std::initializer_list<const char*> names);

// Minimum replica count of the dual-role model, by enumeration over all node
// subsets. Every node may serve; a node's own demand is served by the nearest
// equipped node on its path to the root (itself at distance 0) within q hops,
// the demand must fit every link it crosses, and every server's load must fit
// W. nullopt when nothing is feasible.
std::optional<std::size_t> dual_role_minimum(const DualRoleTree& tree);

// Feasibility judged directly on T*: each leaf is one bundle served by its
// nearest equipped ancestor-or-self, within the leaf's qos, with the leaf
// weight fitting every T* edge on the way, and server loads within W.
// `replicas` are original internal-node ids.
bool star_feasible(const StarTree& tree, const std::set<NodeId>& replicas);

// Table and placement invariants; one message per broken one, empty when all
// hold. The certificate check recomputes minimality of e(v,0) by brute force
// over child subsets (fine for the small corpus, skipped above 16 children).
std::vector<std::string> invariant_failures(const StarTree& tree, const ContributionTable& table,
                                            const PlacementResult& placement);

// Small-instance corpus shared by the property suites.
NetworkInstance corpus_instance(std::uint64_t seed);

}  // namespace treeplace::testing
