#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "treeplace/node_id.hpp"

namespace treeplace {

// Reserved for the artificial root added by the transformation.
inline constexpr std::string_view kRootPlusId = "__r_plus__";

enum class NodeKind { Client, Internal };

struct NodeSpec {
  NodeId id;
  std::optional<NodeId> parent;          // absent only for the root
  std::optional<std::int64_t> link_bw;   // bandwidth of the edge to parent
  NodeKind kind = NodeKind::Internal;
  std::optional<std::int64_t> requests;  // w(v), clients only
  std::optional<std::int64_t> qos;       // q(v) in hops, clients only

  friend bool operator==(const NodeSpec&, const NodeSpec&) = default;
};

// The original distribution tree. Plain data: it may hold an invalid tree
// until validate_instance() says otherwise; parse_instance() only ever
// returns valid ones.
struct NetworkInstance {
  std::int64_t capacity = 0;  // W
  std::vector<NodeSpec> nodes;

  friend bool operator==(const NetworkInstance&, const NetworkInstance&) = default;
};

enum class ViolationCategory { Structure, Role, Value };

struct InstanceViolation {
  ViolationCategory category;
  std::string code;  // e.g. "duplicate-id", "root-role"
  NodeId node;
  std::string message;
};

std::vector<InstanceViolation> validate_instance(const NetworkInstance& inst);

// Throws MalformedDocument, StructureError or RoleError.
NetworkInstance parse_instance(std::string_view text);

// Canonical form: keys sorted, nodes sorted by id, newline-terminated.
std::string serialize_instance(const NetworkInstance& inst);

// Same instance with nodes sorted by id; parse(serialize(x)) == canonical(x).
NetworkInstance canonical(NetworkInstance inst);

// Sorted id index over a node list. Lookups binary-search a compact array of
// 16-byte id prefixes, which stays cache-resident far longer than a hash map
// of strings on large trees. The node list must outlive the index.
class IdIndex {
 public:
  IdIndex() = default;
  explicit IdIndex(const std::vector<NodeSpec>& nodes);

  // Lowest position holding `id`.
  std::optional<std::size_t> find(const NodeId& id) const;
  // Positions ordered by (id, position).
  std::span<const std::size_t> order() const { return order_; }

  struct Key {
    std::uint64_t hi = 0;
    std::uint64_t lo = 0;
    auto operator<=>(const Key&) const = default;
  };

 private:
  const std::vector<NodeSpec>* nodes_ = nullptr;
  std::vector<Key> keys_;  // parallel to order_
  std::vector<std::size_t> order_;
};

// Index over a valid instance. The reference constructor requires the
// instance to outlive the index; the shared one keeps it alive.
class Topology {
 public:
  // Throws ContractViolation if the instance does not validate.
  explicit Topology(const NetworkInstance& inst);
  explicit Topology(std::shared_ptr<const NetworkInstance> inst);

  const NetworkInstance& instance() const { return inst_; }
  std::size_t size() const { return inst_.nodes.size(); }
  const NodeSpec& spec(std::size_t i) const { return inst_.nodes[i]; }
  const NodeId& id(std::size_t i) const { return inst_.nodes[i].id; }
  bool is_client(std::size_t i) const { return client_[i] != 0; }

  std::optional<std::size_t> index_of(const NodeId& id) const;
  std::optional<std::size_t> parent(std::size_t i) const { return parent_[i]; }
  // Children in ascending id order.
  std::span<const std::size_t> children(std::size_t i) const {
    return std::span<const std::size_t>(child_list_).subspan(child_start_[i], child_start_[i + 1] - child_start_[i]);
  }
  std::size_t root() const { return root_; }

  // Ascending id order.
  std::span<const std::size_t> clients() const { return clients_; }
  std::span<const std::size_t> internals() const { return internals_; }
  // Children before parents; siblings in ascending id order.
  std::span<const std::size_t> post_order() const { return post_order_; }

 private:
  std::shared_ptr<const NetworkInstance> owned_;
  const NetworkInstance& inst_;
  IdIndex index_;
  std::vector<std::optional<std::size_t>> parent_;
  std::vector<char> client_;
  // Children of i are child_list_[child_start_[i] .. child_start_[i+1]).
  std::vector<std::size_t> child_start_;
  std::vector<std::size_t> child_list_;
  std::vector<std::size_t> clients_;
  std::vector<std::size_t> internals_;
  std::vector<std::size_t> post_order_;
  std::size_t root_ = 0;
};

enum class ClientIssueKind { LinkBandwidth, OverCapacity };

struct ClientIssue {
  NodeId client;
  ClientIssueKind kind;
  std::int64_t demand;
  std::int64_t limit;  // link bandwidth or W
};

struct PrecheckResult {
  std::vector<ClientIssue> issues;
  bool ok() const { return issues.empty(); }
};

// Flags every client whose demand exceeds its own link or W.
PrecheckResult precheck_client_links(const NetworkInstance& inst);

}  // namespace treeplace
