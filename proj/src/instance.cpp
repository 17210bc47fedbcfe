#include "treeplace/instance.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "json.hpp"
#include "treeplace/errors.hpp"

namespace treeplace {

using json = nlohmann::json;

namespace {

void add(std::vector<InstanceViolation>& out, ViolationCategory cat, std::string code,
         const NodeId& node, std::string message) {
  out.push_back({cat, std::move(code), node, std::move(message)});
}

std::int64_t read_int(const json& value, const std::string& where) {
  if (!value.is_number_integer()) throw MalformedDocument(where + ": expected an integer");
  if (value.is_number_unsigned() &&
      value.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    throw MalformedDocument(where + ": integer out of range");
  }
  return value.get<std::int64_t>();
}

const std::set<std::string>& node_fields() {
  static const std::set<std::string> fields{"id", "parent", "bw", "kind", "w", "q"};
  return fields;
}

NodeSpec read_node(const json& j, std::size_t position) {
  const std::string where = "nodes[" + std::to_string(position) + "]";
  if (!j.is_object()) throw MalformedDocument(where + ": expected an object");
  for (const auto& [key, _] : j.items()) {
    if (!node_fields().count(key)) throw MalformedDocument(where + ": unknown field '" + key + "'");
  }
  NodeSpec spec;
  if (!j.contains("id") || !j["id"].is_string()) throw MalformedDocument(where + ": 'id' must be a string");
  spec.id = NodeId(j["id"].get<std::string>());
  if (!j.contains("parent")) throw MalformedDocument(where + ": missing 'parent'");
  if (j["parent"].is_string()) {
    spec.parent = NodeId(j["parent"].get<std::string>());
  } else if (!j["parent"].is_null()) {
    throw MalformedDocument(where + ": 'parent' must be a string or null");
  }
  if (!j.contains("kind") || !j["kind"].is_string()) throw MalformedDocument(where + ": 'kind' must be a string");
  const auto kind = j["kind"].get<std::string>();
  if (kind == "client") {
    spec.kind = NodeKind::Client;
  } else if (kind == "internal") {
    spec.kind = NodeKind::Internal;
  } else {
    throw MalformedDocument(where + ": unknown kind '" + kind + "'");
  }
  if (j.contains("bw")) spec.link_bw = read_int(j["bw"], where + ".bw");
  if (j.contains("w")) spec.requests = read_int(j["w"], where + ".w");
  if (j.contains("q")) spec.qos = read_int(j["q"], where + ".q");
  return spec;
}

IdIndex::Key prefix_key(const NodeId& id) {
  // Big-endian packing of the first 16 bytes, zero padded, so integer order
  // agrees with lexicographic order wherever the prefixes differ.
  IdIndex::Key key;
  const std::string& s = id.str();
  for (std::size_t k = 0; k < 16; ++k) {
    const std::uint64_t byte = k < s.size() ? static_cast<unsigned char>(s[k]) : 0;
    (k < 8 ? key.hi : key.lo) |= byte << (8 * (7 - k % 8));
  }
  return key;
}

struct Scan {
  std::vector<InstanceViolation> violations;
  IdIndex first;
  std::vector<std::optional<std::size_t>> parent_index;
};

// One pass that both validates and builds the id index Topology needs.
Scan scan_instance(const NetworkInstance& inst) {
  Scan scan;
  auto& out = scan.violations;
  const NodeId none;
  if (inst.capacity <= 0) {
    add(out, ViolationCategory::Value, "capacity", none, "W must be positive");
  }
  if (inst.nodes.empty()) {
    add(out, ViolationCategory::Structure, "empty", none, "instance has no nodes");
    return scan;
  }

  scan.first = IdIndex(inst.nodes);
  const IdIndex& first = scan.first;
  // Second occurrences, reported in node order, once per id.
  std::vector<std::size_t> repeats;
  const auto order = first.order();
  for (std::size_t k = 1; k < order.size(); ++k) {
    const bool same = inst.nodes[order[k]].id == inst.nodes[order[k - 1]].id;
    const bool first_repeat = k < 2 || inst.nodes[order[k - 1]].id != inst.nodes[order[k - 2]].id;
    if (same && first_repeat) repeats.push_back(order[k]);
  }
  std::sort(repeats.begin(), repeats.end());
  std::size_t next_repeat = 0;
  for (std::size_t i = 0; i < inst.nodes.size(); ++i) {
    const auto& id = inst.nodes[i].id;
    if (id.empty()) add(out, ViolationCategory::Value, "empty-id", id, "node id is empty");
    if (id.str() == kRootPlusId) {
      add(out, ViolationCategory::Structure, "reserved-id", id, "id is reserved for the artificial root");
    }
    if (next_repeat < repeats.size() && repeats[next_repeat] == i) {
      ++next_repeat;
      add(out, ViolationCategory::Structure, "duplicate-id", id, "duplicate node id '" + id.str() + "'");
    }
  }

  std::vector<std::size_t> roots;
  std::vector<char> has_children(inst.nodes.size(), 0);
  auto& parent_index = scan.parent_index;
  parent_index.resize(inst.nodes.size());
  for (std::size_t i = 0; i < inst.nodes.size(); ++i) {
    const auto& n = inst.nodes[i];
    if (!n.parent) {
      roots.push_back(i);
      if (n.link_bw) add(out, ViolationCategory::Structure, "root-bw", n.id, "root must not carry a link bandwidth");
    } else {
      if (!n.link_bw) add(out, ViolationCategory::Structure, "missing-bw", n.id, "non-root node needs a link bandwidth");
      const auto p = first.find(*n.parent);
      if (!p) {
        add(out, ViolationCategory::Structure, "unknown-parent", n.id,
            "parent '" + n.parent->str() + "' does not exist");
      } else {
        parent_index[i] = *p;
        has_children[*p] = 1;
      }
    }
    if (n.link_bw && *n.link_bw < 0) {
      add(out, ViolationCategory::Value, "negative-bw", n.id, "link bandwidth must be nonnegative");
    }
    if (n.kind == NodeKind::Client) {
      if (!n.parent) add(out, ViolationCategory::Role, "root-role", n.id, "root must be an internal node");
      if (!n.requests || !n.qos) {
        add(out, ViolationCategory::Role, "client-missing-demand", n.id, "client needs both w and q");
      }
      if (n.requests && *n.requests < 0) add(out, ViolationCategory::Value, "negative-demand", n.id, "w must be nonnegative");
      if (n.qos && *n.qos < 0) add(out, ViolationCategory::Value, "negative-qos", n.id, "q must be nonnegative");
    } else if (n.requests || n.qos) {
      add(out, ViolationCategory::Role, "internal-demand", n.id, "internal node must not carry w or q");
    }
  }
  if (roots.empty()) add(out, ViolationCategory::Structure, "no-root", none, "no node without parent");
  for (std::size_t k = 1; k < roots.size(); ++k) {
    add(out, ViolationCategory::Structure, "multiple-roots", inst.nodes[roots[k]].id,
        "second root '" + inst.nodes[roots[k]].id.str() + "'");
  }
  // Parents resolve to the lowest position of an id, which is the first of
  // each run in order().
  for (std::size_t k = 0; k < order.size(); ++k) {
    const std::size_t i = order[k];
    if (k > 0 && inst.nodes[i].id == inst.nodes[order[k - 1]].id) continue;
    if (has_children[i] && inst.nodes[i].kind == NodeKind::Client) {
      add(out, ViolationCategory::Role, "client-with-children", inst.nodes[i].id, "clients must be leaves");
    }
  }

  // Connectivity: every node must reach a root by parent links.
  enum : char { kUnknown, kWalking, kReaches, kStranded };
  std::vector<char> state(inst.nodes.size(), kUnknown);
  for (std::size_t start = 0; start < inst.nodes.size(); ++start) {
    std::vector<std::size_t> path;
    std::size_t cur = start;
    char verdict = kUnknown;
    std::optional<std::size_t> cycle_entry;
    while (true) {
      if (state[cur] == kReaches || state[cur] == kStranded) {
        verdict = state[cur];
        break;
      }
      if (state[cur] == kWalking) {
        cycle_entry = cur;
        verdict = kStranded;
        break;
      }
      state[cur] = kWalking;
      path.push_back(cur);
      if (!inst.nodes[cur].parent) {
        verdict = kReaches;
        break;
      }
      if (!parent_index[cur]) {
        verdict = kStranded;  // unknown parent, already reported
        break;
      }
      cur = *parent_index[cur];
    }
    // Nodes from the cycle entry onwards are on the cycle.
    bool in_cycle = false;
    for (std::size_t idx : path) {
      if (cycle_entry && idx == *cycle_entry) in_cycle = true;
      state[idx] = verdict;
      if (verdict == kStranded && parent_index[idx]) {
        if (in_cycle) {
          add(out, ViolationCategory::Structure, "cycle", inst.nodes[idx].id, "node lies on a parent cycle");
        } else {
          add(out, ViolationCategory::Structure, "disconnected", inst.nodes[idx].id, "node does not reach the root");
        }
      }
    }
  }

  if (std::none_of(inst.nodes.begin(), inst.nodes.end(),
                   [](const NodeSpec& n) { return n.kind == NodeKind::Client; })) {
    add(out, ViolationCategory::Structure, "no-client", none, "instance has no client");
  }
  return scan;
}

}  // namespace

std::vector<InstanceViolation> validate_instance(const NetworkInstance& inst) {
  return scan_instance(inst).violations;
}

NetworkInstance parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw MalformedDocument(std::string("syntax error: ") + e.what());
  }
  if (!doc.is_object()) throw MalformedDocument("instance document must be an object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "W" && key != "nodes") throw MalformedDocument("unknown top-level field '" + key + "'");
  }
  if (!doc.contains("W")) throw MalformedDocument("missing 'W'");
  if (!doc.contains("nodes") || !doc["nodes"].is_array()) throw MalformedDocument("'nodes' must be an array");

  NetworkInstance inst;
  inst.capacity = read_int(doc["W"], "W");
  const auto& nodes = doc["nodes"];
  inst.nodes.reserve(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) inst.nodes.push_back(read_node(nodes[i], i));

  const auto violations = validate_instance(inst);
  if (!violations.empty()) {
    std::string msg;
    for (const auto& v : violations) {
      if (!msg.empty()) msg += "; ";
      msg += v.code + (v.node.empty() ? "" : " (" + v.node.str() + ")") + ": " + v.message;
    }
    switch (violations.front().category) {
      case ViolationCategory::Structure: throw StructureError(msg);
      case ViolationCategory::Role: throw RoleError(msg);
      case ViolationCategory::Value: throw MalformedDocument(msg);
    }
  }
  return inst;
}

NetworkInstance canonical(NetworkInstance inst) {
  std::stable_sort(inst.nodes.begin(), inst.nodes.end(),
                   [](const NodeSpec& a, const NodeSpec& b) { return a.id < b.id; });
  return inst;
}

std::string serialize_instance(const NetworkInstance& inst) {
  json doc;
  doc["W"] = inst.capacity;
  doc["nodes"] = json::array();
  for (const auto& n : canonical(inst).nodes) {
    json j;
    j["id"] = n.id.str();
    j["parent"] = n.parent ? json(n.parent->str()) : json(nullptr);
    j["kind"] = n.kind == NodeKind::Client ? "client" : "internal";
    if (n.link_bw) j["bw"] = *n.link_bw;
    if (n.requests) j["w"] = *n.requests;
    if (n.qos) j["q"] = *n.qos;
    doc["nodes"].push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

Topology::Topology(std::shared_ptr<const NetworkInstance> inst) : Topology(*inst) { owned_ = std::move(inst); }

Topology::Topology(const NetworkInstance& inst) : inst_(inst) {
  Scan scan = scan_instance(inst);
  if (!scan.violations.empty()) {
    throw ContractViolation("topology over an invalid instance: " + scan.violations.front().code);
  }
  const std::size_t n = inst.nodes.size();
  index_ = std::move(scan.first);
  parent_ = std::move(scan.parent_index);
  client_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    client_[i] = inst.nodes[i].kind == NodeKind::Client;
    if (!parent_[i]) root_ = i;
  }

  const auto order = index_.order();

  // Bucketing children by parent in ascending id order keeps each run sorted.
  child_start_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (parent_[i]) ++child_start_[*parent_[i] + 1];
  }
  for (std::size_t i = 0; i < n; ++i) child_start_[i + 1] += child_start_[i];
  child_list_.resize(child_start_[n]);
  std::vector<std::size_t> fill(child_start_.begin(), child_start_.end() - 1);
  clients_.clear();
  internals_.clear();
  for (std::size_t i : order) {
    if (parent_[i]) child_list_[fill[*parent_[i]]++] = i;
    (client_[i] ? clients_ : internals_).push_back(i);
  }

  post_order_.reserve(n);
  std::vector<std::pair<std::size_t, std::size_t>> stack{{root_, 0}};
  while (!stack.empty()) {
    auto& [node, next] = stack.back();
    const auto kids = children(node);
    if (next < kids.size()) {
      const std::size_t child = kids[next++];
      stack.emplace_back(child, 0);
    } else {
      post_order_.push_back(node);
      stack.pop_back();
    }
  }
}

std::optional<std::size_t> Topology::index_of(const NodeId& id) const { return index_.find(id); }

IdIndex::IdIndex(const std::vector<NodeSpec>& nodes) : nodes_(&nodes) {
  const std::size_t n = nodes.size();
  struct Entry {
    Key key;
    std::size_t pos;
  };
  std::vector<Entry> entries(n);
  for (std::size_t i = 0; i < n; ++i) entries[i] = {prefix_key(nodes[i].id), i};
  std::sort(entries.begin(), entries.end(), [&](const Entry& a, const Entry& b) {
    if (a.key != b.key) return a.key < b.key;
    if (const auto c = nodes[a.pos].id <=> nodes[b.pos].id; c != 0) return c < 0;
    return a.pos < b.pos;
  });
  keys_.resize(n);
  order_.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    keys_[k] = entries[k].key;
    order_[k] = entries[k].pos;
  }
}

std::optional<std::size_t> IdIndex::find(const NodeId& id) const {
  if (!nodes_) return std::nullopt;
  const Key key = prefix_key(id);
  auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
  for (; it != keys_.end() && *it == key; ++it) {
    const std::size_t pos = order_[static_cast<std::size_t>(it - keys_.begin())];
    const auto c = (*nodes_)[pos].id <=> id;
    if (c == 0) return pos;
    if (c > 0) break;
  }
  return std::nullopt;
}

PrecheckResult precheck_client_links(const NetworkInstance& inst) {
  PrecheckResult result;
  for (const auto& n : inst.nodes) {
    if (n.kind != NodeKind::Client) continue;
    const std::int64_t w = n.requests.value_or(0);
    if (n.link_bw && w > *n.link_bw) {
      result.issues.push_back({n.id, ClientIssueKind::LinkBandwidth, w, *n.link_bw});
    }
    if (w > inst.capacity) {
      result.issues.push_back({n.id, ClientIssueKind::OverCapacity, w, inst.capacity});
    }
  }
  std::stable_sort(result.issues.begin(), result.issues.end(),
                   [](const ClientIssue& a, const ClientIssue& b) { return a.client < b.client; });
  return result;
}

}  // namespace treeplace
