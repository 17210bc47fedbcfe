#include "treeplace/generator.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>
#include <unordered_map>

#include "json.hpp"
#include "treeplace/errors.hpp"

namespace treeplace {

using json = nlohmann::json;

std::string_view to_string(TreeShape shape) {
  switch (shape) {
    case TreeShape::Balanced: return "balanced";
    case TreeShape::Path: return "path";
    case TreeShape::Random: return "random";
  }
  return "random";
}

TreeShape parse_shape(std::string_view text) {
  if (text == "balanced") return TreeShape::Balanced;
  if (text == "path") return TreeShape::Path;
  if (text == "random") return TreeShape::Random;
  throw ConfigError("unknown shape '" + std::string(text) + "'");
}

namespace {

// std::uniform_int_distribution is implementation-defined; this is not.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}

  std::int64_t operator()(IntRange r) {
    const std::uint64_t span = static_cast<std::uint64_t>(r.hi - r.lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(engine_());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return r.lo + static_cast<std::int64_t>(x % span);
  }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>((*this)({0, static_cast<std::int64_t>(n) - 1})); }

 private:
  std::mt19937_64 engine_;
};

void check_range(IntRange r, std::int64_t floor, const char* name) {
  if (r.lo > r.hi) throw ConfigError(std::string(name) + " range is empty");
  if (r.lo < floor) throw ConfigError(std::string(name) + " range starts below " + std::to_string(floor));
}

std::string padded(char prefix, std::size_t k, std::size_t count) {
  const std::size_t width = std::to_string(count > 0 ? count - 1 : 0).size();
  std::string digits = std::to_string(k);
  return std::string(1, prefix) + std::string(width - digits.size(), '0') + digits;
}

// Parent index for each of `count` internal nodes (node 0 is the root).
std::vector<std::size_t> shape_parents(const GenConfig& config, std::size_t count, Draw& draw) {
  std::vector<std::size_t> parent(count, 0);
  const auto arity = static_cast<std::size_t>(config.branching.hi);
  std::vector<std::size_t> open{0};
  std::vector<std::size_t> fanout(count, 0);
  for (std::size_t i = 1; i < count; ++i) {
    switch (config.shape) {
      case TreeShape::Path: parent[i] = i - 1; break;
      case TreeShape::Balanced: parent[i] = (i - 1) / arity; break;
      case TreeShape::Random: {
        const std::size_t pick = draw.index(open.size());
        parent[i] = open[pick];
        if (++fanout[parent[i]] >= arity) {
          open[pick] = open.back();
          open.pop_back();
        }
        open.push_back(i);
        break;
      }
    }
  }
  return parent;
}

void check_config(const GenConfig& config) {
  if (config.internal_count < 1) throw ConfigError("need at least one internal node");
  if (config.capacity < 1) throw ConfigError("W must be positive");
  check_range(config.branching, 0, "branching");
  if (config.branching.hi < 1) throw ConfigError("branching upper bound must be at least 1");
  check_range(config.bandwidth, 0, "bandwidth");
  check_range(config.requests, 0, "request");
  check_range(config.qos, 0, "qos");
}

}  // namespace

GenConfig small_instance_config(std::uint64_t seed) {
  Draw draw(seed ^ 0x9e3779b97f4a7c15ULL);
  GenConfig c;
  c.seed = seed;
  c.internal_count = static_cast<std::size_t>(draw({1, 10}));
  c.client_count = static_cast<std::size_t>(draw({1, 12}));
  const std::int64_t shape = draw({0, 9});
  c.shape = shape == 0 ? TreeShape::Path : shape == 1 ? TreeShape::Balanced : TreeShape::Random;
  c.branching = {1, draw({2, 4})};
  c.capacity = draw({8, 20});
  c.bandwidth = {draw({0, 4}), draw({10, 18})};
  c.requests = {0, draw({4, 8})};
  c.qos = {1, draw({2, 5})};
  return c;
}

NetworkInstance generate(const GenConfig& config) {
  check_config(config);
  if (config.client_count < 1) throw ConfigError("need at least one client");
  Draw draw(config.seed);
  const std::size_t k = config.internal_count;
  const auto parent = shape_parents(config, k, draw);

  NetworkInstance inst;
  inst.capacity = config.capacity;
  std::vector<std::size_t> fanout(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    NodeSpec n;
    n.id = NodeId(padded('n', i, k));
    if (i > 0) {
      n.parent = NodeId(padded('n', parent[i], k));
      n.link_bw = draw(config.bandwidth);
      ++fanout[parent[i]];
    }
    inst.nodes.push_back(std::move(n));
  }

  std::vector<std::size_t> hosts;
  for (std::size_t i = 0; i < k && hosts.size() < config.client_count; ++i) {
    if (fanout[i] == 0) hosts.push_back(i);
  }
  while (hosts.size() < config.client_count) hosts.push_back(draw.index(k));

  for (std::size_t c = 0; c < hosts.size(); ++c) {
    NodeSpec n;
    n.id = NodeId(padded('c', c, hosts.size()));
    n.parent = inst.nodes[hosts[c]].id;
    n.kind = NodeKind::Client;
    n.requests = draw(config.requests);
    n.qos = draw(config.qos);
    n.link_bw = draw(config.bandwidth);
    inst.nodes.push_back(std::move(n));
  }
  return inst;
}

DualRoleTree generate_dual_role(const GenConfig& config) {
  check_config(config);
  Draw draw(config.seed);
  const std::size_t k = config.internal_count;
  const auto parent = shape_parents(config, k, draw);
  DualRoleTree tree;
  tree.capacity = config.capacity;
  const IntRange hops{std::max<std::int64_t>(0, config.qos.lo - 1), std::max<std::int64_t>(0, config.qos.hi - 1)};
  for (std::size_t i = 0; i < k; ++i) {
    DualRoleNode n;
    n.id = NodeId(padded('n', i, k));
    if (i > 0) {
      n.parent = NodeId(padded('n', parent[i], k));
      n.link_bw = draw(config.bandwidth);
    }
    n.demand = draw(config.requests);
    n.qos = draw(hops);
    tree.nodes.push_back(std::move(n));
  }
  if (std::none_of(tree.nodes.begin(), tree.nodes.end(), [](const DualRoleNode& n) { return n.demand > 0; })) {
    tree.nodes.back().demand = std::max<std::int64_t>(1, config.requests.hi);
  }
  return tree;
}

NetworkInstance fictivize(const DualRoleTree& tree) {
  std::int64_t total = 0;
  for (const auto& n : tree.nodes) total += n.demand;

  NetworkInstance inst;
  inst.capacity = tree.capacity;
  std::set<NodeId> ids;
  for (const auto& n : tree.nodes) ids.insert(n.id);
  for (const auto& n : tree.nodes) {
    inst.nodes.push_back({n.id, n.parent, n.link_bw, NodeKind::Internal, std::nullopt, std::nullopt});
    if (n.demand <= 0) continue;
    NodeId client(n.id.str() + "~client");
    if (ids.count(client)) throw ConfigError("fictive id '" + client.str() + "' collides with an existing node");
    inst.nodes.push_back({client, n.id, total, NodeKind::Client, n.demand, n.qos + 1});
  }
  if (std::none_of(inst.nodes.begin(), inst.nodes.end(),
                   [](const NodeSpec& n) { return n.kind == NodeKind::Client; })) {
    throw ConfigError("dual-role tree has no demanding node");
  }
  return inst;
}

namespace {

std::int64_t read_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw MalformedDocument(where + ": expected an integer");
  return v.get<std::int64_t>();
}

}  // namespace

DualRoleTree parse_dual_role(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw MalformedDocument(std::string("syntax error: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("W") || !doc.contains("nodes") || !doc["nodes"].is_array()) {
    throw MalformedDocument("dual-role document needs 'W' and a 'nodes' array");
  }
  for (const auto& [key, _] : doc.items()) {
    if (key != "W" && key != "nodes") throw MalformedDocument("unknown top-level field '" + key + "'");
  }
  DualRoleTree tree;
  tree.capacity = read_int(doc["W"], "W");
  if (tree.capacity <= 0) throw MalformedDocument("W must be positive");
  static const std::set<std::string> fields{"id", "parent", "bw", "w", "q"};
  std::unordered_map<NodeId, std::size_t> index;
  for (std::size_t i = 0; i < doc["nodes"].size(); ++i) {
    const auto& j = doc["nodes"][i];
    const std::string where = "nodes[" + std::to_string(i) + "]";
    if (!j.is_object()) throw MalformedDocument(where + ": expected an object");
    for (const auto& [key, _] : j.items()) {
      if (!fields.count(key)) throw MalformedDocument(where + ": unknown field '" + key + "'");
    }
    if (!j.contains("id") || !j["id"].is_string()) throw MalformedDocument(where + ": 'id' must be a string");
    DualRoleNode n;
    n.id = NodeId(j["id"].get<std::string>());
    if (!j.contains("parent")) throw MalformedDocument(where + ": missing 'parent'");
    if (j["parent"].is_string()) {
      n.parent = NodeId(j["parent"].get<std::string>());
      if (!j.contains("bw")) throw StructureError(where + ": non-root node needs 'bw'");
      n.link_bw = read_int(j["bw"], where + ".bw");
      if (*n.link_bw < 0) throw MalformedDocument(where + ": negative bandwidth");
    } else if (!j["parent"].is_null()) {
      throw MalformedDocument(where + ": 'parent' must be a string or null");
    } else if (j.contains("bw")) {
      throw StructureError(where + ": root must not carry 'bw'");
    }
    if (j.contains("w")) n.demand = read_int(j["w"], where + ".w");
    if (n.demand < 0) throw MalformedDocument(where + ": negative demand");
    if (n.demand > 0 && !j.contains("q")) throw MalformedDocument(where + ": demanding node needs 'q'");
    if (j.contains("q")) n.qos = read_int(j["q"], where + ".q");
    if (n.qos < 0) throw MalformedDocument(where + ": negative qos");
    if (!index.emplace(n.id, i).second) throw StructureError("duplicate id '" + n.id.str() + "'");
    tree.nodes.push_back(std::move(n));
  }
  std::size_t roots = 0;
  for (const auto& n : tree.nodes) {
    if (!n.parent) {
      ++roots;
      continue;
    }
    if (!index.count(*n.parent)) throw StructureError("unknown parent '" + n.parent->str() + "'");
    // Walking up must hit the root within |nodes| steps.
    const DualRoleNode* cur = &n;
    std::size_t steps = 0;
    while (cur->parent && steps++ <= tree.nodes.size()) cur = &tree.nodes[index.at(*cur->parent)];
    if (cur->parent) throw StructureError("cycle through '" + n.id.str() + "'");
  }
  if (roots != 1) throw StructureError("dual-role tree needs exactly one root");
  return tree;
}

std::string serialize_dual_role(const DualRoleTree& tree) {
  json doc;
  doc["W"] = tree.capacity;
  doc["nodes"] = json::array();
  auto nodes = tree.nodes;
  std::stable_sort(nodes.begin(), nodes.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  for (const auto& n : nodes) {
    json j;
    j["id"] = n.id.str();
    j["parent"] = n.parent ? json(n.parent->str()) : json(nullptr);
    if (n.link_bw) j["bw"] = *n.link_bw;
    if (n.demand > 0) {
      j["w"] = n.demand;
      j["q"] = n.qos;
    }
    doc["nodes"].push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

}  // namespace treeplace
