#include "support.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace treeplace::testing {

std::string fixture_path(const std::string& name) { return std::string(TREEPLACE_FIXTURE_DIR) + "/" + name; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

NetworkInstance load_fixture(const std::string& name) { return parse_instance(read_file(fixture_path(name))); }

Builder& Builder::root(const std::string& id) {
  inst_.nodes.push_back({NodeId(id), std::nullopt, std::nullopt, NodeKind::Internal, std::nullopt, std::nullopt});
  return *this;
}

Builder& Builder::internal(const std::string& id, const std::string& parent, std::int64_t bw) {
  inst_.nodes.push_back({NodeId(id), NodeId(parent), bw, NodeKind::Internal, std::nullopt, std::nullopt});
  return *this;
}

Builder& Builder::client(const std::string& id, const std::string& parent, std::int64_t bw, std::int64_t w,
                         std::int64_t q) {
  inst_.nodes.push_back({NodeId(id), NodeId(parent), bw, NodeKind::Client, w, q});
  return *this;
}

std::vector<NodeId> ids(std::initializer_list<const char*> names) {
  std::vector<NodeId> out;
  for (const char* n : names) out.emplace_back(n);
  return out;
}

std::optional<std::size_t> dual_role_minimum(const DualRoleTree& tree) {
  const std::size_t n = tree.nodes.size();
  std::map<NodeId, std::size_t> at;
  for (std::size_t i = 0; i < n; ++i) at[tree.nodes[i].id] = i;
  std::vector<std::optional<std::size_t>> up(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (tree.nodes[i].parent) up[i] = at.at(*tree.nodes[i].parent);
  }
  std::optional<std::size_t> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (best && size >= *best) continue;
    std::vector<std::int64_t> load(n, 0);
    bool ok = true;
    for (std::size_t u = 0; u < n && ok; ++u) {
      const auto& node = tree.nodes[u];
      if (node.demand == 0) continue;
      std::optional<std::size_t> cur = u;
      std::int64_t hops = 0;
      while (cur && !(mask >> *cur & 1)) {
        if (tree.nodes[*cur].link_bw && node.demand > *tree.nodes[*cur].link_bw) ok = false;
        cur = up[*cur];
        ++hops;
      }
      if (!cur || hops > node.qos) ok = false;
      if (ok) load[*cur] += node.demand;
    }
    for (std::size_t s = 0; s < n && ok; ++s) ok = load[s] <= tree.capacity;
    if (ok) best = size;
  }
  return best;
}

bool star_feasible(const StarTree& tree, const std::set<NodeId>& replicas) {
  const std::size_t n = tree.size();
  std::vector<char> equipped(n, 0);
  for (std::size_t v = 1; v < n; ++v) {
    const auto& node = tree.node(v);
    const bool eligible = !node.leaf || node.leaf->eligible;
    if (!eligible) continue;
    const NodeId original = node.leaf ? *node.leaf->former_internal : node.id;
    equipped[v] = replicas.count(original) ? 1 : 0;
  }
  std::vector<std::int64_t> load(n, 0);
  for (std::size_t v = 1; v < n; ++v) {
    const auto& node = tree.node(v);
    if (!node.leaf) continue;
    std::size_t cur = v;
    std::int64_t hops = 0;
    while (!equipped[cur]) {
      if (cur == StarTree::kRootPlus) return false;
      const Bandwidth bw = tree.node(cur).link_bw;
      if (!bw.is_unbounded() && node.leaf->weight > bw.value()) return false;
      cur = *tree.node(cur).parent;
      ++hops;
    }
    if (hops > node.leaf->qos) return false;
    load[cur] += node.leaf->weight;
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (load[v] > tree.capacity()) return false;
  }
  return true;
}

NetworkInstance corpus_instance(std::uint64_t seed) { return generate(small_instance_config(seed)); }

}  // namespace treeplace::testing

namespace treeplace::testing {

namespace {

std::string at(const NodeTable& t, int i) { return "'" + t.node.str() + "' level " + std::to_string(i); }

// Smallest number of eligible children whose removal brings the rest to <= bound.
std::optional<std::size_t> min_removal(const std::vector<ChildContribution>& kids, Amount bound) {
  const std::size_t n = kids.size();
  std::optional<std::size_t> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Amount rest = 0;
    bool ok = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (mask >> j & 1) {
        if (!kids[j].eligible) ok = false;
      } else {
        rest += kids[j].value;
      }
    }
    if (!ok || rest > bound) continue;
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (!best || size < *best) best = size;
  }
  return best;
}

}  // namespace

std::vector<std::string> invariant_failures(const StarTree& tree, const ContributionTable& table,
                                            const PlacementResult& placement) {
  std::vector<std::string> out;
  for (std::size_t v = 0; v < tree.size(); ++v) {
    const auto& node = tree.node(v);
    const NodeTable& t = table[v];
    for (int i = 0; i < node.depth; ++i) {
      if (t.c(i) > t.c(i + 1)) out.push_back("C decreases at " + at(t, i));
      if (!node.is_leaf() && t.e(i).size() > t.e(i + 1).size()) out.push_back("|e| decreases at " + at(t, i));
    }
    if (node.is_leaf()) continue;
    for (int i = 1; i <= node.depth; ++i) {
      if (t.c(i).finite() && t.e(i).size() != t.e(0).size()) out.push_back("finite C with |e| != |e0| at " + at(t, i));
    }
    if (node.children.size() > 16) continue;
    std::vector<ChildContribution> kids;
    for (std::size_t c : node.children) {
      const auto& child = tree.node(c);
      kids.push_back({child.id, !child.leaf || child.leaf->eligible, table[c].c(1)});
    }
    const auto best = min_removal(kids, Amount(tree.capacity()));
    if (!best) {
      out.push_back("e(v,0) exists but no removal set does at " + at(t, 0));
    } else if (*best != t.e(0).size()) {
      out.push_back("e(v,0) of size " + std::to_string(t.e(0).size()) + " where " + std::to_string(*best) +
                    " suffice at " + at(t, 0));
    }
  }
  const auto m = static_cast<std::size_t>(table.total());
  if (placement.cardinality != m || placement.replicas_star.size() != m || placement.replicas_original.size() != m)
    out.push_back("placed count differs from m(T*)=" + std::to_string(m));
  return out;
}

}  // namespace treeplace::testing
