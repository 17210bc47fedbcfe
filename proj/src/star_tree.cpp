#include "treeplace/star_tree.hpp"

#include <algorithm>

#include "treeplace/errors.hpp"

namespace treeplace {

namespace {
constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);
}

std::optional<std::size_t> StarTree::find(const NodeId& id) const {
  if (id.str() == kRootPlusId) return kRootPlus;
  if (!topo_) return std::nullopt;
  const auto orig = topo_->index_of(id);
  if (!orig || star_of_[*orig] == kAbsent) return std::nullopt;
  return star_of_[*orig];
}

std::size_t StarTree::index_of(const NodeId& id) const {
  if (auto i = find(id)) return *i;
  throw ContractViolation("no node '" + id.str() + "' in the computation tree");
}

std::vector<NodeId> StarTree::back_map(std::size_t i) const {
  const auto& n = nodes_[i];
  if (i == kRootPlus) return {};
  if (!n.leaf) return {n.id};
  std::vector<NodeId> out;
  if (n.leaf->former_internal) out.push_back(*n.leaf->former_internal);
  out.insert(out.end(), n.leaf->clients.begin(), n.leaf->clients.end());
  return out;
}

NodeId StarTree::project(std::size_t i) const {
  const auto& n = nodes_[i];
  if (i == kRootPlus) throw ContractViolation("the artificial root never hosts a replica");
  if (!n.leaf) return n.id;
  if (!n.leaf->eligible) throw ContractViolation("compressed client leaf '" + n.id.str() + "' cannot host a replica");
  return *n.leaf->former_internal;
}

namespace {

struct Merged {
  std::int64_t weight = 0;
  std::int64_t min_qos = 0;
  std::vector<NodeId> ids;
};

Merged merge(std::span<const NodeSpec* const> clients) {
  if (clients.empty()) throw ContractViolation("merging an empty client set");
  Merged m;
  m.min_qos = clients.front()->qos.value_or(0);
  m.ids.reserve(clients.size());
  for (const NodeSpec* c : clients) {
    if (c->kind != NodeKind::Client) throw ContractViolation("'" + c->id.str() + "' is not a client");
    m.weight += c->requests.value_or(0);
    m.min_qos = std::min(m.min_qos, c->qos.value_or(0));
    m.ids.push_back(c->id);
  }
  std::sort(m.ids.begin(), m.ids.end());
  return m;
}

std::vector<const NodeSpec*> pointers(std::span<const NodeSpec> clients) {
  std::vector<const NodeSpec*> out;
  out.reserve(clients.size());
  for (const auto& c : clients) out.push_back(&c);
  return out;
}

}  // namespace

StarLeaf suppress_clients(const NodeId& parent, std::span<const NodeSpec> clients) {
  return suppress_clients(parent, std::span<const NodeSpec* const>(pointers(clients)));
}

StarLeaf suppress_clients(const NodeId& parent, std::span<const NodeSpec* const> clients) {
  Merged m = merge(clients);
  if (m.min_qos - 1 < 0) {
    throw QosExhausted(parent, "clients of '" + parent.str() + "' have no hop budget left for any server");
  }
  StarLeaf leaf;
  leaf.id = parent;
  leaf.weight = m.weight;
  leaf.qos = m.min_qos - 1;
  leaf.eligible = true;
  leaf.former_internal = parent;
  leaf.clients = std::move(m.ids);
  return leaf;
}

StarLeaf compress_clients(std::span<const NodeSpec> clients) {
  return compress_clients(std::span<const NodeSpec* const>(pointers(clients)));
}

StarLeaf compress_clients(std::span<const NodeSpec* const> clients) {
  Merged m = merge(clients);
  if (m.min_qos < 1) {
    throw QosExhausted(m.ids.front(), "client bundle needs a server at distance 0");
  }
  StarLeaf leaf;
  leaf.id = m.ids.front();
  leaf.weight = m.weight;
  leaf.qos = m.min_qos;
  leaf.eligible = false;
  leaf.clients = std::move(m.ids);
  return leaf;
}

// The tree keeps its topology, so these copy the instance rather than borrow it.
StarTreeBuilder::StarTreeBuilder(const NetworkInstance& inst)
    : topo_(std::make_shared<const Topology>(std::make_shared<const NetworkInstance>(inst))) {}

StarTreeBuilder::StarTreeBuilder(std::shared_ptr<const Topology> topo) : topo_(std::move(topo)) {}

void StarTreeBuilder::add_artificial_root() {
  if (root_added_) throw ContractViolation("artificial root already added");
  root_added_ = true;
}

StarTree StarTreeBuilder::build() const {
  if (!root_added_) throw ContractViolation("build() before add_artificial_root()");
  const std::size_t n = topo_->size();

  // An internal node is kept iff its subtree holds a client.
  std::vector<char> alive(n, 0);
  for (std::size_t v : topo_->post_order()) {
    if (topo_->is_client(v)) {
      alive[v] = 1;
    } else {
      for (std::size_t c : topo_->children(v)) alive[v] |= alive[c];
    }
  }

  StarTree tree;
  tree.capacity_ = topo_->instance().capacity;
  tree.topo_ = topo_;
  tree.star_of_.assign(n, kAbsent);
  for (std::size_t v : topo_->internals()) {
    if (!alive[v]) tree.pruned_.push_back(topo_->id(v));
  }

  tree.nodes_.reserve(n + 1);
  auto add_node = [&tree](StarNode node, std::optional<std::size_t> orig) {
    const std::size_t idx = tree.nodes_.size();
    if (node.parent) tree.nodes_[*node.parent].children.push_back(idx);
    if (orig) tree.star_of_[*orig] = idx;
    tree.nodes_.push_back(std::move(node));
    return idx;
  };

  StarNode root_plus;
  root_plus.id = NodeId(kRootPlusId);
  add_node(std::move(root_plus), std::nullopt);

  std::vector<std::pair<std::size_t, std::size_t>> stack{{topo_->root(), StarTree::kRootPlus}};
  while (!stack.empty()) {
    const auto [v, star_parent] = stack.back();
    stack.pop_back();

    std::vector<const NodeSpec*> clients;
    std::vector<std::size_t> internal_children;
    std::optional<std::size_t> first_client;  // children are ascending, so this is the smallest id
    for (std::size_t c : topo_->children(v)) {
      if (topo_->is_client(c)) {
        if (!first_client) first_client = c;
        clients.push_back(&topo_->spec(c));
      } else if (alive[c]) {
        internal_children.push_back(c);
      }
    }

    StarNode node;
    node.id = topo_->id(v);
    node.parent = star_parent;
    node.depth = tree.nodes_[star_parent].depth + 1;
    node.link_bw = topo_->parent(v) ? Bandwidth(*topo_->spec(v).link_bw) : Bandwidth(0);

    if (internal_children.empty()) {
      node.leaf = suppress_clients(node.id, clients);
      add_node(std::move(node), v);
      continue;
    }
    const std::size_t idx = add_node(std::move(node), v);
    if (!clients.empty()) {
      StarNode bundle;
      bundle.leaf = compress_clients(clients);
      bundle.id = bundle.leaf->id;
      bundle.parent = idx;
      bundle.depth = tree.nodes_[idx].depth + 1;
      bundle.link_bw = Bandwidth::unbounded();
      add_node(std::move(bundle), first_client);
    }
    for (auto it = internal_children.rbegin(); it != internal_children.rend(); ++it) {
      stack.emplace_back(*it, idx);
    }
  }

  for (auto& node : tree.nodes_) {
    std::sort(node.children.begin(), node.children.end(),
              [&](std::size_t a, std::size_t b) { return tree.nodes_[a].id < tree.nodes_[b].id; });
    if (node.leaf) tree.max_leaf_qos_ = std::max(tree.max_leaf_qos_, node.leaf->qos);
  }

  tree.post_order_.reserve(tree.nodes_.size());
  std::vector<std::pair<std::size_t, std::size_t>> walk{{StarTree::kRootPlus, 0}};
  while (!walk.empty()) {
    auto& [node, next] = walk.back();
    const auto& children = tree.nodes_[node].children;
    if (next < children.size()) {
      const std::size_t child = children[next++];
      walk.emplace_back(child, 0);
    } else {
      tree.post_order_.push_back(node);
      walk.pop_back();
    }
  }
  return tree;
}

StarTree transform_to_star(const NetworkInstance& inst) {
  return transform_to_star(std::make_shared<const Topology>(std::make_shared<const NetworkInstance>(inst)));
}

StarTree transform_to_star(std::shared_ptr<const Topology> topo) {
  const auto check = precheck_client_links(topo->instance());
  if (!check.ok()) {
    std::vector<NodeId> link, capacity;
    for (const auto& issue : check.issues) {
      (issue.kind == ClientIssueKind::LinkBandwidth ? link : capacity).push_back(issue.client);
    }
    if (!link.empty()) throw Infeasible(InfeasibleReason::ClientLinkBandwidth, link, "");
    throw Infeasible(InfeasibleReason::ClientOverCapacity, capacity, "");
  }
  StarTreeBuilder builder(std::move(topo));
  builder.add_artificial_root();
  return builder.build();
}

}  // namespace treeplace
