#include "treeplace/contribution.hpp"

#include <algorithm>
#include <string>

#include "treeplace/errors.hpp"

namespace treeplace {

std::string_view to_string(BandwidthMode mode) {
  return mode == BandwidthMode::PaperLiteral ? "paper-literal" : "aggregate";
}

BandwidthMode parse_mode(std::string_view text) {
  if (text == "paper-literal") return BandwidthMode::PaperLiteral;
  if (text == "aggregate") return BandwidthMode::Aggregate;
  throw ConfigError("unknown bandwidth mode '" + std::string(text) + "'");
}

namespace {

void check_index(const NodeTable& t, int i) {
  if (i < 0 || i > t.depth) {
    throw RangeError("index " + std::to_string(i) + " outside [0, " + std::to_string(t.depth) +
                     "] for node '" + t.node.str() + "'");
  }
}

}  // namespace

Contribution NodeTable::c(int i) const {
  check_index(*this, i);
  return static_cast<std::size_t>(i) < c_row.size() ? c_row[i] : c_row.back();
}

const std::vector<NodeId>& NodeTable::e(int i) const {
  check_index(*this, i);
  if (e_row.empty()) throw ContractViolation("leaf '" + node.str() + "' has no e-sets");
  return static_cast<std::size_t>(i) < e_row.size() ? e_row[i] : e_row.back();
}

ContributionTable::ContributionTable(const StarTree& tree, BandwidthMode mode, std::vector<NodeTable> tables)
    : tree_(&tree), mode_(mode), tables_(std::move(tables)), max_range_(tree.max_leaf_qos()) {}

const NodeTable& ContributionTable::at(const NodeId& id) const { return tables_[tree_->index_of(id)]; }

Bandwidth min_bw_on_path(const StarTree& tree, std::size_t v, int i) {
  const auto& start = tree.node(v);
  if (i < 0 || i > start.depth) {
    throw RangeError("path of " + std::to_string(i) + " edges above '" + start.id.str() + "' leaves the tree");
  }
  Bandwidth bound = Bandwidth::unbounded();
  std::size_t cur = v;
  for (int k = 0; k < i; ++k) {
    bound = std::min(bound, tree.node(cur).link_bw);
    cur = *tree.node(cur).parent;
  }
  return bound;
}

Contribution leaf_contribution(const StarLeaf& leaf, int i, Bandwidth path_min_bw) {
  if (i <= leaf.qos && Amount(leaf.weight) <= path_min_bw) return Contribution(leaf.weight);
  return Contribution::unbounded();
}

GreedyOutcome greedy_e_set(std::span<const ChildContribution> children, Amount bound) {
  std::int64_t finite_sum = 0;
  std::size_t unbounded_count = 0;
  std::vector<const ChildContribution*> candidates;
  for (const auto& c : children) {
    if (c.value.finite()) {
      finite_sum += c.value.value();
    } else {
      ++unbounded_count;
    }
    if (c.eligible) candidates.push_back(&c);
  }
  std::sort(candidates.begin(), candidates.end(), [](const ChildContribution* a, const ChildContribution* b) {
    if (a->value != b->value) return a->value > b->value;
    return a->id < b->id;
  });

  auto over = [&] { return unbounded_count > 0 || Amount(finite_sum) > bound; };
  GreedyOutcome out;
  for (std::size_t k = 0; k < candidates.size() && over(); ++k) {
    const auto& taken = *candidates[k];
    if (taken.value.finite()) {
      finite_sum -= taken.value.value();
    } else {
      --unbounded_count;
    }
    out.e_set.push_back(taken.id);
  }
  std::sort(out.e_set.begin(), out.e_set.end());
  out.exhausted = over();
  out.residual = unbounded_count > 0 ? Contribution::unbounded() : Contribution(finite_sum);
  return out;
}

NodeUpdate internal_node_update(const NodeId& node, std::span<const ChildContribution> next_level, int i,
                                std::size_t e0_size, Amount bound) {
  GreedyOutcome g = greedy_e_set(next_level, bound);
  if (g.exhausted) {
    if (i == 0) {
      throw Infeasible(InfeasibleReason::CapacityExhausted, {node},
                       "children of '" + node.str() + "' exceed the capacity with every eligible child equipped");
    }
    return {std::move(g.e_set), Contribution::unbounded()};
  }
  if (i > 0 && g.e_set.size() != e0_size) return {std::move(g.e_set), Contribution::unbounded()};
  return {std::move(g.e_set), g.residual};
}

std::int64_t compute_m(std::span<const std::int64_t> child_m, std::size_t e0_size) {
  std::int64_t m = static_cast<std::int64_t>(e0_size);
  for (std::int64_t x : child_m) m += x;
  return m;
}

ContributionTable run_phase1(const StarTree& tree, BandwidthMode mode) {
  const Amount capacity(tree.capacity());
  std::vector<NodeTable> tables(tree.size());

  for (std::size_t v : tree.post_order()) {
    const StarNode& node = tree.node(v);
    NodeTable& t = tables[v];
    t.node = node.id;
    t.depth = node.depth;

    if (node.leaf) {
      const StarLeaf& leaf = *node.leaf;
      if (leaf.weight > tree.capacity()) {
        throw Infeasible(InfeasibleReason::LeafOverCapacity, {leaf.id},
                         std::to_string(leaf.weight) + " > W=" + std::to_string(tree.capacity()));
      }
      // Index depth(v) is r+, which never serves.
      Bandwidth path = Bandwidth::unbounded();
      std::size_t cur = v;
      for (int i = 0; i <= node.depth; ++i) {
        if (i > 0) {
          path = std::min(path, tree.node(cur).link_bw);
          cur = *tree.node(cur).parent;
        }
        const Contribution c = i == node.depth ? Contribution::unbounded() : leaf_contribution(leaf, i, path);
        t.c_row.push_back(c);
        if (c.is_unbounded()) break;
      }
      continue;
    }

    // Rows of v only change while some child row still changes at i + 1.
    std::size_t child_len = 0;
    for (std::size_t c : node.children) child_len = std::max(child_len, tables[c].c_row.size());
    const int stored = std::min(node.depth, std::max(0, static_cast<int>(child_len) - 2)) + 1;

    std::vector<ChildContribution> level(node.children.size());
    std::vector<std::int64_t> child_m;
    child_m.reserve(node.children.size());
    for (std::size_t k = 0; k < node.children.size(); ++k) {
      const StarNode& child = tree.node(node.children[k]);
      level[k].id = child.id;
      level[k].eligible = !child.leaf || child.leaf->eligible;
      child_m.push_back(tables[node.children[k]].m_value.value_or(0));
    }

    Bandwidth path = Bandwidth::unbounded();
    std::size_t cur = v;
    for (int i = 0; i < stored; ++i) {
      if (i > 0) {
        path = std::min(path, tree.node(cur).link_bw);
        cur = *tree.node(cur).parent;
      }
      for (std::size_t k = 0; k < node.children.size(); ++k) level[k].value = tables[node.children[k]].c(i + 1);
      const Amount bound = mode == BandwidthMode::Aggregate ? std::min(capacity, path) : capacity;
      const std::size_t e0 = t.e_row.empty() ? 0 : t.e_row.front().size();
      NodeUpdate update = internal_node_update(node.id, level, i, e0, bound);
      t.c_row.push_back(update.contribution);
      t.e_row.push_back(std::move(update.e_set));
    }
    t.m_value = compute_m(child_m, t.e_row.front().size());
  }
  return ContributionTable(tree, mode, std::move(tables));
}

}  // namespace treeplace
