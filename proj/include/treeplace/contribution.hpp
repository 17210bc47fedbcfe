#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "treeplace/amount.hpp"
#include "treeplace/star_tree.hpp"

namespace treeplace {

// paper-literal: link bandwidth is checked per leaf bundle only.
// aggregate: additionally bounds the residual that crosses every link on the
// way to the serving ancestor (experimental).
enum class BandwidthMode { PaperLiteral, Aggregate };

std::string_view to_string(BandwidthMode mode);
// Accepts "paper-literal" and "aggregate"; throws ConfigError otherwise.
BandwidthMode parse_mode(std::string_view text);

// Phase-1 results for one node of T*.
//
// Rows are stored up to the first index from which every value repeats; the
// accessors extend the last stored entry up to `depth`.
struct NodeTable {
  NodeId node;
  int depth = 0;
  std::vector<Contribution> c_row;          // C(v, i)
  std::vector<std::vector<NodeId>> e_row;   // e(v, i), internal nodes only
  std::optional<std::int64_t> m_value;      // m(t(v)), internal nodes only

  // i in [0, depth]; throws RangeError otherwise.
  Contribution c(int i) const;
  const std::vector<NodeId>& e(int i) const;
};

class ContributionTable {
 public:
  ContributionTable(const StarTree& tree, BandwidthMode mode, std::vector<NodeTable> tables);

  const NodeTable& operator[](std::size_t star_index) const { return tables_[star_index]; }
  const NodeTable& at(const NodeId& id) const;
  std::span<const NodeTable> tables() const { return tables_; }

  // m(T*): total replica count.
  std::int64_t total() const { return *tables_[StarTree::kRootPlus].m_value; }
  // L: the largest leaf qos.
  std::int64_t max_range() const { return max_range_; }
  BandwidthMode mode() const { return mode_; }

 private:
  const StarTree* tree_;
  BandwidthMode mode_;
  std::vector<NodeTable> tables_;
  std::int64_t max_range_;
};

// Smallest link bandwidth over the i edges from v upwards. Unbounded for
// i == 0; RangeError when i exceeds depth(v).
Bandwidth min_bw_on_path(const StarTree& tree, std::size_t v, int i);

// C(leaf, i): weight when i <= qos and weight fits path_min_bw, else unbounded.
Contribution leaf_contribution(const StarLeaf& leaf, int i, Bandwidth path_min_bw);

struct ChildContribution {
  NodeId id;
  bool eligible = true;
  Contribution value;
};

struct GreedyOutcome {
  std::vector<NodeId> e_set;    // ascending
  Contribution residual;        // sum over children outside e_set
  bool exhausted = false;       // residual still above bound with every eligible child taken
};

// Takes eligible children, largest contribution first (ties: smaller id),
// until the rest sums to at most `bound`.
GreedyOutcome greedy_e_set(std::span<const ChildContribution> children, Amount bound);

struct NodeUpdate {
  std::vector<NodeId> e_set;
  Contribution contribution;
};

// e(v, i) and C(v, i) from the children's C(., i+1). `e0_size` is |e(v, 0)|
// and is ignored for i == 0. Exhaustion at i == 0 throws Infeasible.
NodeUpdate internal_node_update(const NodeId& node, std::span<const ChildContribution> next_level,
                                int i, std::size_t e0_size, Amount bound);

// m(t(v)) = sum of the children's m + |e(v, 0)|.
std::int64_t compute_m(std::span<const std::int64_t> child_m, std::size_t e0_size);

// Bottom-up pass over T*. Throws Infeasible.
ContributionTable run_phase1(const StarTree& tree, BandwidthMode mode = BandwidthMode::PaperLiteral);

}  // namespace treeplace
