#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "treeplace/contribution.hpp"
#include "treeplace/errors.hpp"
#include "treeplace/instance.hpp"
#include "treeplace/placement.hpp"
#include "treeplace/star_tree.hpp"

namespace treeplace {

struct SolveOutcome {
  BandwidthMode mode = BandwidthMode::PaperLiteral;
  std::optional<InfeasibleReason> reason;  // set iff infeasible
  std::string detail;
  std::shared_ptr<const StarTree> star;    // set when the transform succeeded
  std::optional<ContributionTable> table;  // refers into *star
  std::optional<PlacementResult> placement;

  bool feasible() const { return !reason.has_value(); }
};

// transform -> phase 1 -> phase 2 -> workload and verifier self-checks.
// Infeasibility is reported in the outcome; a failed self-check throws
// SolverDefect.
SolveOutcome solve(const NetworkInstance& inst, BandwidthMode mode = BandwidthMode::PaperLiteral);

struct BenchRow {
  std::size_t nodes = 0;
  std::int64_t max_qos = 0;  // L
  double seconds = 0;        // best of the repeats
  std::int64_t replicas = -1;  // -1 when infeasible
};

// Balanced instance with `nodes` total nodes (half internal, arity 4) and
// client qos drawn from [1, max_qos].
NetworkInstance bench_instance(std::size_t nodes, std::int64_t max_qos, std::uint64_t seed);

// Times solve() on bench_instance(); reports the fastest of `repeats` runs.
BenchRow bench_solve(std::size_t nodes, std::int64_t max_qos, std::uint64_t seed, int repeats);

}  // namespace treeplace
