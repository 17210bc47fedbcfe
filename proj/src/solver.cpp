#include "treeplace/solver.hpp"

#include <chrono>
#include <set>

#include "treeplace/generator.hpp"
#include "treeplace/verifier.hpp"

namespace treeplace {

SolveOutcome solve(const NetworkInstance& inst, BandwidthMode mode) {
  SolveOutcome out;
  out.mode = mode;
  // The outcome's tree keeps the topology, so it owns a copy of the instance.
  const auto topo = std::make_shared<const Topology>(std::make_shared<const NetworkInstance>(inst));
  try {
    out.star = std::make_shared<const StarTree>(transform_to_star(topo));
    out.table.emplace(run_phase1(*out.star, mode));
  } catch (const Infeasible& e) {
    out.reason = e.reason();
    out.detail = e.what();
    out.table.reset();
    return out;
  }
  out.placement.emplace(place_replicas(*out.star, *out.table));

  try {
    root_workload_check(*out.star, *out.table, *out.placement);
  } catch (const Infeasible& e) {
    throw SolverDefect(std::string("workload self-check failed: ") + e.what());
  }
  const std::set<NodeId> replicas(out.placement->replicas_original.begin(), out.placement->replicas_original.end());
  PlacementVerifier verifier(topo);
  const auto equipped = verifier.mask(replicas);
  std::vector<BandwidthMode> modes{BandwidthMode::PaperLiteral};
  if (mode == BandwidthMode::Aggregate) modes.push_back(BandwidthMode::Aggregate);
  for (BandwidthMode m : modes) {
    if (!verifier.feasible(equipped, m)) {
      const auto report = verifier.verify(equipped, m);
      const auto& v = report.violations.front();
      throw SolverDefect("solution fails the " + std::string(to_string(m)) + " verifier: " +
                         std::string(to_string(v.kind)) + " at '" + v.location.str() + "' by " +
                         std::to_string(v.amount));
    }
  }
  return out;
}

NetworkInstance bench_instance(std::size_t nodes, std::int64_t max_qos, std::uint64_t seed) {
  GenConfig config;
  config.seed = seed;
  config.internal_count = std::max<std::size_t>(1, nodes / 2);
  config.client_count = std::max<std::size_t>(1, nodes - config.internal_count);
  config.shape = TreeShape::Balanced;
  config.branching = {4, 4};
  config.capacity = 100;
  config.bandwidth = {10, 60};
  config.requests = {1, 8};
  config.qos = {1, max_qos};
  return generate(config);
}

BenchRow bench_solve(std::size_t nodes, std::int64_t max_qos, std::uint64_t seed, int repeats) {
  const NetworkInstance inst = bench_instance(nodes, max_qos, seed);
  BenchRow row;
  row.nodes = inst.nodes.size();
  row.max_qos = max_qos;
  for (int r = 0; r < std::max(1, repeats); ++r) {
    const auto start = std::chrono::steady_clock::now();
    SolveOutcome outcome = solve(inst);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    if (r == 0 || elapsed.count() < row.seconds) row.seconds = elapsed.count();
    row.replicas = outcome.feasible() ? static_cast<std::int64_t>(outcome.placement->cardinality) : -1;
  }
  return row;
}

}  // namespace treeplace
