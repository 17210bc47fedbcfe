#include "treeplace/oracle.hpp"

#include <string>

#include "treeplace/errors.hpp"
#include "treeplace/verifier.hpp"

namespace treeplace {

OracleResult brute_force_min(const NetworkInstance& inst, BandwidthMode mode, std::size_t max_n) {
  PlacementVerifier verifier(inst);
  const auto internals = verifier.topology().internals();
  const std::size_t n = internals.size();
  if (n > max_n) {
    throw GuardExceeded(std::to_string(n) + " internal nodes exceed the oracle guard of " + std::to_string(max_n));
  }

  OracleResult result;
  result.mode = mode;
  std::vector<char> equipped(verifier.topology().size(), 0);
  for (std::size_t k = 0; k <= n; ++k) {
    // Positions into `internals`, advanced lexicographically.
    std::vector<std::size_t> pick(k);
    for (std::size_t j = 0; j < k; ++j) pick[j] = j;
    OracleOptimum best;
    while (true) {
      for (std::size_t j : pick) equipped[internals[j]] = 1;
      ++result.explored;
      if (verifier.feasible(equipped, mode)) {
        if (best.optimal_sets++ == 0) {
          for (std::size_t j : pick) best.witness.push_back(verifier.topology().id(internals[j]));
        }
      }
      for (std::size_t j : pick) equipped[internals[j]] = 0;

      std::size_t j = k;
      while (j > 0 && pick[j - 1] == n - k + j - 1) --j;
      if (j == 0) break;
      ++pick[j - 1];
      for (std::size_t t = j; t < k; ++t) pick[t] = pick[t - 1] + 1;
    }
    if (best.optimal_sets > 0) {
      best.cardinality = k;
      result.optimum = std::move(best);
      return result;
    }
  }
  return result;
}

}  // namespace treeplace
