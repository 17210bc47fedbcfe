#include "doctest.h"
#include "figure5_expected.hpp"
#include "support.hpp"
#include "treeplace/errors.hpp"
#include "treeplace/placement.hpp"
#include "treeplace/solver.hpp"

using namespace treeplace;

namespace {

std::string set_text(const std::vector<NodeId>& e) {
  std::string s = "{";
  for (std::size_t k = 0; k < e.size(); ++k) s += (k ? "," : "") + e[k].str();
  return s + "}";
}

}  // namespace

TEST_SUITE("placement") {

TEST_CASE("figure-5 replicas and trace") {
  const auto t = transform_to_star(testing::load_fixture("figure5.json"));
  const auto table = run_phase1(t);
  const auto r = place_replicas(t, table);
  CHECK(r.cardinality == 7);
  CHECK(r.replicas_original == testing::ids({"a", "b", "c", "g", "i", "k", "p"}));
  CHECK(map_replicas_to_original(r, t) == r.replicas_original);
  CHECK_NOTHROW(root_workload_check(t, table, r));

  const auto& expected = testing::figure5::kTrace;
  REQUIRE(r.trace.size() == expected.size());
  for (std::size_t k = 0; k < expected.size(); ++k) {
    CAPTURE(k);
    CHECK(r.trace[k].node.str() == expected[k].node);
    CHECK(r.trace[k].level == expected[k].level);
    CHECK(set_text(r.trace[k].placed) == expected[k].placed);
  }
}

TEST_CASE("single leaf under the root") {
  const auto t = transform_to_star(testing::load_fixture("minimal.json"));
  const auto r = place_replicas(t, run_phase1(t));
  CHECK(r.replicas_star == testing::ids({"r"}));
  CHECK(r.replicas_original == testing::ids({"r"}));
}

TEST_CASE("suppressed leaf maps back to its former internal node") {
  // v keeps only clients and becomes the leaf; the replica must come back as v.
  auto inst = testing::Builder(10).root("r").internal("v", "r", 1).client("c", "v", 9, 5, 1).build();
  const auto out = solve(inst);
  REQUIRE(out.feasible());
  CHECK(out.placement->replicas_original == testing::ids({"v"}));
}

TEST_CASE("trace visits every node once, children in order") {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const auto out = solve(testing::corpus_instance(seed));
    if (!out.feasible()) continue;
    const auto& star = *out.star;
    const auto& trace = out.placement->trace;
    CHECK(trace.size() == star.size());
    std::vector<int> seen(star.size(), 0);
    for (const auto& call : trace) ++seen[star.index_of(call.node)];
    for (int s : seen) CHECK(s == 1);
    CHECK(trace.front().node.str() == kRootPlusId);
    CHECK(trace.front().level == 0);
    std::size_t placed = 0;
    for (const auto& call : trace) placed += call.placed.size();
    CHECK(placed == out.placement->cardinality);
  }
}

TEST_CASE("deep paths do not recurse") {
  // 20k internal nodes in a chain, one client at the bottom.
  GenConfig c;
  c.seed = 3;
  c.internal_count = 20000;
  c.client_count = 1;
  c.shape = TreeShape::Path;
  c.bandwidth = {10, 10};
  c.requests = {1, 1};
  c.qos = {1, 1};
  const auto out = solve(generate(c));
  REQUIRE(out.feasible());
  CHECK(out.placement->cardinality == 1);
}

}  // TEST_SUITE
