#include "doctest.h"
#include "support.hpp"
#include "treeplace/documents.hpp"
#include "treeplace/errors.hpp"
#include "treeplace/verifier.hpp"

using namespace treeplace;
using treeplace::testing::Builder;

namespace {

std::set<NodeId> set_of(std::initializer_list<const char*> l) {
  auto v = testing::ids(l);
  return {v.begin(), v.end()};
}

}  // namespace

TEST_SUITE("verifier") {

TEST_CASE("closest assignment") {
  auto inst = Builder(10).root("r").internal("a", "r", 9).client("c", "a", 9, 3, 1).build();
  auto near = closest_assignment(inst, set_of({"a", "r"}));
  CHECK(near.server.at(NodeId("c")) == NodeId("a"));
  CHECK(near.distance.at(NodeId("c")) == 1);

  auto far = closest_assignment(inst, set_of({"r"}));
  REQUIRE(far.unserved.size() == 1);
  CHECK(far.unserved[0].kind == ViolationKind::Unserved);
  CHECK(far.unserved[0].location == NodeId("c"));

  CHECK_THROWS_AS(closest_assignment(inst, set_of({"c"})), ContractViolation);
  CHECK_THROWS_AS(closest_assignment(inst, set_of({"zz"})), ContractViolation);
}

TEST_CASE("figure-5 solution") {
  const auto inst = testing::load_fixture("figure5.json");
  const auto r = set_of({"a", "b", "c", "g", "i", "k", "p"});
  const auto a = closest_assignment(inst, r);
  CHECK(a.server.at(NodeId("x")) == NodeId("c"));
  CHECK(a.server.at(NodeId("x2")) == NodeId("c"));
  const auto report = verify_placement(inst, r, BandwidthMode::PaperLiteral);
  CHECK(report.feasible());
  std::int64_t served = 0;
  for (const auto& [server, load] : report.server_loads) {
    CHECK(load <= inst.capacity);
    served += load;
  }
  std::int64_t demand = 0;
  for (const auto& n : inst.nodes) demand += n.requests.value_or(0);
  CHECK(served == demand);
}

TEST_CASE("shared link gap") {
  const auto inst = testing::load_fixture("shared_link_gap.json");
  const auto r = set_of({"r"});
  CHECK(verify_placement(inst, r, BandwidthMode::PaperLiteral).feasible());
  const auto agg = verify_placement(inst, r, BandwidthMode::Aggregate);
  REQUIRE(agg.violations.size() == 1);
  CHECK(agg.violations[0].kind == ViolationKind::Bandwidth);
  CHECK(agg.violations[0].location == NodeId("u"));
  CHECK(agg.violations[0].amount == 2);
  CHECK(agg.link_flows.at(NodeId("u")) == 12);
}

TEST_CASE("empty set leaves clients unserved") {
  const auto report = verify_placement(testing::load_fixture("minimal.json"), {}, BandwidthMode::PaperLiteral);
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].kind == ViolationKind::Unserved);
  CHECK(report.violations[0].amount == 3);
}

TEST_CASE("capacity and per-bundle bandwidth") {
  auto inst = Builder(10)
                  .root("r")
                  .internal("a", "r", 4)
                  .client("c1", "a", 9, 6, 2)
                  .client("c2", "a", 9, 6, 2)
                  .build();
  const auto at_a = verify_placement(inst, set_of({"a"}), BandwidthMode::PaperLiteral);
  REQUIRE(at_a.violations.size() == 1);
  CHECK(at_a.violations[0].kind == ViolationKind::Capacity);
  CHECK(at_a.violations[0].amount == 2);

  const auto at_r = verify_placement(inst, set_of({"r"}), BandwidthMode::PaperLiteral);
  bool bw = false;
  for (const auto& v : at_r.violations) {
    if (v.kind == ViolationKind::Bandwidth) {
      bw = true;
      CHECK(v.location == NodeId("a"));
      CHECK(v.amount == 8);
      CHECK(v.bundle == NodeId("a"));
    }
  }
  CHECK(bw);
}

TEST_CASE("aggregate feasibility implies paper-literal feasibility") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const auto inst = testing::corpus_instance(seed);
    PlacementVerifier v(inst);
    const auto internals = v.topology().internals();
    if (internals.size() > 8) continue;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << internals.size()); ++mask) {
      std::vector<char> eq(inst.nodes.size(), 0);
      for (std::size_t k = 0; k < internals.size(); ++k) eq[internals[k]] = mask >> k & 1;
      if (v.feasible(eq, BandwidthMode::Aggregate)) CHECK(v.feasible(eq, BandwidthMode::PaperLiteral));
      CHECK(v.feasible(eq, BandwidthMode::PaperLiteral) == v.verify(eq, BandwidthMode::PaperLiteral).feasible());
    }
  }
}

}  // TEST_SUITE
