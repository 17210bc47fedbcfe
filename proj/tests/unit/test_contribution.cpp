#include "doctest.h"
#include "figure5_expected.hpp"
#include "support.hpp"
#include "treeplace/contribution.hpp"
#include "treeplace/errors.hpp"

using namespace treeplace;
using treeplace::testing::Builder;

namespace {

const Contribution kInf = Contribution::unbounded();

std::vector<ChildContribution> kids(std::initializer_list<ChildContribution> l) { return l; }

std::string set_text(const std::vector<NodeId>& e) {
  std::string s = "{";
  for (std::size_t k = 0; k < e.size(); ++k) s += (k ? "," : "") + e[k].str();
  return s + "}";
}

StarLeaf leaf(std::int64_t w, std::int64_t q) {
  StarLeaf l;
  l.id = NodeId("l");
  l.weight = w;
  l.qos = q;
  l.eligible = true;
  return l;
}

}  // namespace

TEST_SUITE("contribution") {

TEST_CASE("min bandwidth on path") {
  // r -> a (7) -> b (2)... built so that leaf l's path reads 4, 7, 2.
  auto inst = Builder(20)
                  .root("r")
                  .internal("a", "r", 2)
                  .internal("b", "a", 7)
                  .internal("e", "b", 4)
                  .client("lc", "e", 9, 3, 4)
                  .build();
  const auto t = transform_to_star(inst);
  const std::size_t l = t.index_of(NodeId("e"));
  CHECK(min_bw_on_path(t, l, 0).is_unbounded());
  CHECK(min_bw_on_path(t, l, 1) == Bandwidth(4));
  CHECK(min_bw_on_path(t, l, 2) == Bandwidth(4));
  CHECK(min_bw_on_path(t, l, 3) == Bandwidth(2));
  CHECK(min_bw_on_path(t, l, 4) == Bandwidth(0));
  CHECK_THROWS_AS(min_bw_on_path(t, l, 5), RangeError);
}

TEST_CASE("leaf contribution") {
  for (int i = 0; i <= 2; ++i) CHECK(leaf_contribution(leaf(3, 2), i, 4) == Contribution(3));
  for (int i = 3; i <= 4; ++i) CHECK(leaf_contribution(leaf(3, 2), i, 4) == kInf);
  CHECK(leaf_contribution(leaf(7, 3), 1, 6) == kInf);
  for (int i = 0; i <= 3; ++i) CHECK(leaf_contribution(leaf(0, 3), i, 0) == Contribution(0));
}

TEST_CASE("greedy") {
  auto j = greedy_e_set(kids({{NodeId("o"), true, 4}, {NodeId("p"), true, 12}}), 15);
  CHECK(j.e_set == testing::ids({"p"}));
  CHECK(j.residual == Contribution(4));
  CHECK_FALSE(j.exhausted);

  auto e = greedy_e_set(kids({{NodeId("l"), true, 3}}), 15);
  CHECK(e.e_set.empty());
  CHECK(e.residual == Contribution(3));

  auto c = greedy_e_set(kids({{NodeId("x"), false, 3}, {NodeId("g"), true, kInf}, {NodeId("h"), true, 8},
                              {NodeId("i"), true, kInf}}),
                        15);
  CHECK(c.e_set == testing::ids({"g", "i"}));
  CHECK(c.residual == Contribution(11));

  CHECK(greedy_e_set(kids({{NodeId("x"), false, 20}}), 15).exhausted);

  // equal contributions: smaller id goes first
  auto tie = greedy_e_set(kids({{NodeId("b"), true, 8}, {NodeId("a"), true, 8}}), 10);
  CHECK(tie.e_set == testing::ids({"a"}));
}

TEST_CASE("internal node update") {
  auto e0 = internal_node_update(NodeId("e"), kids({{NodeId("l"), true, 3}}), 0, 0, 15);
  CHECK(e0.e_set.empty());
  CHECK(e0.contribution == Contribution(3));

  auto e2 = internal_node_update(NodeId("e"), kids({{NodeId("l"), true, kInf}}), 2, 0, 15);
  CHECK(e2.e_set == testing::ids({"l"}));
  CHECK(e2.contribution == kInf);

  auto d0 = internal_node_update(NodeId("d"),
                                 kids({{NodeId("j"), true, 4}, {NodeId("k"), true, kInf}, {NodeId("y"), false, 8}}),
                                 0, 0, 15);
  CHECK(d0.e_set == testing::ids({"k"}));
  CHECK(d0.contribution == Contribution(12));

  CHECK_THROWS_AS(internal_node_update(NodeId("v"), kids({{NodeId("x"), false, 20}}), 0, 0, 15), Infeasible);
  CHECK(internal_node_update(NodeId("v"), kids({{NodeId("x"), false, 20}}), 1, 0, 15).contribution == kInf);
}

TEST_CASE("compute m") {
  CHECK(compute_m(std::vector<std::int64_t>{0, 0}, 1) == 1);
  CHECK(compute_m(std::vector<std::int64_t>{0, 0, 0, 0}, 2) == 2);
  CHECK(compute_m(std::vector<std::int64_t>{6}, 1) == 7);
}

TEST_CASE("single leaf under the root") {
  const auto t = transform_to_star(testing::load_fixture("minimal.json"));
  const auto table = run_phase1(t);
  CHECK(table.total() == 1);
  CHECK(table[StarTree::kRootPlus].e(0) == testing::ids({"r"}));

  // weight above W: no server can take it
  CHECK_THROWS_AS(run_phase1(transform_to_star(Builder(4).root("r").client("c", "r", 5, 5, 2).build())), Infeasible);
}

TEST_CASE("figure-5 tables") {
  const auto t = transform_to_star(testing::load_fixture("figure5.json"));
  const auto table = run_phase1(t);
  CHECK(table.total() == 7);
  CHECK(table.max_range() == t.max_leaf_qos());

  for (const auto& row : testing::figure5::kLeaves) {
    CAPTURE(row.leaf);
    const NodeTable& nt = table.at(NodeId(row.leaf));
    REQUIRE(nt.depth + 1 == static_cast<int>(row.c.size()));
    for (int i = 0; i <= nt.depth; ++i) CHECK(nt.c(i).to_string() == row.c[i]);
  }
  for (const auto& cell : testing::figure5::kInternal) {
    CAPTURE(cell.node);
    CAPTURE(cell.level);
    const NodeTable& nt = table.at(NodeId(cell.node));
    CHECK(set_text(nt.e(cell.level)) == cell.e);
    CHECK(nt.c(cell.level).to_string() == cell.c);
  }
  for (const auto& m : testing::figure5::kM) {
    CAPTURE(m.node);
    CHECK(table.at(NodeId(m.node)).m_value == m.m);
  }
}

TEST_CASE("rows extend past storage") {
  const auto t = transform_to_star(testing::load_fixture("figure5.json"));
  const auto table = run_phase1(t);
  const NodeTable& a = table.at(NodeId("a"));
  CHECK(a.c(1) == kInf);
  CHECK_THROWS_AS(a.c(2), RangeError);
  CHECK_THROWS_AS(a.c(-1), RangeError);
}

TEST_CASE("mode names") {
  CHECK(parse_mode("paper-literal") == BandwidthMode::PaperLiteral);
  CHECK(parse_mode("aggregate") == BandwidthMode::Aggregate);
  CHECK_THROWS_AS(parse_mode("both"), ConfigError);
}

}  // TEST_SUITE
