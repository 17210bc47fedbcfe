#include <algorithm>

#include "doctest.h"
#include "support.hpp"
#include "treeplace/errors.hpp"
#include "treeplace/instance.hpp"

using namespace treeplace;
using treeplace::testing::Builder;

namespace {

bool has_code(const std::vector<InstanceViolation>& v, const std::string& code) {
  return std::any_of(v.begin(), v.end(), [&](const InstanceViolation& x) { return x.code == code; });
}

}  // namespace

TEST_SUITE("instance") {

TEST_CASE("minimal document parses") {
  const auto inst = parse_instance(R"({"W": 10, "nodes": [
    {"id": "r", "kind": "internal", "parent": null},
    {"id": "c", "kind": "client", "parent": "r", "bw": 5, "w": 2, "q": 1}]})");
  CHECK(inst.capacity == 10);
  REQUIRE(inst.nodes.size() == 2);
  Topology topo(inst);
  CHECK(topo.clients().size() == 1);
  CHECK(topo.internals().size() == 1);
  CHECK(validate_instance(inst).empty());
}

TEST_CASE("client with a child is a role error") {
  CHECK_THROWS_AS(parse_instance(R"({"W": 10, "nodes": [
    {"id": "r", "kind": "internal", "parent": null},
    {"id": "c", "kind": "client", "parent": "r", "bw": 5, "w": 2, "q": 1},
    {"id": "d", "kind": "client", "parent": "c", "bw": 5, "w": 2, "q": 1}]})"),
                  RoleError);
}

TEST_CASE("bad documents") {
  CHECK_THROWS_AS(parse_instance("{"), MalformedDocument);
  CHECK_THROWS_AS(parse_instance(R"({"nodes": []})"), MalformedDocument);
  CHECK_THROWS_AS(parse_instance(R"({"W": 10, "nodes": [{"id": "r", "kind": "internal"}]})"), MalformedDocument);
}

TEST_CASE("figure-5 fixture") {
  const auto inst = testing::load_fixture("figure5.json");
  CHECK(inst.capacity == 15);
  Topology topo(inst);
  CHECK(topo.internals().size() == 16);
  CHECK(topo.clients().size() == 14);
}

TEST_CASE("validate reports duplicates and root role") {
  auto inst = Builder(10).root("r").client("c", "r", 5, 2, 1).build();
  inst.nodes.push_back(inst.nodes[1]);
  CHECK(has_code(validate_instance(inst), "duplicate-id"));

  auto bad_root = Builder(10).root("r").build();
  bad_root.nodes[0].kind = NodeKind::Client;
  bad_root.nodes[0].requests = 1;
  bad_root.nodes[0].qos = 1;
  CHECK(has_code(validate_instance(bad_root), "root-role"));
}

TEST_CASE("each single mutation of a valid tree is caught") {
  const auto base = testing::load_fixture("figure5.json");
  REQUIRE(validate_instance(base).empty());
  for (std::size_t k = 0; k < base.nodes.size(); ++k) {
    CAPTURE(base.nodes[k].id);
    auto dup = base;
    dup.nodes.push_back(base.nodes[k]);
    CHECK_FALSE(validate_instance(dup).empty());

    if (base.nodes[k].parent) {
      auto orphan = base;
      orphan.nodes[k].parent = NodeId("nowhere");
      CHECK_FALSE(validate_instance(orphan).empty());

      auto no_bw = base;
      no_bw.nodes[k].link_bw.reset();
      CHECK_FALSE(validate_instance(no_bw).empty());

      auto neg = base;
      neg.nodes[k].link_bw = -1;
      CHECK_FALSE(validate_instance(neg).empty());
    }
    if (base.nodes[k].kind == NodeKind::Client) {
      auto neg_w = base;
      neg_w.nodes[k].requests = -1;
      CHECK_FALSE(validate_instance(neg_w).empty());
    }
  }
  auto cycle = base;
  // a -> b while b already sits under a
  std::find_if(cycle.nodes.begin(), cycle.nodes.end(), [](auto& n) { return n.id == NodeId("a"); })->parent =
      NodeId("b");
  CHECK_FALSE(validate_instance(cycle).empty());
}

TEST_CASE("round trip") {
  for (const char* name : {"figure5.json", "minimal.json", "shared_link_gap.json"}) {
    CAPTURE(name);
    const auto inst = testing::load_fixture(name);
    const auto text = serialize_instance(inst);
    CHECK(parse_instance(text) == canonical(inst));
    CHECK(serialize_instance(parse_instance(text)) == text);
  }
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const auto inst = testing::corpus_instance(seed);
    CHECK(parse_instance(serialize_instance(inst)) == canonical(inst));
  }
}

TEST_CASE("precheck") {
  auto narrow = Builder(15).root("r").client("c", "r", 6, 7, 2).build();
  auto res = precheck_client_links(narrow);
  REQUIRE(res.issues.size() == 1);
  CHECK(res.issues[0].client == NodeId("c"));
  CHECK(res.issues[0].kind == ClientIssueKind::LinkBandwidth);

  CHECK(precheck_client_links(Builder(15).root("r").client("c", "r", 5, 5, 2).build()).ok());

  auto heavy = precheck_client_links(Builder(15).root("r").client("c", "r", 20, 16, 2).build());
  REQUIRE(heavy.issues.size() == 1);
  CHECK(heavy.issues[0].kind == ClientIssueKind::OverCapacity);
}

TEST_CASE("precheck is monotone in link bandwidth") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    auto inst = testing::corpus_instance(seed);
    const bool ok = precheck_client_links(inst).ok();
    for (auto& n : inst.nodes) {
      if (n.link_bw) *n.link_bw += 5;
    }
    if (ok) CHECK(precheck_client_links(inst).ok());
  }
}

}  // TEST_SUITE
