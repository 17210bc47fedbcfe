#include "treeplace/verifier.hpp"

#include <algorithm>
#include <tuple>

#include "treeplace/errors.hpp"

namespace treeplace {

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::Qos: return "qos";
    case ViolationKind::Capacity: return "capacity";
    case ViolationKind::Bandwidth: return "bandwidth";
    case ViolationKind::Unserved: return "unserved";
  }
  return "unknown";
}

PlacementVerifier::PlacementVerifier(const NetworkInstance& inst) : topo_(std::make_shared<const Topology>(inst)) {}

PlacementVerifier::PlacementVerifier(std::shared_ptr<const Topology> topo) : topo_(std::move(topo)) {}

std::vector<char> PlacementVerifier::mask(const std::set<NodeId>& replicas) const {
  std::vector<char> equipped(topo_->size(), 0);
  for (const auto& id : replicas) {
    auto i = topo_->index_of(id);
    if (!i) throw ContractViolation("replica '" + id.str() + "' is not a node of the instance");
    if (topo_->is_client(*i)) throw ContractViolation("replica '" + id.str() + "' is a client");
    equipped[*i] = 1;
  }
  return equipped;
}

namespace {

struct BundleRoute {
  std::optional<std::size_t> server;
  int hops = 0;  // client-to-server distance
};

// Nearest equipped node on the way up from a client's parent, looking no
// further than `budget` hops from the client.
BundleRoute route(const Topology& topo, const std::vector<char>& equipped, std::size_t parent,
                  std::int64_t budget) {
  std::optional<std::size_t> cur = parent;
  for (int hops = 1; cur && hops <= budget; ++hops) {
    if (equipped[*cur]) return {cur, hops};
    cur = topo.parent(*cur);
  }
  return {};
}

}  // namespace

FeasibilityReport PlacementVerifier::verify(const std::vector<char>& equipped, BandwidthMode mode) const {
  return evaluate(equipped, mode, true);
}

bool PlacementVerifier::feasible(const std::vector<char>& equipped, BandwidthMode mode) const {
  return evaluate(equipped, mode, false).feasible();
}

// Flows and loads live in index-addressed vectors; the id-keyed report maps
// are only filled when `detailed` is set.
FeasibilityReport PlacementVerifier::evaluate(const std::vector<char>& equipped, BandwidthMode mode,
                                              bool detailed) const {
  const Topology& topo = *topo_;
  FeasibilityReport report;
  report.mode = mode;
  const std::int64_t capacity_limit = topo.instance().capacity;
  const std::size_t n = topo.size();
  std::vector<Violation> unserved, capacity, bandwidth;
  std::vector<std::int64_t> loads(n, 0), flows(n, 0);
  std::vector<char> carries(n, 0);

  // internals() is in ascending id order, so bundles are visited that way.
  for (std::size_t p : topo.internals()) {
    std::int64_t budget = -1;
    for (std::size_t c : topo.children(p)) {
      if (topo.is_client(c)) budget = std::max(budget, *topo.spec(c).qos);
    }
    if (budget < 0) continue;
    const NodeId& pid = topo.id(p);
    const BundleRoute r = route(topo, equipped, p, budget);

    std::int64_t flow = 0;
    for (std::size_t c : topo.children(p)) {
      if (!topo.is_client(c)) continue;
      const NodeSpec& client = topo.spec(c);
      const std::int64_t w = *client.requests;
      if (!r.server || r.hops > *client.qos) {
        unserved.push_back({ViolationKind::Unserved, client.id, w, pid});
        continue;
      }
      if (detailed) report.assignment.emplace(client.id, topo.id(*r.server));
      flow += w;
      loads[*r.server] += w;
      flows[c] += w;
      carries[c] = 1;
      if (w > *client.link_bw) bandwidth.push_back({ViolationKind::Bandwidth, client.id, w - *client.link_bw, pid});
    }
    if (!r.server) continue;

    for (std::size_t u = p; u != *r.server; u = *topo.parent(u)) {
      flows[u] += flow;
      carries[u] = 1;
      if (detailed) report.bundle_flows[topo.id(u)].push_back({pid, flow});
      const std::int64_t bw = *topo.spec(u).link_bw;
      if (mode == BandwidthMode::PaperLiteral && flow > bw) {
        bandwidth.push_back({ViolationKind::Bandwidth, topo.id(u), flow - bw, pid});
      }
    }
  }

  if (mode == BandwidthMode::Aggregate) {
    // Client links carry a single client's flow and were checked above.
    for (std::size_t u : topo.internals()) {
      if (!carries[u]) continue;
      const std::int64_t bw = *topo.spec(u).link_bw;
      if (flows[u] > bw) bandwidth.push_back({ViolationKind::Bandwidth, topo.id(u), flows[u] - bw, NodeId()});
    }
  }

  for (std::size_t v : topo.internals()) {
    if (equipped[v] && loads[v] > capacity_limit) {
      capacity.push_back({ViolationKind::Capacity, topo.id(v), loads[v] - capacity_limit, NodeId()});
    }
  }
  if (detailed) {
    for (std::size_t i = 0; i < n; ++i) {
      if (equipped[i]) report.server_loads.emplace(topo.id(i), loads[i]);
      if (carries[i]) report.link_flows.emplace(topo.id(i), flows[i]);
    }
  }

  std::sort(bandwidth.begin(), bandwidth.end(),
            [](const Violation& a, const Violation& b) { return std::tie(a.location, a.bundle) < std::tie(b.location, b.bundle); });
  report.violations = std::move(unserved);
  report.violations.insert(report.violations.end(), capacity.begin(), capacity.end());
  report.violations.insert(report.violations.end(), bandwidth.begin(), bandwidth.end());
  return report;
}

Assignment closest_assignment(const NetworkInstance& inst, const std::set<NodeId>& replicas) {
  PlacementVerifier verifier(inst);
  const auto equipped = verifier.mask(replicas);
  const Topology& topo = verifier.topology();
  Assignment out;
  for (std::size_t c : topo.clients()) {
    const NodeSpec& client = topo.spec(c);
    const BundleRoute r = route(topo, equipped, *topo.parent(c), *client.qos);
    if (!r.server) {
      out.unserved.push_back({ViolationKind::Unserved, client.id, *client.requests, topo.id(*topo.parent(c))});
      continue;
    }
    out.server.emplace(client.id, topo.id(*r.server));
    out.distance.emplace(client.id, r.hops);
  }
  return out;
}

FeasibilityReport verify_placement(const NetworkInstance& inst, const std::set<NodeId>& replicas,
                                   BandwidthMode mode) {
  PlacementVerifier verifier(inst);
  return verifier.verify(verifier.mask(replicas), mode);
}

}  // namespace treeplace
