#include "treeplace/amount.hpp"
#include "treeplace/errors.hpp"

namespace treeplace {

std::int64_t Amount::value() const {
  if (unbounded_) throw ContractViolation("value() requested on an unbounded amount");
  return value_;
}

std::string Amount::to_string() const {
  return unbounded_ ? std::string("inf") : std::to_string(value_);
}

const char* describe(InfeasibleReason reason) {
  switch (reason) {
    case InfeasibleReason::ClientLinkBandwidth: return "client link bandwidth";
    case InfeasibleReason::ClientOverCapacity: return "client demand exceeds capacity";
    case InfeasibleReason::QosExhausted: return "qos exhausted";
    case InfeasibleReason::LeafOverCapacity: return "merged demand exceeds capacity";
    case InfeasibleReason::CapacityExhausted: return "capacity exhausted";
    case InfeasibleReason::RootWorkload: return "root workload";
  }
  return "unknown";
}

namespace {

std::string format_infeasible(InfeasibleReason reason, const std::vector<NodeId>& nodes,
                              const std::string& detail) {
  std::string msg = describe(reason);
  if (!nodes.empty()) {
    msg += " [";
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (i) msg += ", ";
      msg += nodes[i].str();
    }
    msg += "]";
  }
  if (!detail.empty()) msg += ": " + detail;
  return msg;
}

}  // namespace

Infeasible::Infeasible(InfeasibleReason reason, std::vector<NodeId> nodes, const std::string& detail)
    : Error(format_infeasible(reason, nodes, detail)), reason_(reason), nodes_(std::move(nodes)) {}

}  // namespace treeplace
