#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "treeplace/node_id.hpp"

namespace treeplace {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Instance documents.
class MalformedDocument : public Error {
 public:
  using Error::Error;
};
class StructureError : public Error {
 public:
  using Error::Error;
};
class RoleError : public Error {
 public:
  using Error::Error;
};

class ContractViolation : public Error {
 public:
  using Error::Error;
};
class RangeError : public Error {
 public:
  using Error::Error;
};
class GuardExceeded : public Error {
 public:
  using Error::Error;
};
class ConfigError : public Error {
 public:
  using Error::Error;
};

// The solver's self-check rejected its own output.
class SolverDefect : public Error {
 public:
  using Error::Error;
};

enum class InfeasibleReason {
  ClientLinkBandwidth,
  ClientOverCapacity,
  QosExhausted,
  LeafOverCapacity,
  CapacityExhausted,
  RootWorkload,
};

const char* describe(InfeasibleReason reason);

// Domain outcome: no replica set satisfies the constraints. Carries the
// nodes that witness the failure.
class Infeasible : public Error {
 public:
  Infeasible(InfeasibleReason reason, std::vector<NodeId> nodes, const std::string& detail);

  InfeasibleReason reason() const { return reason_; }
  const std::vector<NodeId>& nodes() const { return nodes_; }

 private:
  InfeasibleReason reason_;
  std::vector<NodeId> nodes_;
};

class QosExhausted : public Infeasible {
 public:
  QosExhausted(NodeId node, const std::string& detail)
      : Infeasible(InfeasibleReason::QosExhausted, {std::move(node)}, detail) {}
};

}  // namespace treeplace
