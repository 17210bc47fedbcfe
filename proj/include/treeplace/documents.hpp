#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "treeplace/contribution.hpp"
#include "treeplace/oracle.hpp"
#include "treeplace/solver.hpp"
#include "treeplace/star_tree.hpp"
#include "treeplace/verifier.hpp"

namespace treeplace {

// All documents are JSON with sorted keys, two-space indent, newline-terminated.

// {"count", "mode", "replicas", "status": "optimal", "trace"?} or
// {"detail", "mode", "reason", "status": "infeasible"}.
std::string solution_document(const SolveOutcome& outcome, bool with_trace);

// Replica ids from a solution document (a bare {"replicas": [...]} is enough).
// Throws MalformedDocument, also when "count" disagrees with the list.
std::vector<NodeId> parse_solution_replicas(std::string_view text);

std::string report_document(const FeasibilityReport& report);
std::string oracle_document(const OracleResult& result);

// T* in the instance schema plus "eligible" and "origin" on leaves; the
// compressed-leaf links print as "inf".
std::string star_tree_document(const StarTree& tree);

// Leaf table (C rows) then internal-node table (e, m, C rows), columns
// grouped by level from the bottom up; "inf" marks unbounded values.
std::string render_tables(const StarTree& tree, const ContributionTable& table);

}  // namespace treeplace
