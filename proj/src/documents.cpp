#include "treeplace/documents.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"
#include "treeplace/errors.hpp"

namespace treeplace {

using json = nlohmann::json;

namespace {

json ids(const std::vector<NodeId>& v) {
  json out = json::array();
  for (const auto& id : v) out.push_back(id.str());
  return out;
}

json amount(Amount a) { return a.finite() ? json(a.value()) : json("inf"); }

std::string finish(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

std::string solution_document(const SolveOutcome& outcome, bool with_trace) {
  json doc;
  doc["mode"] = std::string(to_string(outcome.mode));
  if (!outcome.feasible()) {
    doc["status"] = "infeasible";
    doc["reason"] = describe(*outcome.reason);
    doc["detail"] = outcome.detail;
    return finish(doc);
  }
  const PlacementResult& p = *outcome.placement;
  doc["status"] = "optimal";
  doc["count"] = p.cardinality;
  doc["replicas"] = ids(p.replicas_original);
  if (with_trace) {
    doc["trace"] = json::array();
    for (const auto& call : p.trace) {
      doc["trace"].push_back({{"node", call.node.str()}, {"level", call.level}, {"placed", ids(call.placed)}});
    }
  }
  return finish(doc);
}

std::vector<NodeId> parse_solution_replicas(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw MalformedDocument(std::string("syntax error: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("replicas") || !doc["replicas"].is_array()) {
    throw MalformedDocument("solution document needs a 'replicas' array");
  }
  std::vector<NodeId> out;
  for (const auto& r : doc["replicas"]) {
    if (!r.is_string()) throw MalformedDocument("replica ids must be strings");
    out.emplace_back(r.get<std::string>());
  }
  if (doc.contains("count") && (!doc["count"].is_number_integer() || doc["count"].get<std::int64_t>() !=
                                                                          static_cast<std::int64_t>(out.size()))) {
    throw MalformedDocument("'count' does not match the replica list");
  }
  return out;
}

std::string report_document(const FeasibilityReport& report) {
  json doc;
  doc["mode"] = std::string(to_string(report.mode));
  doc["feasible"] = report.feasible();
  doc["assignment"] = json::object();
  for (const auto& [client, server] : report.assignment) doc["assignment"][client.str()] = server.str();
  doc["server_loads"] = json::object();
  for (const auto& [server, load] : report.server_loads) doc["server_loads"][server.str()] = load;
  doc["link_flows"] = json::object();
  for (const auto& [edge, flow] : report.link_flows) doc["link_flows"][edge.str()] = flow;
  doc["bundle_flows"] = json::object();
  for (const auto& [edge, flows] : report.bundle_flows) {
    json list = json::array();
    for (const auto& f : flows) list.push_back({{"bundle", f.bundle.str()}, {"flow", f.flow}});
    doc["bundle_flows"][edge.str()] = list;
  }
  doc["violations"] = json::array();
  for (const auto& v : report.violations) {
    json j{{"kind", std::string(to_string(v.kind))}, {"location", v.location.str()}, {"amount", v.amount}};
    if (!v.bundle.empty()) j["bundle"] = v.bundle.str();
    doc["violations"].push_back(std::move(j));
  }
  return finish(doc);
}

std::string oracle_document(const OracleResult& result) {
  json doc;
  doc["mode"] = std::string(to_string(result.mode));
  doc["explored"] = result.explored;
  if (result.optimum) {
    doc["status"] = "optimal";
    doc["count"] = result.optimum->cardinality;
    doc["witness"] = ids(result.optimum->witness);
    doc["optimal_sets"] = result.optimum->optimal_sets;
  } else {
    doc["status"] = "infeasible";
  }
  return finish(doc);
}

std::string star_tree_document(const StarTree& tree) {
  json doc;
  doc["W"] = tree.capacity();
  doc["nodes"] = json::array();
  std::vector<std::size_t> order(tree.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return tree.node(a).id < tree.node(b).id; });
  for (std::size_t i : order) {
    const StarNode& n = tree.node(i);
    json j;
    j["id"] = n.id.str();
    j["parent"] = n.parent ? json(tree.node(*n.parent).id.str()) : json(nullptr);
    if (n.parent) j["bw"] = amount(n.link_bw);
    if (n.leaf) {
      j["kind"] = "client";
      j["w"] = n.leaf->weight;
      j["q"] = n.leaf->qos;
      j["eligible"] = n.leaf->eligible;
      json origin;
      if (n.leaf->former_internal) origin["internal"] = n.leaf->former_internal->str();
      origin["clients"] = ids(n.leaf->clients);
      j["origin"] = origin;
    } else {
      j["kind"] = "internal";
    }
    doc["nodes"].push_back(std::move(j));
  }
  if (!tree.pruned().empty()) doc["pruned"] = ids({tree.pruned().begin(), tree.pruned().end()});
  return finish(doc);
}

namespace {

std::string set_text(const std::vector<NodeId>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + s[i].str();
  return out + "}";
}

void print_grid(std::ostringstream& os, const std::vector<std::string>& heads,
                const std::vector<std::pair<std::string, std::vector<std::string>>>& rows) {
  std::size_t label_width = 0;
  for (const auto& r : rows) label_width = std::max(label_width, r.first.size());
  std::vector<std::size_t> width(heads.size());
  for (std::size_t c = 0; c < heads.size(); ++c) {
    width[c] = heads[c].size();
    for (const auto& r : rows) width[c] = std::max(width[c], r.second[c].size());
  }
  auto line = [&](const std::string& label, const std::vector<std::string>& cells) {
    std::string text = label + std::string(label_width - label.size(), ' ');
    for (std::size_t c = 0; c < cells.size(); ++c) text += "  " + cells[c] + std::string(width[c] - cells[c].size(), ' ');
    while (!text.empty() && text.back() == ' ') text.pop_back();
    os << text << "\n";
  };
  line("", heads);
  for (const auto& r : rows) line(r.first, r.second);
}

}  // namespace

std::string render_tables(const StarTree& tree, const ContributionTable& table) {
  // Pre-order with ascending children gives the left-to-right order.
  std::vector<std::size_t> preorder;
  std::vector<std::size_t> stack{StarTree::kRootPlus};
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    preorder.push_back(v);
    const auto& ch = tree.node(v).children;
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
  }
  std::vector<std::size_t> leaves, internals;
  int max_depth = 0;
  for (std::size_t v : preorder) {
    (tree.node(v).leaf ? leaves : internals).push_back(v);
    max_depth = std::max(max_depth, tree.node(v).depth);
  }
  std::stable_sort(internals.begin(), internals.end(),
                   [&](std::size_t a, std::size_t b) { return tree.node(a).depth > tree.node(b).depth; });

  std::ostringstream os;
  os << "mode " << to_string(table.mode()) << ", W=" << tree.capacity() << ", m(T*)=" << table.total() << "\n\n";

  os << "leaves\n";
  std::vector<std::string> heads;
  for (std::size_t v : leaves) heads.push_back(tree.node(v).id.str());
  std::vector<std::pair<std::string, std::vector<std::string>>> rows;
  for (int i = 0; i <= max_depth; ++i) {
    std::vector<std::string> cells;
    for (std::size_t v : leaves) cells.push_back(i <= table[v].depth ? table[v].c(i).to_string() : "");
    rows.emplace_back("C(v," + std::to_string(i) + ")", std::move(cells));
  }
  print_grid(os, heads, rows);

  os << "\ninternal nodes\n";
  heads.clear();
  rows.clear();
  for (std::size_t v : internals) heads.push_back(tree.node(v).id.str());
  int internal_depth = 0;
  for (std::size_t v : internals) internal_depth = std::max(internal_depth, tree.node(v).depth);
  for (int i = 0; i <= internal_depth; ++i) {
    std::vector<std::string> e_cells, c_cells, m_cells;
    for (std::size_t v : internals) {
      const bool in_range = i <= table[v].depth;
      e_cells.push_back(in_range ? set_text(table[v].e(i)) : "");
      c_cells.push_back(in_range ? table[v].c(i).to_string() : "");
      m_cells.push_back(std::to_string(*table[v].m_value));
    }
    rows.emplace_back("e(v," + std::to_string(i) + ")", std::move(e_cells));
    if (i == 0) rows.emplace_back("m(t(v))", std::move(m_cells));
    rows.emplace_back("C(v," + std::to_string(i) + ")", std::move(c_cells));
  }
  print_grid(os, heads, rows);
  return os.str();
}

}  // namespace treeplace
