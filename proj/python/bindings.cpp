#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <set>
#include <string>
#include <vector>

#include "treeplace/documents.hpp"
#include "treeplace/errors.hpp"
#include "treeplace/generator.hpp"
#include "treeplace/oracle.hpp"
#include "treeplace/solver.hpp"
#include "treeplace/verifier.hpp"

namespace py = pybind11;
using namespace treeplace;

// Everything crosses the boundary as JSON text; the Python side decodes it.

namespace {

std::string solve_doc(const std::string& instance, const std::string& mode, bool trace) {
  const auto inst = parse_instance(instance);
  return solution_document(solve(inst, parse_mode(mode)), trace);
}

std::string verify_doc(const std::string& instance, const std::vector<std::string>& replicas,
                       const std::string& mode) {
  const auto inst = parse_instance(instance);
  std::set<NodeId> r;
  for (const auto& id : replicas) r.emplace(id);
  return report_document(verify_placement(inst, r, parse_mode(mode)));
}

std::string oracle_doc(const std::string& instance, const std::string& mode, std::size_t max_n) {
  return oracle_document(brute_force_min(parse_instance(instance), parse_mode(mode), max_n));
}

std::string transform_doc(const std::string& instance) {
  return star_tree_document(transform_to_star(parse_instance(instance)));
}

std::string inspect_text(const std::string& instance, const std::string& mode) {
  const StarTree tree = transform_to_star(parse_instance(instance));
  return render_tables(tree, run_phase1(tree, parse_mode(mode)));
}

std::string generate_doc(std::uint64_t seed, std::size_t internal, std::size_t clients, const std::string& shape,
                         std::int64_t capacity, bool dual_role) {
  GenConfig c;
  c.seed = seed;
  c.internal_count = internal;
  c.client_count = clients;
  c.shape = parse_shape(shape);
  c.capacity = capacity;
  return dual_role ? serialize_dual_role(generate_dual_role(c)) : serialize_instance(generate(c));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Replica placement on tree networks";

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<Infeasible>(m, "Infeasible", base.ptr());
  py::register_exception<SolverDefect>(m, "SolverDefect", PyExc_RuntimeError);

  m.def("solve", &solve_doc, py::arg("instance"), py::arg("mode") = "paper-literal", py::arg("trace") = false,
        "Solution document for an instance document.");
  m.def("verify", &verify_doc, py::arg("instance"), py::arg("replicas"), py::arg("mode") = "paper-literal");
  m.def("oracle", &oracle_doc, py::arg("instance"), py::arg("mode") = "paper-literal",
        py::arg("max_n") = kDefaultOracleGuard);
  m.def("transform", &transform_doc, py::arg("instance"));
  m.def("inspect", &inspect_text, py::arg("instance"), py::arg("mode") = "paper-literal");
  m.def("generate", &generate_doc, py::arg("seed") = 1, py::arg("internal") = 5, py::arg("clients") = 6,
        py::arg("shape") = "random", py::arg("W") = 15, py::arg("dual_role") = false);
  m.def("fictivize", [](const std::string& doc) { return serialize_instance(fictivize(parse_dual_role(doc))); },
        py::arg("dual_role_tree"));
}
