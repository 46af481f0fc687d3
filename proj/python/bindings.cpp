// Python bindings for the subgroup-counting core.  The surface mirrors the
// command-line interface: evaluate a group expression, count or summarize
// its subgroup lattice, enumerate abelian similarity classes, query the
// order-shape bounds and candidate families, and re-verify the tables.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "subcount/bounds.hpp"
#include "subcount/catalog.hpp"
#include "subcount/cli.hpp"
#include "subcount/errors.hpp"
#include "subcount/expr.hpp"
#include "subcount/lattice.hpp"
#include "subcount/similarity.hpp"

namespace py = pybind11;

using namespace subcount;

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Subgroup counting for small finite groups: expression evaluation, "
      "lattice summaries, classification tables, and order-shape bounds.";

  // Exceptions: one Python class per library error type.  Registration
  // order matters (translators run newest-first), so the base goes first.
  auto base = py::register_exception<error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<size_error>(m, "SizeError", base);
  py::register_exception<presentation_error>(m, "PresentationError", base);
  py::register_exception<generator_error>(m, "GeneratorError", base);
  py::register_exception<arithmetic_error>(m, "ArgumentError", base);
  py::register_exception<verification_error>(m, "VerificationError", base);
  py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);

  m.def(
      "count",
      [](const std::string& expr, int max_order) {
        return count_subgroups(eval_group(expr, max_order));
      },
      py::arg("expr"), py::arg("max_order") = kDefaultOrderCap,
      "Number of subgroups of the group the expression denotes.");

  m.def(
      "order",
      [](const std::string& expr, int max_order) {
        return eval_group(expr, max_order).order();
      },
      py::arg("expr"), py::arg("max_order") = kDefaultOrderCap,
      "Order of the group the expression denotes.");

  m.def(
      "lattice",
      [](const std::string& expr, int max_order) {
        return summarize(eval_group(expr, max_order)).by_order;
      },
      py::arg("expr"), py::arg("max_order") = kDefaultOrderCap,
      "Subgroup counts keyed by subgroup order.");

  m.def(
      "abelian_classes",
      [](i64 k) {
        std::vector<std::string> out;
        for (const auto& c : enumerate_abelian_classes(k))
          out.push_back(render_class(c));
        return out;
      },
      py::arg("k"),
      "Similarity classes of abelian groups with exactly k subgroups.");

  m.def("abelian_class_count", &abelian_class_count, py::arg("k"),
        "Number of abelian similarity classes with exactly k subgroups.");

  m.def("nonabelian_class_count", &nonabelian_class_count, py::arg("k"),
        "Number of non-abelian classification rows with exactly k "
        "subgroups (k <= 19).");

  m.def(
      "sequence", [](i64 terms) { return sequence_terms(terms); },
      py::arg("terms") = 19,
      "Terms 1..n of the combined class-count sequence (verified against "
      "the catalog before being returned).");

  m.def(
      "candidate_families",
      [](i64 budget) {
        std::vector<std::string> out;
        for (const auto& r : candidate_orders(budget)) out.push_back(r.render());
        return out;
      },
      py::arg("budget"),
      "Order-shape families not excluded at the given subgroup budget.");

  m.def(
      "bound",
      [](const std::string& factored) {
        const FactoredOrder f = FactoredOrder::parse(factored);
        return std::make_pair(bound_for_order(f), bound_theorem_tag(f));
      },
      py::arg("factored"),
      "Lower bound and theorem tag for a factored order such as '2^3*3'.");

  m.def(
      "verify_tables",
      [] {
        std::vector<std::string> lines;
        for (const auto& r : verify_all_entries()) lines.push_back(r.render());
        for (const auto& r : run_invariant_suites()) lines.push_back(r.render());
        return lines;
      },
      "Re-verify every catalog entry and invariant suite; one rendered "
      "line per check.");

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return std::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"),
      "Invoke the command-line interface in-process; returns "
      "(exit_code, stdout, stderr).");
}
