#include "coxinv/cli.hpp"
#include "coxinv/errors.hpp"
#include "coxinv/group_spec.hpp"
#include "coxinv/io.hpp"
#include "coxinv/oracle.hpp"
#include "coxinv/separator.hpp"
#include "coxinv/transnormal.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace coxinv;

namespace {

// Reports cross the boundary as JSON text; the Python side parses them.
std::string text(const Json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_coxinv, m) {
  m.doc() = "Coxeter group invariants and separating maps";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  py::class_<RootSystem>(m, "RootSystem")
      .def_property_readonly("label", &RootSystem::label)
      .def_property_readonly("rank", &RootSystem::rank)
      .def_property_readonly("ambient_dim", &RootSystem::ambient_dim)
      .def_property_readonly("crystallographic", &RootSystem::crystallographic)
      .def_property_readonly("classified_order", &RootSystem::classified_order)
      .def_property_readonly("classified_degrees", &RootSystem::classified_degrees)
      .def_property_readonly("simple_roots",
                             [](const RootSystem& rs) {
                               std::vector<std::vector<double>> out;
                               for (const auto& a : rs.simple_roots()) out.push_back(to_doubles(a));
                               return out;
                             })
      .def_property_readonly("positive_root_count", [](const RootSystem& rs) { return rs.positive_roots().size(); })
      .def("to_json", [](const RootSystem& rs) { return text(to_json(rs)); });

  m.def(
      "root_system",
      [](const std::string& type, int rank, int dihedral_order) {
        return build_root_system(parse_root_type(type), rank, dihedral_order);
      },
      py::arg("type"), py::arg("rank"), py::arg("m") = 0);

  py::class_<CoxeterGroup>(m, "CoxeterGroup")
      .def_property_readonly("dim", &CoxeterGroup::dim)
      .def_property_readonly("is_finite", &CoxeterGroup::is_finite)
      .def("finite_order", &CoxeterGroup::finite_order)
      .def("component_labels",
           [](const CoxeterGroup& g) {
             std::vector<std::string> out;
             for (const auto& c : g.components()) out.push_back((c.affine ? "~" : "") + c.root_system.label());
             return out;
           })
      .def("orbit_equal",
           [](const CoxeterGroup& g, const Point& x, const Point& y, double tol) {
             return g.orbit_equal(from_point(x), from_point(y), tol);
           },
           py::arg("x"), py::arg("y"), py::arg("tol") = 1e-9);

  m.def("group", [](const std::string& descriptor) { return to_group(parse_group_spec(descriptor)); },
        py::arg("descriptor"));
  m.def("canonical_descriptor", [](const std::string& d) { return to_string(parse_group_spec(d)); });

  py::class_<SeparatingMap>(m, "SeparatingMap")
      .def_readonly("dim", &SeparatingMap::dim)
      .def_readonly("output_block", &SeparatingMap::output_block)
      .def("__call__", &SeparatingMap::evaluate, py::arg("x"))
      .def("jacobian", &SeparatingMap::jacobian, py::arg("x"))
      .def("gram", [](const SeparatingMap& f, const Point& x) { return gram_matrix(f, x); }, py::arg("x"))
      .def("to_json", [](const SeparatingMap& f) { return text(to_json(f)); })
      .def("content_hash", [](const SeparatingMap& f) { return content_hash(f); });

  m.def("separating_map", &build_separating_map, py::arg("group"));

  m.def(
      "_check_invariance",
      [](const SeparatingMap& f, const CoxeterGroup& g, std::size_t samples, double tol, std::uint64_t seed) {
        return text(to_json(check_invariance(f, g, samples, tol, seed)));
      },
      py::arg("f"), py::arg("group"), py::arg("samples"), py::arg("tol"), py::arg("seed"));
  m.def(
      "_check_separation",
      [](const SeparatingMap& f, const CoxeterGroup& g, std::size_t pairs, double tol, std::uint64_t seed) {
        return text(to_json(check_separation(f, g, pairs, tol, seed)));
      },
      py::arg("f"), py::arg("group"), py::arg("pairs"), py::arg("tol"), py::arg("seed"));
  m.def(
      "_check_transnormal",
      [](const SeparatingMap& f, const CoxeterGroup& g, std::size_t pairs, double tol, std::uint64_t seed) {
        return text(to_json(check_transnormal(f, g, pairs, tol, tol, seed)));
      },
      py::arg("f"), py::arg("group"), py::arg("pairs"), py::arg("tol"), py::arg("seed"));
  m.def(
      "_audit",
      [](const SeparatingMap& f, const CoxeterGroup& g, std::size_t n, int radius, std::uint64_t seed) {
        return text(to_json(oracle_separation_audit(f, g, n, radius, seed)));
      },
      py::arg("f"), py::arg("group"), py::arg("n"), py::arg("radius"), py::arg("seed"));

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs a coxinv command line; returns (exit code, stdout, stderr).");
}
