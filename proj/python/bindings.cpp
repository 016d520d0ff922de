#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "toric/cli.hpp"
#include "toric/error.hpp"
#include "toric/mirror.hpp"
#include "toric/polytope.hpp"
#include "toric/secondary.hpp"

namespace py = pybind11;
using namespace toric;

namespace {

// Python ints are unbounded, so values cross the boundary as decimal text.
Integer to_integer(const py::handle& h) { return Integer(py::str(py::int_(py::reinterpret_borrow<py::object>(h))).cast<std::string>()); }

py::int_ to_py(const Integer& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

std::vector<IntVector> to_vectors(const py::sequence& seq) {
  std::vector<IntVector> out;
  for (auto row : seq) {
    IntVector v;
    for (auto x : py::reinterpret_borrow<py::sequence>(row)) v.push_back(to_integer(x));
    out.push_back(std::move(v));
  }
  return out;
}

py::list to_py(const std::vector<IntVector>& vs) {
  py::list out;
  for (const auto& v : vs) {
    py::list row;
    for (const auto& x : v) row.append(to_py(x));
    out.append(row);
  }
  return out;
}

LatticePolytope polytope(const py::sequence& vertices) {
  auto vs = to_vectors(vertices);
  if (vs.empty()) throw InputError("no vertices");
  return hull(vs, LatticeTag{LatticeName::M, vs.front().size()});
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact toric mirror-symmetry computations";

  auto& error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InputError>(m, "InputError", error.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", error.ptr());

  m.def("run", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Run a command-line job in process; returns (exit code, stdout, stderr).");

  m.def("is_reflexive", [](const py::sequence& v) { return is_reflexive(polytope(v)); }, py::arg("vertices"));
  m.def("polar", [](const py::sequence& v) { return to_py(polar(polytope(v)).vertices()); }, py::arg("vertices"));
  m.def("lattice_points", [](const py::sequence& v) { return to_py(lattice_points(polytope(v))); },
        py::arg("vertices"));
  m.def("hodge", [](const py::sequence& v, std::uint64_t seed) {
    auto pair = make_mirror_pair(polytope(v), std::nullopt, std::nullopt, seed);
    return py::make_tuple(h11_toric(pair), hd11_poly(pair));
  }, py::arg("vertices"), py::arg("seed") = 0, "(h11_toric, hd11_poly) of the pair built on the polytope.");
  m.def("chambers", [](const py::sequence& points) {
    auto config = lift(to_vectors(points), true);
    py::list out;
    for (const auto& c : enumerate_chambers(config)) {
      py::dict d;
      d["cells"] = c.triangulation.cells;
      d["phase"] = to_string(c.phase);
      out.append(d);
    }
    return py::make_tuple(to_py(config.points), out);
  }, py::arg("points"), "Configuration points (origin appended if absent) and the secondary-fan chambers.");
}
