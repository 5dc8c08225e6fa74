// Python module exposing the main pipeline operations. The heavy structures
// stay on the C++ side behind an opaque handle; interchange uses the same
// JSON documents as the CLI.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fivec/construct.hpp"
#include "fivec/drawing.hpp"
#include "fivec/generator.hpp"
#include "fivec/json_io.hpp"

namespace py = pybind11;
using namespace fivec;

namespace {

struct Instance {
  std::shared_ptr<const FiveTriangulation> t;
};

Instance load_instance(const std::string& text) {
  RotationSystem rs = rotation_from_json(text);
  PlanarMap m = PlanarMap::build_from_rotation_system(rs.rot, rs.outer);
  return {std::make_shared<const FiveTriangulation>(check_five_triangulation(m))};
}

WeightMode mode_of(const std::string& s) {
  if (s == "faces") return WeightMode::faces;
  if (s == "vertices") return WeightMode::vertices;
  fail(Errc::parse_error, "mode must be 'faces' or 'vertices'");
}

}  // namespace

PYBIND11_MODULE(_fivec, m) {
  m.doc() = "Schnyder-type 5c-structures and barycentric drawings";

  py::register_exception<Error>(m, "FivecError");

  py::class_<Instance>(m, "Instance")
      .def_property_readonly("n", [](const Instance& i) { return i.t->n(); })
      .def_property_readonly("inner_faces", [](const Instance& i) { return i.t->inner_faces(); })
      .def("to_json", [](const Instance& i) { return rotation_to_json(rotation_of(i.t->map)); });

  m.def("load", &load_instance, py::arg("rotation_json"),
        "Parse a rotation-system JSON document into an instance.");
  m.def("generate", [](int n, std::uint64_t seed, int flips) {
    return Instance{std::make_shared<const FiveTriangulation>(generate_random_5c(n, seed, flips))};
  }, py::arg("n"), py::arg("seed") = 1, py::arg("flips") = 0);

  m.def("is_5c", [](const Instance& i) {
    FiveCVerdict v = is_5c(*i.t);
    py::dict out;
    out["ok"] = v.ok;
    out["witness_cycle"] = v.witness_cycle;
    out["reason"] = v.reason;
    return out;
  });

  m.def("construct", [](const Instance& i, bool minimal, const std::string& emit) {
    FiveCOrientation o = construct_5c(i.t);
    if (minimal) o = minimize(o);
    if (emit == "orientation") return orientation_to_json(o);
    if (emit == "labeling") return labeling_to_json(phi_inv(o));
    if (emit == "wood") return wood_to_json(theta(phi_inv(o)));
    fail(Errc::parse_error, "emit must be orientation|labeling|wood");
  }, py::arg("instance"), py::arg("minimize") = false, py::arg("emit") = "orientation");

  m.def("draw", [](const Instance& i, const std::string& mode, bool minimal, bool check) {
    FiveCOrientation o = construct_5c(i.t);
    if (minimal) o = minimize(o);
    WoodColoring w = theta(phi_inv(o));
    auto trees = std::make_shared<const WoodTrees>(wood_trees(w));
    RegionTable rt = region_sizes_linear(trees);
    Drawing d = place(weights(rt, mode_of(mode)), i.t);
    py::dict out;
    out["json"] = drawing_to_json(d);
    out["svg"] = drawing_to_svg(d, &w, 500.0);
    py::list coords;
    for (auto& p : d.xy) coords.append(py::make_tuple(p[0], p[1]));
    out["coords"] = coords;
    if (check) {
      const bool weak = mode == "vertices";  // boundary ties allowed there
      out["planar"] = certify_planar(d, *i.t).ok;
      out["halfplane"] = check_halfplane(d, *trees, weak).ok();
      out["sectors"] = check_sectors(d, w, weak).ok();
      ResolutionMetrics rm = resolution(d);
      out["normalized_resolution"] = rm.normalized;
    }
    return out;
  }, py::arg("instance"), py::arg("mode") = "faces", py::arg("minimize") = false,
     py::arg("check") = true);

  m.def("d5", &resolution_d5);
  m.def("d5_prime", &resolution_d5_prime);
}
