#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hconvex/json_io.hpp"
#include "hconvex/structure.hpp"

namespace py = pybind11;
using namespace hconvex;

namespace {

HPoint to_point(const std::vector<double>& coords) {
    return HPoint::from_coords(coords);
}

std::vector<std::vector<double>> points_out(const std::vector<HPoint>& pts) {
    std::vector<std::vector<double>> out;
    out.reserve(pts.size());
    for (const HPoint& p : pts) out.push_back(p.coords);
    return out;
}

py::dict witness_dict(const WidthWitness& w) {
    py::dict d;
    d["normal"] = w.plane.normal;
    d["value"] = w.value;
    d["farthest"] = points_out(w.farthest);
    d["contact"] = points_out(w.contact);
    return d;
}

py::dict extremum_dict(const WidthExtremum& e) {
    py::dict d = witness_dict(e.witness);
    d["global_certified"] = e.global_certified;
    if (e.starts_used > 0) d["multistart"] = e.starts_used;
    return d;
}

} // namespace

PYBIND11_MODULE(hconvex, m) {
    m.doc() = "Widths, thickness, diameter and structure of convex bodies in the "
              "hyperboloid model of hyperbolic space";

    py::register_exception<error>(m, "HconvexError");

    py::class_<ConvexBody>(m, "ConvexBody")
        .def_property_readonly("dim", [](const ConvexBody& b) { return b.dim; })
        .def_property_readonly("kind",
                               [](const ConvexBody& b) {
                                   return b.kind == ConvexBody::Kind::polytope ? "polytope"
                                                                               : "arc-polygon";
                               })
        .def_property_readonly("vertices",
                               [](const ConvexBody& b) { return points_out(b.vertices); })
        .def_property_readonly("corners",
                               [](const ConvexBody& b) { return points_out(b.corners); })
        .def_property_readonly("arc_count",
                               [](const ConvexBody& b) { return b.arcs.size(); })
        .def("to_json", [](const ConvexBody& b) { return body_to_json(b).dump(); })
        .def("__repr__", [](const ConvexBody& b) {
            return std::string("<ConvexBody ") +
                   (b.kind == ConvexBody::Kind::polytope ? "polytope, " : "arc-polygon, ") +
                   std::to_string(b.kind == ConvexBody::Kind::polytope ? b.vertices.size()
                                                                       : b.arcs.size()) +
                   (b.kind == ConvexBody::Kind::polytope ? " vertices>" : " arcs>");
        });

    // constructors
    m.def("make_polytope",
          [](const std::vector<std::vector<double>>& pts) {
              std::vector<HPoint> hp;
              for (const auto& p : pts) hp.push_back(to_point(p));
              return make_polytope(hp);
          },
          py::arg("points"), "Convex hull of hyperboloid-model points");
    m.def("make_rhombus", &make_rhombus, py::arg("a"), py::arg("b"));
    m.def("make_crosspolytope", &make_crosspolytope, py::arg("half_lengths"));
    m.def("make_regular_polygon", &make_regular_polygon, py::arg("n"), py::arg("r"));
    m.def("make_ball",
          [](double r) { return make_ball_body(HPoint::from_coords({1, 0, 0}), r); },
          py::arg("r"));
    m.def("make_reuleaux", &make_reuleaux, py::arg("delta"));
    m.def("ball_intersection",
          [](const std::vector<std::vector<double>>& centers, double delta) {
              std::vector<HPoint> hp;
              for (const auto& c : centers) hp.push_back(to_point(c));
              return ball_intersection(hp, delta);
          },
          py::arg("centers"), py::arg("delta"));
    m.def("body_from_json",
          [](const std::string& text) { return body_from_json(ojson::parse(text)); },
          py::arg("text"));

    // geometry primitives
    m.def("dist",
          [](const std::vector<double>& p, const std::vector<double>& q) {
              return dist(to_point(p), to_point(q));
          },
          py::arg("p"), py::arg("q"), "Hyperbolic distance between hyperboloid points");
    m.def("lambert_height", &lambert_height, py::arg("a"), py::arg("b"));
    m.def("klein", [](const std::vector<double>& p) { return klein(to_point(p)); });

    // measurements
    m.def("contains",
          [](const ConvexBody& b, const std::vector<double>& p, double tol) {
              return contains(b, to_point(p), tol);
          },
          py::arg("body"), py::arg("point"), py::arg("tol") = 1e-9);
    m.def("diameter",
          [](const ConvexBody& b) {
              const DiameterResult d = diameter(b);
              return py::make_tuple(d.value, d.a.coords, d.b.coords);
          },
          py::arg("body"));
    m.def("thickness", [](const ConvexBody& b) { return extremum_dict(thickness(b)); },
          py::arg("body"));
    m.def("max_width", [](const ConvexBody& b) { return extremum_dict(max_width(b)); },
          py::arg("body"));
    m.def("width_given_normal",
          [](const ConvexBody& b, const std::vector<double>& normal) {
              const Hyperplane h = Hyperplane::from_normal(normalize_spacelike(normal));
              return witness_dict(width_given_h(b, h));
          },
          py::arg("body"), py::arg("normal"));
    m.def("width_profile",
          [](const ConvexBody& b, int n) {
              std::vector<std::pair<double, double>> out;
              for (const ProfileSample& s : width_profile(b, n))
                  out.push_back({s.param, s.width});
              return out;
          },
          py::arg("body"), py::arg("n") = 256);

    // structure analysis
    m.def("is_complete",
          [](const ConvexBody& b, double tol, int boundary_n) {
              const CompletenessReport r = is_complete(b, tol, boundary_n);
              py::dict d;
              d["diameter"] = r.diameter_value;
              d["complete"] = r.is_complete;
              d["ball_hull_residual"] = r.ball_hull_residual;
              d["outward_probe_ok"] = r.outward_probe_ok;
              if (r.violating_point) d["violating_point"] = r.violating_point->coords;
              return d;
          },
          py::arg("body"), py::arg("tol") = 1e-6, py::arg("boundary_n") = 2048);
    m.def("is_constant_width",
          [](const ConvexBody& b, double tol, int n) {
              const ConstantWidthReport r = is_constant_width(b, tol, n);
              return py::make_tuple(r.is_constant, r.width, r.spread);
          },
          py::arg("body"), py::arg("tol") = 1e-6, py::arg("profile_n") = 1024);
    m.def("is_constant_diameter",
          [](const ConvexBody& b, double delta, double tol) {
              return is_constant_diameter(b, delta, tol);
          },
          py::arg("body"), py::arg("delta"), py::arg("tol") = 1e-6);
    m.def("theorem2",
          [](const ConvexBody& b, double tol) {
              const Theorem2Report r = theorem2_pipeline(b, tol);
              py::dict d;
              d["complete"] = r.completeness.is_complete;
              d["constant_width"] = r.constant_width.is_constant;
              d["width"] = r.constant_width.width;
              d["diameter"] = r.completeness.diameter_value;
              d["forward_ok"] = r.forward_ok;
              d["converse_ok"] = r.converse_ok;
              d["consistent"] = r.consistent;
              return d;
          },
          py::arg("body"), py::arg("tol") = 1e-6);
    m.def("extreme_point_dichotomy",
          [](const ConvexBody& b, const std::vector<double>& e, double tol) {
              const DichotomyReport r = extreme_point_dichotomy(b, to_point(e), tol);
              py::dict d;
              d["found"] = r.found;
              d["case"] = r.which == DichotomyCase::on_hyperplane   ? "on_hyperplane"
                          : r.which == DichotomyCase::on_equidistant ? "on_equidistant"
                                                                     : "both";
              d["residual"] = r.residual;
              d["normal"] = r.plane.normal;
              d["strip_thickness"] = r.strip.thickness;
              return d;
          },
          py::arg("body"), py::arg("point"), py::arg("tol") = 1e-6);
    m.def("reduced_probe",
          [](const ConvexBody& b, double eps_cap, double tol) {
              const ReducedProbeReport r = reduced_probe(b, eps_cap, tol);
              py::dict d;
              d["passes_necessary"] = r.passes_necessary;
              d["cap_test"] = r.cap_test;
              d["reduced_consistent"] = r.reduced_consistent;
              return d;
          },
          py::arg("body"), py::arg("eps_cap") = 5e-3, py::arg("tol") = 1e-7);
    m.def("rhombus_threshold_scan",
          [](double a, double b_lo, double b_hi, int steps) {
              const ThresholdScanReport r = rhombus_threshold_scan(a, b_lo, b_hi, steps);
              py::dict d;
              d["found"] = r.found;
              d["monotone"] = r.monotone;
              d["b_star"] = r.b_star;
              d["reading_half"] = r.reading_half;
              d["reading_full"] = r.reading_full;
              d["matching_reading"] = r.matching_reading;
              return d;
          },
          py::arg("a"), py::arg("b_lo"), py::arg("b_hi"), py::arg("steps") = 32);
}
