#include "hconvex/json_io.hpp"

#include <cmath>
#include <fstream>

namespace hconvex {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

ojson vec_to_json(const LVec& v) { return ojson(v); }

LVec vec_from_json(const ojson& j, int expected) {
    if (!j.is_array() || static_cast<int>(j.size()) != expected)
        throw schema_error("body json: coordinate array of wrong shape");
    LVec v;
    v.reserve(j.size());
    for (const auto& x : j) {
        if (!x.is_number()) throw schema_error("body json: non-numeric coordinate");
        v.push_back(x.get<double>());
    }
    return v;
}

HPoint point_from_json(const ojson& j, int dim) {
    try {
        return HPoint::from_coords(vec_from_json(j, dim + 1));
    } catch (const invalid_point_error& e) {
        throw schema_error(std::string("body json: ") + e.what());
    }
}

} // namespace

ojson body_to_json(const ConvexBody& body) {
    ojson j;
    j["dim"] = body.dim;
    j["kind"] = body.kind == ConvexBody::Kind::polytope ? "polytope" : "arc-polygon";
    ojson verts = ojson::array();
    for (const HPoint& v : body.vertices) verts.push_back(vec_to_json(v.coords));
    j["vertices"] = std::move(verts);
    ojson arcs = ojson::array();
    for (const CircArc& a : body.arcs) {
        ojson ja;
        ja["center"] = vec_to_json(a.center.coords);
        ja["radius"] = a.radius;
        ja["start"] = vec_to_json(a.start.coords);
        ja["end"] = vec_to_json(a.end.coords);
        arcs.push_back(std::move(ja));
    }
    j["arcs"] = std::move(arcs);
    return j;
}

ConvexBody body_from_json(const ojson& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("kind"))
        throw schema_error("body json: missing dim/kind");
    if (!j["dim"].is_number_integer())
        throw schema_error("body json: dim must be an integer");
    const int dim = j["dim"].get<int>();
    if (dim < 2 || dim > 8) throw schema_error("body json: unsupported dim");
    const std::string kind = j["kind"].get<std::string>();

    if (kind == "polytope") {
        if (!j.contains("vertices") || !j["vertices"].is_array())
            throw schema_error("body json: polytope without vertices");
        std::vector<HPoint> pts;
        for (const auto& v : j["vertices"]) pts.push_back(point_from_json(v, dim));
        try {
            return make_polytope(pts);
        } catch (const error& e) {
            throw schema_error(std::string("body json: ") + e.what());
        }
    }
    if (kind != "arc-polygon") throw schema_error("body json: unknown kind");
    if (dim != 2) throw schema_error("body json: arc-polygon requires dim 2");
    if (!j.contains("arcs") || !j["arcs"].is_array() || j["arcs"].empty())
        throw schema_error("body json: arc-polygon without arcs");

    ConvexBody body;
    body.kind = ConvexBody::Kind::arc_polygon;
    body.dim = 2;
    for (const auto& ja : j["arcs"]) {
        if (!ja.contains("center") || !ja.contains("radius") ||
            !ja.contains("start") || !ja.contains("end"))
            throw schema_error("body json: malformed arc");
        const HPoint center = point_from_json(ja["center"], 2);
        if (!ja["radius"].is_number()) throw schema_error("body json: bad radius");
        const double radius = ja["radius"].get<double>();
        if (!(radius > 0.0)) throw schema_error("body json: radius must be positive");
        const HPoint start = point_from_json(ja["start"], 2);
        const HPoint end = point_from_json(ja["end"], 2);
        if (std::abs(dist(center, start) - radius) > 1e-8 ||
            std::abs(dist(center, end) - radius) > 1e-8)
            throw schema_error("body json: arc endpoints off the circle");
        CircArc arc;
        arc.center = center;
        arc.radius = radius;
        auto basis = tangent_basis(center);
        arc.e1 = std::move(basis[0]);
        arc.e2 = std::move(basis[1]);
        arc.t0 = angle_in_frame(center, arc.e1, arc.e2, start);
        if (dist(start, end) < 1e-10) {
            arc.t1 = arc.t0 + kTwoPi; // full circle
        } else {
            double d = angle_in_frame(center, arc.e1, arc.e2, end) - arc.t0;
            d = std::fmod(d, kTwoPi);
            if (d < 0.0) d += kTwoPi;
            arc.t1 = arc.t0 + d;
        }
        arc.start = start;
        arc.end = end;
        body.arcs.push_back(std::move(arc));
    }
    const int m = static_cast<int>(body.arcs.size());
    if (m == 1) {
        if (!body.arcs[0].full())
            throw schema_error("body json: a single arc must be a full circle");
    } else {
        for (int i = 0; i < m; ++i) {
            const CircArc& cur = body.arcs[i];
            const CircArc& nxt = body.arcs[(i + 1) % m];
            if (dist(cur.end, nxt.start) > 1e-7)
                throw schema_error("body json: arcs do not chain");
            body.corners.push_back(midpoint(cur.end, nxt.start));
        }
    }
    return body;
}

void save_body(const ConvexBody& body, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw schema_error("save_body: cannot open " + path);
    out << body_to_json(body).dump(2) << "\n";
}

ConvexBody load_body(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw schema_error("load_body: cannot open " + path);
    ojson j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw schema_error(std::string("load_body: parse error: ") + e.what());
    }
    return body_from_json(j);
}

ojson witness_to_json(const WidthWitness& w) {
    ojson j;
    j["normal"] = ojson(w.plane.normal);
    j["value"] = w.value;
    ojson far = ojson::array();
    for (const HPoint& p : w.farthest) far.push_back(ojson(p.coords));
    j["farthest"] = std::move(far);
    ojson con = ojson::array();
    for (const HPoint& p : w.contact) con.push_back(ojson(p.coords));
    j["contact"] = std::move(con);
    return j;
}

} // namespace hconvex
