#include "hconvex/body.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace hconvex {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

double wrap_angle(double t) { // into [0, 2*pi)
    t = std::fmod(t, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    return t;
}

// ----- hull membership by facet enumeration (d <= 4, desk scale) -----------

double det_small(std::vector<double>& m, int n) { // destroys m, row-major
    double det = 1.0;
    for (int c = 0; c < n; ++c) {
        int piv = c;
        for (int r = c + 1; r < n; ++r)
            if (std::abs(m[r * n + c]) > std::abs(m[piv * n + c])) piv = r;
        if (std::abs(m[piv * n + c]) < 1e-300) return 0.0;
        if (piv != c) {
            for (int k = 0; k < n; ++k) std::swap(m[piv * n + k], m[c * n + k]);
            det = -det;
        }
        det *= m[c * n + c];
        for (int r = c + 1; r < n; ++r) {
            const double f = m[r * n + c] / m[c * n + c];
            for (int k = c; k < n; ++k) m[r * n + k] -= f * m[c * n + k];
        }
    }
    return det;
}

// normal of the hyperplane spanned by rows of edges ((d-1) x d), by cofactors
LVec hyperplane_normal(const std::vector<LVec>& edges, int d) {
    LVec n(d, 0.0);
    std::vector<double> minor((d - 1) * (d - 1));
    for (int k = 0; k < d; ++k) {
        for (int r = 0; r < d - 1; ++r) {
            int cc = 0;
            for (int c = 0; c < d; ++c) {
                if (c == k) continue;
                minor[r * (d - 1) + cc++] = edges[r][c];
            }
        }
        const double cof = det_small(minor, d - 1);
        n[k] = (k % 2 == 0 ? 1.0 : -1.0) * cof;
    }
    return n;
}

// Max violation of x against the supporting facets of conv(pts) in R^d;
// ~0 means x is inside. Enumerates all d-subsets, which is plenty fast for
// the small vertex counts this library works with.
double conv_membership_residual(const std::vector<LVec>& pts, const LVec& x) {
    const int n = static_cast<int>(pts.size());
    const int d = static_cast<int>(x.size());
    if (n < d + 1) return std::numeric_limits<double>::infinity();
    std::vector<int> idx(d);
    for (int i = 0; i < d; ++i) idx[i] = i;
    double worst = 0.0;
    bool any_facet = false;
    for (;;) {
        // the current d-subset
        std::vector<LVec> edges;
        for (int i = 1; i < d; ++i) {
            LVec e(d);
            for (int c = 0; c < d; ++c) e[c] = pts[idx[i]][c] - pts[idx[0]][c];
            double norm = 0.0;
            for (double v : e) norm += v * v;
            norm = std::sqrt(norm);
            if (norm > 1e-300)
                for (double& v : e) v /= norm;
            edges.push_back(std::move(e));
        }
        LVec normal = hyperplane_normal(edges, d);
        double nn = 0.0;
        for (double v : normal) nn += v * v;
        if (nn > 1e-20) {
            for (double& v : normal) v /= std::sqrt(nn);
            double base = 0.0;
            for (int c = 0; c < d; ++c) base += normal[c] * pts[idx[0]][c];
            double lo = 0.0, hi = 0.0;
            for (int p = 0; p < n; ++p) {
                double s = -base;
                for (int c = 0; c < d; ++c) s += normal[c] * pts[p][c];
                lo = std::min(lo, s);
                hi = std::max(hi, s);
            }
            double sx = -base;
            for (int c = 0; c < d; ++c) sx += normal[c] * x[c];
            const double eps = 1e-12;
            if (hi <= eps) { // supporting from above: require sx <= 0
                any_facet = true;
                worst = std::max(worst, sx - hi);
            }
            if (lo >= -eps) { // supporting from below
                any_facet = true;
                worst = std::max(worst, lo - sx);
            }
        }
        // next combination
        int i = d - 1;
        while (i >= 0 && idx[i] == n - d + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int k = i + 1; k < d; ++k) idx[k] = idx[k - 1] + 1;
    }
    if (!any_facet) return std::numeric_limits<double>::infinity();
    return std::max(0.0, worst);
}

double cross2(const LVec& o, const LVec& a, const LVec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Andrew monotone chain, counterclockwise output. Collinear points dropped.
std::vector<int> hull_ccw_klein(const std::vector<LVec>& k) {
    const double eps = 1e-10;
    const int n = static_cast<int>(k.size());
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int i, int j) {
        if (k[i][0] != k[j][0]) return k[i][0] < k[j][0];
        return k[i][1] < k[j][1];
    });
    idx.erase(std::unique(idx.begin(), idx.end(), [&](int i, int j) {
                  return std::abs(k[i][0] - k[j][0]) < 1e-14 &&
                         std::abs(k[i][1] - k[j][1]) < 1e-14;
              }),
              idx.end());
    const int nu = static_cast<int>(idx.size());
    if (nu < 3) throw degeneracy_error("make_polytope: fewer than 3 distinct points");
    std::vector<int> h(2 * nu);
    int sz = 0;
    for (int ii = 0; ii < nu; ++ii) { // lower chain
        const int i = idx[ii];
        while (sz >= 2 && cross2(k[h[sz - 2]], k[h[sz - 1]], k[i]) <= eps) --sz;
        h[sz++] = i;
    }
    for (int ii = nu - 2, lower = sz + 1; ii >= 0; --ii) { // upper chain
        const int i = idx[ii];
        while (sz >= lower && cross2(k[h[sz - 2]], k[h[sz - 1]], k[i]) <= eps) --sz;
        h[sz++] = i;
    }
    h.resize(sz - 1);
    if (static_cast<int>(h.size()) < 3)
        throw degeneracy_error("make_polytope: input is degenerate (collinear)");
    return h;
}

double nearest_to_segment(const HPoint& x, const HPoint& p, const HPoint& q) {
    const LVec n = normalize_spacelike(lorentz_cross(p.coords, q.coords));
    const Hyperplane line{n};
    const HPoint foot = project_onto(x, line);
    const double along = dist(p, foot) + dist(foot, q);
    if (along <= dist(p, q) + 1e-9)
        return std::abs(signed_dist(x, line));
    return std::min(dist(x, p), dist(x, q));
}

struct ArcDistances {
    double nearest;
    double farthest;
    double far_angle; // angle of the farthest point
};

ArcDistances arc_distances(const CircArc& arc, const HPoint& x) {
    const double g = dist(x, arc.center);
    if (g < 1e-14) {
        const double mid = 0.5 * (arc.t0 + arc.t1);
        return {arc.radius, arc.radius, mid};
    }
    const double b1 = lorentz_dot(x.coords, arc.e1);
    const double b2 = lorentz_dot(x.coords, arc.e2);
    const double toward = std::atan2(b2, b1); // angle of the near side
    auto in_range = [&](double t) {
        const double rel = wrap_angle(t - arc.t0);
        return rel <= arc.t1 - arc.t0 + 1e-12;
    };
    double nearest;
    if (in_range(toward)) {
        nearest = std::abs(g - arc.radius);
    } else {
        nearest = std::min(dist(x, arc.start), dist(x, arc.end));
    }
    double farthest;
    double far_angle = toward + kPi;
    if (in_range(far_angle)) {
        farthest = g + arc.radius;
    } else {
        const double ds = dist(x, arc.start), de = dist(x, arc.end);
        farthest = std::max(ds, de);
        far_angle = ds >= de ? arc.t0 : arc.t1;
    }
    return {nearest, farthest, far_angle};
}

// Interior point of an intersection of congruent disks: damped walk toward
// the farthest center approximates the min-max center of the center set.
HPoint minmax_center(const std::vector<HPoint>& centers) {
    LVec acc(centers[0].coords.size(), 0.0);
    for (const HPoint& c : centers)
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += c.coords[i];
    HPoint p = HPoint::renormalized(std::move(acc));
    for (int it = 1; it <= 600; ++it) {
        double worst = -1.0;
        const HPoint* far = nullptr;
        for (const HPoint& c : centers) {
            const double d = dist(p, c);
            if (d > worst) { worst = d; far = &c; }
        }
        if (worst < 1e-14) break;
        const double step = worst / (it + 1.0);
        if (step < 1e-13) break;
        p = geodesic_point(p, unit_tangent(p, *far), step);
    }
    return p;
}

// Angular subsets of a circle, maintained as disjoint [lo, hi] pieces.
struct AngleSet {
    bool full = true;
    std::vector<std::pair<double, double>> segs;

    void intersect(double center, double halfwidth) {
        if (halfwidth >= kPi - 1e-15) return; // no constraint
        std::vector<std::pair<double, double>> cut;
        const double lo = wrap_angle(center - halfwidth);
        const double width = 2.0 * halfwidth;
        if (lo + width <= kTwoPi) {
            cut.push_back({lo, lo + width});
        } else {
            cut.push_back({lo, kTwoPi});
            cut.push_back({0.0, lo + width - kTwoPi});
        }
        if (full) {
            full = false;
            segs = std::move(cut);
            return;
        }
        std::vector<std::pair<double, double>> out;
        for (const auto& s : segs)
            for (const auto& c : cut) {
                const double a = std::max(s.first, c.first);
                const double b = std::min(s.second, c.second);
                if (b - a > 1e-12) out.push_back({a, b});
            }
        segs = std::move(out);
    }
};

} // namespace

HPoint CircArc::point_at_angle(double t) const {
    const double cr = std::cosh(radius), sr = std::sinh(radius);
    const double ct = std::cos(t), st = std::sin(t);
    LVec c(center.coords.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = cr * center.coords[i] + sr * (ct * e1[i] + st * e2[i]);
    return HPoint::renormalized(std::move(c));
}

HPoint CircArc::point_at_fraction(double f) const {
    return point_at_angle(t0 + f * (t1 - t0));
}

CircArc CircArc::from_angles(const HPoint& center, double radius, double t0, double t1) {
    if (!(radius > 0.0)) throw domain_error("CircArc: radius must be positive");
    if (!(t1 > t0)) throw contract_error("CircArc: empty angle range");
    CircArc arc;
    arc.center = center;
    arc.radius = radius;
    auto basis = tangent_basis(center);
    arc.e1 = std::move(basis[0]);
    arc.e2 = std::move(basis[1]);
    arc.t0 = t0;
    arc.t1 = t1;
    arc.start = arc.point_at_angle(t0);
    arc.end = arc.point_at_angle(t1);
    return arc;
}

Ball Ball::make(HPoint center, double radius) {
    if (!(radius > 0.0)) throw domain_error("Ball: radius must be positive");
    return Ball{std::move(center), radius};
}

double angle_in_frame(const HPoint&, const LVec& e1, const LVec& e2, const HPoint& x) {
    return std::atan2(lorentz_dot(x.coords, e2), lorentz_dot(x.coords, e1));
}

ConvexBody make_polytope(const std::vector<HPoint>& points) {
    if (points.empty()) throw contract_error("make_polytope: no points");
    const int d = points[0].dim();
    for (const HPoint& p : points)
        if (p.dim() != d) throw contract_error("make_polytope: mixed dimensions");
    if (static_cast<int>(points.size()) < d + 1)
        throw degeneracy_error("make_polytope: need at least d+1 points");

    std::vector<LVec> k;
    k.reserve(points.size());
    for (const HPoint& p : points) k.push_back(klein(p));

    ConvexBody body;
    body.kind = ConvexBody::Kind::polytope;
    body.dim = d;

    if (d == 2) {
        for (int i : hull_ccw_klein(k)) body.vertices.push_back(points[i]);
        return body;
    }

    // d >= 3: full-dimensionality via affine rank, extreme points via LP
    {
        std::vector<LVec> dirs;
        for (std::size_t i = 1; i < k.size(); ++i) {
            LVec v(d);
            for (int c = 0; c < d; ++c) v[c] = k[i][c] - k[0][c];
            for (const LVec& e : dirs) {
                double s = 0.0;
                for (int c = 0; c < d; ++c) s += v[c] * e[c];
                for (int c = 0; c < d; ++c) v[c] -= s * e[c];
            }
            double n2 = 0.0;
            for (int c = 0; c < d; ++c) n2 += v[c] * v[c];
            if (n2 > 1e-10) {
                const double f = 1.0 / std::sqrt(n2);
                for (double& x : v) x *= f;
                dirs.push_back(std::move(v));
            }
        }
        if (static_cast<int>(dirs.size()) < d)
            throw degeneracy_error("make_polytope: points are not full-dimensional");
    }
    std::vector<char> keep(points.size(), 1);
    for (std::size_t i = 0; i < points.size(); ++i) { // dedupe
        if (!keep[i]) continue;
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (keep[j] && dist(points[i], points[j]) < 1e-12) keep[j] = 0;
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!keep[i]) continue;
        std::vector<LVec> others;
        for (std::size_t j = 0; j < points.size(); ++j)
            if (j != i && keep[j]) others.push_back(k[j]);
        if (conv_membership_residual(others, k[i]) <= 1e-9) keep[i] = 0;
    }
    for (std::size_t i = 0; i < points.size(); ++i)
        if (keep[i]) body.vertices.push_back(points[i]);
    std::sort(body.vertices.begin(), body.vertices.end(),
              [](const HPoint& a, const HPoint& b) { return a.coords < b.coords; });
    if (static_cast<int>(body.vertices.size()) < d + 1)
        throw degeneracy_error("make_polytope: extreme set is degenerate");
    return body;
}

ConvexBody make_rhombus(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) throw domain_error("make_rhombus: half-lengths must be positive");
    if (a > b) throw domain_error("make_rhombus: expected a <= b (short axis first)");
    ConvexBody body;
    body.kind = ConvexBody::Kind::polytope;
    body.dim = 2;
    body.vertices = {
        HPoint::renormalized({std::cosh(a), std::sinh(a), 0.0}),
        HPoint::renormalized({std::cosh(b), 0.0, std::sinh(b)}),
        HPoint::renormalized({std::cosh(a), -std::sinh(a), 0.0}),
        HPoint::renormalized({std::cosh(b), 0.0, -std::sinh(b)}),
    };
    return body;
}

ConvexBody make_crosspolytope(const std::vector<double>& half_lengths) {
    const int d = static_cast<int>(half_lengths.size());
    if (d < 2) throw domain_error("make_crosspolytope: need dimension >= 2");
    for (double h : half_lengths)
        if (!(h > 0.0)) throw domain_error("make_crosspolytope: half-lengths must be positive");
    std::vector<HPoint> pts;
    for (int i = 0; i < d; ++i)
        for (int sgn : {+1, -1}) {
            LVec c(d + 1, 0.0);
            c[0] = std::cosh(half_lengths[i]);
            c[i + 1] = sgn * std::sinh(half_lengths[i]);
            pts.push_back(HPoint::renormalized(std::move(c)));
        }
    return make_polytope(pts);
}

ConvexBody make_regular_polygon(int n, double circumradius) {
    if (n < 3) throw domain_error("make_regular_polygon: need n >= 3");
    if (!(circumradius > 0.0)) throw domain_error("make_regular_polygon: radius must be positive");
    ConvexBody body;
    body.kind = ConvexBody::Kind::polytope;
    body.dim = 2;
    const double sr = std::sinh(circumradius), cr = std::cosh(circumradius);
    for (int k = 0; k < n; ++k) {
        const double t = kTwoPi * k / n;
        body.vertices.push_back(
            HPoint::renormalized({cr, sr * std::cos(t), sr * std::sin(t)}));
    }
    return body;
}

ConvexBody make_ball_body(const HPoint& center, double radius) {
    if (center.dim() != 2) throw unsupported_error("make_ball_body: H^2 only");
    ConvexBody body;
    body.kind = ConvexBody::Kind::arc_polygon;
    body.dim = 2;
    body.arcs.push_back(CircArc::from_angles(center, radius, 0.0, kTwoPi));
    return body;
}

ConvexBody ball_intersection(const std::vector<HPoint>& centers_in, double delta) {
    if (!(delta > 0.0)) throw domain_error("ball_intersection: delta must be positive");
    if (centers_in.empty()) throw contract_error("ball_intersection: no centers");
    if (centers_in[0].dim() != 2) throw unsupported_error("ball_intersection: H^2 only");

    std::vector<HPoint> centers;
    for (const HPoint& c : centers_in) {
        bool dup = false;
        for (const HPoint& e : centers)
            if (dist(c, e) < 1e-12) { dup = true; break; }
        if (!dup) centers.push_back(c);
    }
    const int n = static_cast<int>(centers.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (dist(centers[i], centers[j]) > 2.0 * delta - 1e-9)
                throw emptiness_error("ball_intersection: centers too far apart");

    if (n == 1) return make_ball_body(centers[0], delta);

    const HPoint inner = minmax_center(centers);
    {
        double worst = 0.0;
        for (const HPoint& c : centers) worst = std::max(worst, dist(inner, c));
        if (worst > delta - 1e-9)
            throw emptiness_error("ball_intersection: intersection has no interior");
    }

    const double cd = std::cosh(delta), sd = std::sinh(delta);
    struct RawArc { int circle; double lo, hi; };
    std::vector<RawArc> raw;
    std::vector<std::vector<LVec>> frames(n);
    int full_circle = -1;
    for (int i = 0; i < n; ++i) {
        frames[i] = tangent_basis(centers[i]);
        AngleSet set;
        bool dead = false;
        for (int j = 0; j < n && !dead; ++j) {
            if (j == i) continue;
            const double dij = dist(centers[i], centers[j]);
            const double t = cd * (std::cosh(dij) - 1.0) / (sd * std::sinh(dij));
            if (t >= 1.0) { dead = true; break; } // circle i fully outside disk j
            const double p = lorentz_dot(frames[i][0], centers[j].coords);
            const double q = lorentz_dot(frames[i][1], centers[j].coords);
            set.intersect(std::atan2(q, p), std::acos(std::max(-1.0, t)));
        }
        if (dead) continue;
        if (set.full) { full_circle = i; break; }
        auto segs = set.segs;
        std::sort(segs.begin(), segs.end());
        // rejoin a single arc that was split across the 0/2pi seam
        if (segs.size() >= 2 && segs.front().first <= 1e-12 &&
            segs.back().second >= kTwoPi - 1e-12) {
            segs.front().first = segs.back().first - kTwoPi;
            segs.pop_back();
        }
        for (const auto& s : segs)
            if (s.second - s.first > 1e-7)
                raw.push_back({i, s.first, s.second});
    }

    if (full_circle >= 0) // one disk inside all others
        return make_ball_body(centers[full_circle], delta);
    if (raw.empty())
        throw emptiness_error("ball_intersection: no boundary arcs (degenerate)");

    ConvexBody body;
    body.kind = ConvexBody::Kind::arc_polygon;
    body.dim = 2;
    for (const RawArc& r : raw) {
        CircArc arc;
        arc.center = centers[r.circle];
        arc.radius = delta;
        arc.e1 = frames[r.circle][0];
        arc.e2 = frames[r.circle][1];
        arc.t0 = r.lo;
        arc.t1 = r.hi;
        arc.start = arc.point_at_angle(r.lo);
        arc.end = arc.point_at_angle(r.hi);
        body.arcs.push_back(std::move(arc));
    }
    // chain counterclockwise around an interior point
    const LVec k0 = klein(inner);
    std::sort(body.arcs.begin(), body.arcs.end(), [&](const CircArc& a, const CircArc& b) {
        const LVec ka = klein(a.point_at_fraction(0.5));
        const LVec kb = klein(b.point_at_fraction(0.5));
        return std::atan2(ka[1] - k0[1], ka[0] - k0[0]) <
               std::atan2(kb[1] - k0[1], kb[0] - k0[0]);
    });
    const int m = static_cast<int>(body.arcs.size());
    for (int i = 0; i < m; ++i) {
        const CircArc& cur = body.arcs[i];
        const CircArc& nxt = body.arcs[(i + 1) % m];
        if (dist(cur.end, nxt.start) > 1e-6)
            throw search_error("ball_intersection: boundary chain mismatch");
        LVec avg(cur.end.coords.size());
        for (std::size_t c = 0; c < avg.size(); ++c)
            avg[c] = 0.5 * (cur.end.coords[c] + nxt.start.coords[c]);
        body.corners.push_back(HPoint::renormalized(std::move(avg)));
    }
    return body;
}

bool contains(const ConvexBody& body, const HPoint& p, double tol) {
    if (body.kind == ConvexBody::Kind::arc_polygon) {
        for (const CircArc& arc : body.arcs)
            if (dist(p, arc.center) > arc.radius + tol) return false;
        return true;
    }
    if (body.dim == 2) {
        const int n = static_cast<int>(body.vertices.size());
        for (int i = 0; i < n; ++i)
            if (signed_dist(p, edge_line(body, i)) < -tol) return false;
        return true;
    }
    std::vector<LVec> k;
    for (const HPoint& v : body.vertices) k.push_back(klein(v));
    return conv_membership_residual(k, klein(p)) <= std::max(tol, 1e-9);
}

DiameterResult diameter(const ConvexBody& body) {
    DiameterResult best;
    best.value = -1.0;
    if (body.kind == ConvexBody::Kind::polytope) {
        for (std::size_t i = 0; i < body.vertices.size(); ++i)
            for (std::size_t j = i + 1; j < body.vertices.size(); ++j) {
                const double d = dist(body.vertices[i], body.vertices[j]);
                if (d > best.value) best = {d, body.vertices[i], body.vertices[j]};
            }
        return best;
    }
    // corners pairwise and corner-to-arc (closed forms)
    for (std::size_t i = 0; i < body.corners.size(); ++i)
        for (std::size_t j = i + 1; j < body.corners.size(); ++j) {
            const double d = dist(body.corners[i], body.corners[j]);
            if (d > best.value) best = {d, body.corners[i], body.corners[j]};
        }
    for (const HPoint& c : body.corners)
        for (const CircArc& arc : body.arcs) {
            const ArcDistances ad = arc_distances(arc, c);
            if (ad.farthest > best.value)
                best = {ad.farthest, c, arc.point_at_angle(ad.far_angle)};
        }
    // arc-to-arc: dense scan + golden polish of t -> farthest distance
    for (std::size_t i = 0; i < body.arcs.size(); ++i)
        for (std::size_t j = i; j < body.arcs.size(); ++j) {
            const CircArc& ai = body.arcs[i];
            const CircArc& aj = body.arcs[j];
            auto f = [&](double t) {
                return arc_distances(aj, ai.point_at_angle(t)).farthest;
            };
            const int N = 256;
            double bt = ai.t0, bv = -1.0;
            for (int s = 0; s <= N; ++s) {
                const double t = ai.t0 + (ai.t1 - ai.t0) * s / N;
                const double v = f(t);
                if (v > bv) { bv = v; bt = t; }
            }
            const double h = (ai.t1 - ai.t0) / N;
            double lo = std::max(ai.t0, bt - h), hi = std::min(ai.t1, bt + h);
            const double gr = 0.6180339887498949;
            double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
            double f1 = f(x1), f2 = f(x2);
            while (hi - lo > 1e-12) {
                if (f1 < f2) {
                    lo = x1; x1 = x2; f1 = f2;
                    x2 = lo + gr * (hi - lo); f2 = f(x2);
                } else {
                    hi = x2; x2 = x1; f2 = f1;
                    x1 = hi - gr * (hi - lo); f1 = f(x1);
                }
            }
            const double t = 0.5 * (lo + hi);
            const HPoint p = ai.point_at_angle(t);
            const ArcDistances ad = arc_distances(aj, p);
            if (ad.farthest > best.value)
                best = {ad.farthest, p, aj.point_at_angle(ad.far_angle)};
        }
    return best;
}

ExtremePoints extreme_points(const ConvexBody& body) {
    if (body.kind == ConvexBody::Kind::polytope)
        return {body.vertices, false};
    return {body.corners, true};
}

std::vector<HPoint> boundary_samples(const ConvexBody& body, int n) {
    std::vector<HPoint> out;
    if (body.kind == ConvexBody::Kind::polytope) {
        if (body.dim != 2)
            throw unsupported_error("boundary_samples: polytope sampling is H^2 only");
        const int m = static_cast<int>(body.vertices.size());
        std::vector<double> len(m);
        double total = 0.0;
        for (int i = 0; i < m; ++i) {
            len[i] = dist(body.vertices[i], body.vertices[(i + 1) % m]);
            total += len[i];
        }
        for (int i = 0; i < m; ++i) {
            const HPoint& p = body.vertices[i];
            const HPoint& q = body.vertices[(i + 1) % m];
            const int k = std::max(1, static_cast<int>(std::lround(n * len[i] / total)));
            const LVec w = unit_tangent(p, q);
            for (int s = 0; s < k; ++s)
                out.push_back(geodesic_point(p, w, len[i] * s / k));
        }
        return out;
    }
    double total = 0.0;
    for (const CircArc& a : body.arcs) total += a.angular_span();
    for (const CircArc& a : body.arcs) {
        const int k = std::max(1, static_cast<int>(std::lround(n * a.angular_span() / total)));
        for (int s = 0; s < k; ++s)
            out.push_back(a.point_at_fraction(static_cast<double>(s) / k));
    }
    return out;
}

double dist_to_body(const ConvexBody& body, const HPoint& p) {
    if (contains(body, p, 1e-12)) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    if (body.kind == ConvexBody::Kind::polytope) {
        if (body.dim != 2) throw unsupported_error("dist_to_body: H^2 only");
        const int m = static_cast<int>(body.vertices.size());
        for (int i = 0; i < m; ++i)
            best = std::min(best,
                            nearest_to_segment(p, body.vertices[i], body.vertices[(i + 1) % m]));
        return best;
    }
    for (const CircArc& arc : body.arcs)
        best = std::min(best, arc_distances(arc, p).nearest);
    for (const HPoint& c : body.corners)
        best = std::min(best, dist(p, c));
    return best;
}

FarthestResult farthest_in_body(const ConvexBody& body, const HPoint& p) {
    FarthestResult best;
    best.value = -1.0;
    if (body.kind == ConvexBody::Kind::polytope) {
        for (const HPoint& v : body.vertices) {
            const double d = dist(v, p);
            if (d > best.value) best = {d, v};
        }
        return best;
    }
    for (const HPoint& c : body.corners) {
        const double d = dist(c, p);
        if (d > best.value) best = {d, c};
    }
    for (const CircArc& arc : body.arcs) {
        const ArcDistances ad = arc_distances(arc, p);
        if (ad.farthest > best.value)
            best = {ad.farthest, arc.point_at_angle(ad.far_angle)};
    }
    return best;
}

LVec outward_direction(const ConvexBody& body, const HPoint& p) {
    std::vector<LVec> normals;
    if (body.kind == ConvexBody::Kind::polytope) {
        const int m = static_cast<int>(body.vertices.size());
        for (int i = 0; i < m; ++i) {
            const Hyperplane line = edge_line(body, i);
            if (std::abs(signed_dist(p, line)) < 1e-9) {
                const HPoint foot = project_onto(p, line);
                const double along = dist(body.vertices[i], foot) +
                                     dist(foot, body.vertices[(i + 1) % m]);
                if (along <= dist(body.vertices[i], body.vertices[(i + 1) % m]) + 1e-9) {
                    LVec u = line.normal;
                    for (double& x : u) x = -x; // outward
                    normals.push_back(std::move(u));
                }
            }
        }
    } else {
        for (const CircArc& arc : body.arcs) {
            const double g = dist(p, arc.center);
            if (std::abs(g - arc.radius) < 1e-9) {
                const double t = angle_in_frame(arc.center, arc.e1, arc.e2, p);
                if (wrap_angle(t - arc.t0) <= arc.t1 - arc.t0 + 1e-9) {
                    LVec w = unit_tangent(p, arc.center);
                    for (double& x : w) x = -x;
                    normals.push_back(std::move(w));
                }
            }
        }
    }
    if (normals.empty())
        throw contract_error("outward_direction: point is not on the boundary");
    LVec acc(p.coords.size(), 0.0);
    for (const LVec& u : normals)
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += u[i];
    // keep it tangent at p and unit spacelike
    const double s = lorentz_dot_unchecked(acc, p.coords);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += s * p.coords[i];
    return normalize_spacelike(std::move(acc));
}

Hyperplane edge_line(const ConvexBody& body, int i) {
    if (body.kind != ConvexBody::Kind::polytope || body.dim != 2)
        throw unsupported_error("edge_line: H^2 polygons only");
    const int m = static_cast<int>(body.vertices.size());
    const HPoint& p = body.vertices[i % m];
    const HPoint& q = body.vertices[(i + 1) % m];
    LVec n = normalize_spacelike(lorentz_cross(p.coords, q.coords));
    // orient with the body on the nonnegative side
    const HPoint& probe = body.vertices[(i + 2) % m];
    if (lorentz_dot(probe.coords, n) < 0.0)
        for (double& x : n) x = -x;
    return Hyperplane{std::move(n)};
}

ConvexBody clip_polygon(const ConvexBody& body, const Hyperplane& h) {
    if (body.kind != ConvexBody::Kind::polytope || body.dim != 2)
        throw unsupported_error("clip_polygon: H^2 polygons only");
    const int m = static_cast<int>(body.vertices.size());
    std::vector<HPoint> out;
    for (int i = 0; i < m; ++i) {
        const HPoint& cur = body.vertices[i];
        const HPoint& nxt = body.vertices[(i + 1) % m];
        const double sc = lorentz_dot(cur.coords, h.normal);
        const double sn = lorentz_dot(nxt.coords, h.normal);
        if (sc >= 0.0) out.push_back(cur);
        if ((sc > 0.0 && sn < 0.0) || (sc < 0.0 && sn > 0.0)) {
            const LVec w = unit_tangent(cur, nxt);
            const double a = sc;
            const double b = lorentz_dot_unchecked(w, h.normal);
            const double s = std::atanh(std::clamp(-a / b, -1.0 + 1e-15, 1.0 - 1e-15));
            out.push_back(geodesic_point(cur, w, s));
        }
    }
    if (static_cast<int>(out.size()) < 3)
        throw emptiness_error("clip_polygon: nothing full-dimensional remains");
    return make_polytope(out);
}

std::vector<HPoint> circle_intersection(const HPoint& c1, double r1,
                                        const HPoint& c2, double r2) {
    if (c1.dim() != 2) throw unsupported_error("circle_intersection: H^2 only");
    const double k = lorentz_dot(c1.coords, c2.coords);
    if (k > -1.0 - 1e-14)
        throw contract_error("circle_intersection: centers coincide");
    const double det = 1.0 - k * k; // negative
    const double alpha = (std::cosh(r1) + k * std::cosh(r2)) / det;
    const double beta = (std::cosh(r2) + k * std::cosh(r1)) / det;
    LVec v(3);
    for (int i = 0; i < 3; ++i)
        v[i] = alpha * c1.coords[i] + beta * c2.coords[i];
    const LVec n = lorentz_cross(c1.coords, c2.coords);
    const double nn = k * k - 1.0; // = <n,n>
    const double q = lorentz_dot_unchecked(v, v);
    double g2 = (-1.0 - q) / nn;
    std::vector<HPoint> out;
    if (g2 < -1e-12) return out; // circles do not meet
    if (g2 < 0.0) g2 = 0.0;
    const double g = std::sqrt(g2);
    if (g < 1e-9) {
        out.push_back(HPoint::renormalized(v));
        return out;
    }
    LVec a(3), b(3);
    for (int i = 0; i < 3; ++i) {
        a[i] = v[i] + g * n[i];
        b[i] = v[i] - g * n[i];
    }
    out.push_back(HPoint::renormalized(std::move(a)));
    out.push_back(HPoint::renormalized(std::move(b)));
    return out;
}

HPoint midpoint(const HPoint& p, const HPoint& q) {
    LVec c(p.coords.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.coords[i] + q.coords[i];
    return HPoint::renormalized(std::move(c));
}

bool segments_cross_klein(const LVec& a, const LVec& b, const LVec& p, const LVec& q) {
    auto orient = [](const LVec& o, const LVec& u, const LVec& v) {
        const double c = (u[0] - o[0]) * (v[1] - o[1]) - (u[1] - o[1]) * (v[0] - o[0]);
        if (c > 1e-14) return 1;
        if (c < -1e-14) return -1;
        return 0;
    };
    auto on_seg = [](const LVec& o, const LVec& u, const LVec& v) {
        return std::min(o[0], u[0]) - 1e-14 <= v[0] && v[0] <= std::max(o[0], u[0]) + 1e-14 &&
               std::min(o[1], u[1]) - 1e-14 <= v[1] && v[1] <= std::max(o[1], u[1]) + 1e-14;
    };
    const int o1 = orient(a, b, p), o2 = orient(a, b, q);
    const int o3 = orient(p, q, a), o4 = orient(p, q, b);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_seg(a, b, p)) return true;
    if (o2 == 0 && on_seg(a, b, q)) return true;
    if (o3 == 0 && on_seg(p, q, a)) return true;
    if (o4 == 0 && on_seg(p, q, b)) return true;
    return false;
}

} // namespace hconvex
