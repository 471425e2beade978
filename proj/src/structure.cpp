#include "hconvex/structure.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace hconvex {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

double wrap_angle(double t) {
    t = std::fmod(t, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    return t;
}

bool on_boundary(const ConvexBody& body, const HPoint& e, double tol) {
    if (body.kind == ConvexBody::Kind::polytope) {
        const int m = static_cast<int>(body.vertices.size());
        for (int i = 0; i < m; ++i) {
            const Hyperplane line = edge_line(body, i);
            if (std::abs(signed_dist(e, line)) < tol) return true;
        }
        return false;
    }
    for (const CircArc& arc : body.arcs) {
        if (std::abs(dist(e, arc.center) - arc.radius) < tol) {
            const double t = angle_in_frame(arc.center, arc.e1, arc.e2, e);
            if (wrap_angle(t - arc.t0) <= arc.t1 - arc.t0 + 1e-9) return true;
        }
    }
    for (const HPoint& c : body.corners)
        if (dist(e, c) < tol) return true;
    return false;
}

bool is_extreme_of(const ConvexBody& body, const HPoint& e, double tol) {
    if (body.kind == ConvexBody::Kind::polytope) {
        for (const HPoint& v : body.vertices)
            if (dist(v, e) < tol) return true;
        return false;
    }
    return on_boundary(body, e, tol); // strictly convex arcs: boundary = extreme
}

// Uniform point inside the body by Klein-box rejection.
HPoint random_inner_point(const ConvexBody& body, Rng& rng) {
    double lo0 = 1.0, hi0 = -1.0, lo1 = 1.0, hi1 = -1.0;
    auto grow = [&](const HPoint& p) {
        const LVec k = klein(p);
        lo0 = std::min(lo0, k[0]); hi0 = std::max(hi0, k[0]);
        lo1 = std::min(lo1, k[1]); hi1 = std::max(hi1, k[1]);
    };
    if (body.kind == ConvexBody::Kind::polytope) {
        for (const HPoint& v : body.vertices) grow(v);
    } else {
        for (const HPoint& p : boundary_samples(body, 128)) grow(p);
    }
    for (int tries = 0; tries < 10000; ++tries) {
        const LVec k = {rng.uniform(lo0, hi0), rng.uniform(lo1, hi1)};
        if (k[0] * k[0] + k[1] * k[1] >= 1.0) continue;
        const HPoint p = klein_inv(k);
        if (contains(body, p, 1e-12)) return p;
    }
    throw search_error("random_inner_point: rejection sampling failed");
}

} // namespace

CircArc piece_circle(const HPoint& c, const HPoint& a, const HPoint& b, double delta) {
    if (c.dim() != 2) throw unsupported_error("piece_circle: H^2 only");
    if (!(delta > 0.0)) throw domain_error("piece_circle: delta must be positive");
    if (std::abs(dist(c, a) - delta) > 1e-9 || std::abs(dist(c, b) - delta) > 1e-9)
        throw precondition_error("piece_circle: endpoints are not at distance delta from c");
    if (dist(a, b) < 1e-12)
        throw precondition_error("piece_circle: endpoints coincide");
    auto basis = tangent_basis(c);
    const double ta = angle_in_frame(c, basis[0], basis[1], a);
    const double tb = angle_in_frame(c, basis[0], basis[1], b);
    double d = wrap_angle(tb - ta);
    double lo, hi;
    if (d <= kPi) {
        lo = ta;
        hi = ta + d;
    } else {
        lo = tb;
        hi = tb + (kTwoPi - d);
    }
    if (hi - lo >= kPi - 1e-9)
        throw degeneracy_error("piece_circle: segment ab passes through c");
    CircArc arc;
    arc.center = c;
    arc.radius = delta;
    arc.e1 = std::move(basis[0]);
    arc.e2 = std::move(basis[1]);
    arc.t0 = lo;
    arc.t1 = hi;
    arc.start = arc.point_at_angle(lo);
    arc.end = arc.point_at_angle(hi);
    return arc;
}

SpindleCheckReport lemma_spindle_check(const ConvexBody& body, double delta,
                                       int samples, std::uint64_t seed, double tol) {
    Rng rng(seed);
    SpindleCheckReport rep;
    rep.worst_residual = 0.0;
    int made = 0;
    while (made < samples) {
        const HPoint a = random_inner_point(body, rng);
        const HPoint b = random_inner_point(body, rng);
        const double dab = dist(a, b);
        if (dab < 1e-4 || dab > 2.0 * delta - 1e-9) continue;
        ++made;
        for (const HPoint& c : circle_intersection(a, delta, b, delta)) {
            CircArc arc;
            try {
                arc = piece_circle(c, a, b, delta);
            } catch (const error&) {
                continue; // degenerate configuration, skip
            }
            ++rep.arcs_checked;
            for (int s = 0; s <= 100; ++s) {
                const HPoint g = arc.point_at_fraction(s / 100.0);
                rep.worst_residual = std::max(rep.worst_residual, dist_to_body(body, g));
            }
        }
    }
    rep.pass = rep.worst_residual <= tol;
    return rep;
}

CompletenessReport is_complete(const ConvexBody& body, double tol, int boundary_n) {
    if (body.dim != 2) throw unsupported_error("is_complete: H^2 only");
    CompletenessReport rep;
    const DiameterResult diam = diameter(body);
    rep.diameter_value = diam.value;
    const double delta = diam.value;

    // A: ball-hull residual
    const std::vector<HPoint> samples = boundary_samples(body, boundary_n);
    std::optional<HPoint> hull_witness;
    try {
        const ConvexBody hull = ball_intersection(samples, delta);
        for (const HPoint& x : boundary_samples(hull, boundary_n)) {
            const double r = dist_to_body(body, x);
            if (r > rep.ball_hull_residual) {
                rep.ball_hull_residual = r;
                hull_witness = x;
            }
        }
    } catch (const error&) {
        rep.ball_hull_residual = std::numeric_limits<double>::infinity();
    }

    // B: outward offsets must raise the diameter
    rep.outward_probe_ok = true;
    for (const HPoint& p : samples) {
        const LVec out = outward_direction(body, p);
        const HPoint y = geodesic_point(p, out, 2.0 * tol);
        if (farthest_in_body(body, y).value <= delta) {
            rep.outward_probe_ok = false;
            rep.violating_point = y;
            break;
        }
    }

    rep.is_complete = rep.ball_hull_residual < tol && rep.outward_probe_ok;
    if (!rep.is_complete && !rep.violating_point && hull_witness)
        rep.violating_point = hull_witness;
    return rep;
}

UniqueContactReport claim_unique_contact(const ConvexBody& body, const Hyperplane& h,
                                         double cluster_radius) {
    const WidthWitness w = width_given_h(body, h);
    UniqueContactReport rep;
    const int n = static_cast<int>(w.farthest.size());
    std::vector<int> root(n);
    for (int i = 0; i < n; ++i) root[i] = i;
    std::function<int(int)> find = [&](int i) {
        while (root[i] != i) i = root[i] = root[root[i]];
        return i;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double d = dist(w.farthest[i], w.farthest[j]);
            rep.spread = std::max(rep.spread, d);
            if (d <= cluster_radius) root[find(i)] = find(j);
        }
    for (int i = 0; i < n; ++i)
        if (find(i) == i) ++rep.cluster_count;
    return rep;
}

ConstantWidthReport is_constant_width(const ConvexBody& body, double tol, int profile_n) {
    ConstantWidthReport rep;
    double lo = std::numeric_limits<double>::infinity(), hi = -lo, sum = 0.0;
    int count = 0;
    if (body.dim == 2) {
        for (const ProfileSample& s : width_profile(body, profile_n)) {
            lo = std::min(lo, s.width);
            hi = std::max(hi, s.width);
            sum += s.width;
            ++count;
        }
    } else {
        // direction sampling only; the verdict is approximate in d >= 3
        rep.approximate = true;
        Rng rng(20240907);
        const int n = std::max(profile_n, 64);
        for (int i = 0; i < n; ++i) {
            LVec u(body.dim + 1);
            for (;;) {
                for (double& x : u) x = rng.normal();
                u[0] *= 0.25;
                double s = -u[0] * u[0];
                for (int c = 1; c <= body.dim; ++c) s += u[c] * u[c];
                if (s > 1e-6) break;
            }
            const Hyperplane h = supporting_hyperplane(body, normalize_spacelike(u));
            const double w = std::asinh(support_sinh(body, h.normal).max_value);
            lo = std::min(lo, w);
            hi = std::max(hi, w);
            sum += w;
            ++count;
        }
    }
    rep.spread = hi - lo;
    rep.width = sum / static_cast<double>(count);
    rep.is_constant = rep.spread < tol;
    return rep;
}

bool is_constant_diameter(const ConvexBody& body, double delta, double tol, int samples) {
    if (std::abs(diameter(body).value - delta) > tol) return false;
    for (const HPoint& p : boundary_samples(body, samples)) {
        const double far = farthest_in_body(body, p).value;
        if (far < delta - tol) return false;
    }
    return true;
}

Theorem2Report theorem2_pipeline(const ConvexBody& body, double tol) {
    Theorem2Report rep;
    rep.completeness = is_complete(body, tol);
    rep.constant_width = is_constant_width(body, tol);
    const double delta = rep.completeness.diameter_value;
    rep.forward_ok = !rep.completeness.is_complete ||
                     (rep.constant_width.is_constant &&
                      std::abs(rep.constant_width.width - delta) <= tol);
    rep.converse_ok = !rep.constant_width.is_constant || rep.completeness.is_complete;
    rep.consistent = rep.forward_ok && rep.converse_ok;
    return rep;
}

DichotomyReport extreme_point_dichotomy(const ConvexBody& body, const HPoint& e,
                                        double tol) {
    if (!is_extreme_of(body, e, 1e-7))
        throw precondition_error("extreme_point_dichotomy: point is not extreme");
    DichotomyReport rep;
    rep.extreme_point = e;

    const WidthExtremum thick = thickness(body);
    const double delta_val = thick.value;

    bool case1 = false, case2 = false;
    Hyperplane plane1, plane2;
    double w1 = 0.0, w2 = 0.0;
    double best_miss = std::numeric_limits<double>::infinity();

    const auto families = supporting_families(body);

    // Case 1: a thickness line through e. Supporting lines through e form
    // the fan at e (vertex) or the tangent at e (arc point).
    for (const SupportingFamily& fam : families) {
        auto width_at = [&](double t) {
            return std::asinh(support_sinh(body, fam.at(t).normal).max_value);
        };
        if (fam.kind == SupportingFamily::Kind::vertex_fan) {
            if (dist(fam.pivot, e) > 1e-7) continue;
            double arg = fam.t0;
            double best = width_at(fam.t0);
            const int n = 256;
            for (int i = 1; i <= n; ++i) {
                const double t = fam.t0 + fam.span() * i / n;
                const double w = width_at(t);
                if (w < best) { best = w; arg = t; }
            }
            double rarg = arg;
            const double refined =
                golden_min(width_at, std::max(fam.t0, arg - fam.span() / n),
                           std::min(fam.t1, arg + fam.span() / n), 1e-13, &rarg);
            if (refined <= delta_val + tol) {
                case1 = true;
                plane1 = fam.at(rarg);
                w1 = refined;
            } else {
                best_miss = std::min(best_miss, refined - delta_val);
            }
        } else {
            const double g = dist(e, fam.arc.center);
            if (std::abs(g - fam.arc.radius) > 1e-7) continue;
            const double t = angle_in_frame(fam.arc.center, fam.arc.e1, fam.arc.e2, e);
            const double rel = wrap_angle(t - fam.t0);
            if (rel > fam.span() + 1e-9) continue;
            const double w = width_at(fam.t0 + rel);
            if (w <= delta_val + tol) {
                case1 = true;
                plane1 = fam.at(fam.t0 + rel);
                w1 = w;
            } else {
                best_miss = std::min(best_miss, w - delta_val);
            }
        }
    }

    // Case 2: a thickness line with e at its equidistant surface. Maximize
    // signed_dist(e) - width subject to width <= thickness + tol.
    for (const SupportingFamily& fam : families) {
        auto gap_at = [&](double t) {
            const Hyperplane h = fam.at(t);
            const double w = std::asinh(support_sinh(body, h.normal).max_value);
            const double s = signed_dist(e, h);
            // the trailing term breaks plateau ties toward width == thickness
            return (s - w) - 1e3 * std::max(0.0, w - (delta_val + tol)) -
                   1e-3 * std::max(0.0, w - delta_val);
        };
        const int n = 512;
        double arg = fam.t0, best = gap_at(fam.t0);
        for (int i = 1; i <= n; ++i) {
            const double t = fam.t0 + fam.span() * i / n;
            const double g = gap_at(t);
            if (g > best) { best = g; arg = t; }
        }
        double rarg = arg;
        const double refined =
            golden_max(gap_at, std::max(fam.t0, arg - fam.span() / n),
                       std::min(fam.t1, arg + fam.span() / n), 1e-13, &rarg);
        if (refined >= -tol) {
            const Hyperplane h = fam.at(rarg);
            const double w = std::asinh(support_sinh(body, h.normal).max_value);
            if (w <= delta_val + tol) {
                case2 = true;
                plane2 = h;
                w2 = w;
            }
        } else {
            best_miss = std::min(best_miss, -refined);
        }
        if (case1 && case2) break;
    }

    rep.found = case1 || case2;
    if (rep.found) {
        rep.which = case1 && case2 ? DichotomyCase::both
                    : case1        ? DichotomyCase::on_hyperplane
                                   : DichotomyCase::on_equidistant;
        const Hyperplane& h = case1 ? plane1 : plane2;
        const double w = case1 ? w1 : w2;
        rep.plane = h;
        rep.strip = StripSpec{h, EquidistantSurface{h.normal, w}, w};
        rep.residual = std::abs(w - delta_val);
    } else {
        rep.residual = best_miss;
    }
    return rep;
}

namespace {

// Thickness of the polygon obtained by cutting a small cap at vertex v.
double cap_cut_thickness(const ConvexBody& body, int vertex_index, double eps_cap) {
    const int m = static_cast<int>(body.vertices.size());
    const HPoint& v = body.vertices[vertex_index];
    const Hyperplane prev = edge_line(body, (vertex_index - 1 + m) % m);
    const Hyperplane next = edge_line(body, vertex_index % m);
    LVec mid(prev.normal.size());
    for (std::size_t i = 0; i < mid.size(); ++i)
        mid[i] = prev.normal[i] + next.normal[i];
    const double s = lorentz_dot_unchecked(mid, v.coords);
    for (std::size_t i = 0; i < mid.size(); ++i) mid[i] += s * v.coords[i];
    mid = normalize_spacelike(std::move(mid)); // inward normal at v, tangent at v
    // translate the supporting line at v inward by eps_cap
    const double ch = std::cosh(eps_cap), sh = std::sinh(eps_cap);
    LVec cut(mid.size());
    for (std::size_t i = 0; i < cut.size(); ++i)
        cut[i] = sh * v.coords[i] + ch * mid[i];
    const ConvexBody clipped = clip_polygon(body, Hyperplane::from_normal(std::move(cut)));
    return thickness(clipped).value;
}

ConvexBody inscribed_polygon(const ConvexBody& body, int per_arc) {
    std::vector<HPoint> pts = body.corners;
    for (const CircArc& arc : body.arcs)
        for (int i = 1; i < per_arc; ++i)
            pts.push_back(arc.point_at_fraction(static_cast<double>(i) / per_arc));
    return make_polytope(pts);
}

} // namespace

ReducedProbeReport reduced_probe(const ConvexBody& body, double eps_cap, double tol) {
    if (body.dim != 2) throw unsupported_error("reduced_probe: H^2 only");
    ReducedProbeReport rep;
    rep.passes_necessary = true;
    rep.cap_test = true;

    // The cap probe needs a polygon to clip; arc bodies are approximated by a
    // fine inscribed polygon, which makes the verdict approximate for them.
    const ConvexBody* probe_body = &body;
    ConvexBody approx;
    if (body.kind == ConvexBody::Kind::arc_polygon) {
        approx = inscribed_polygon(body, 96);
        probe_body = &approx;
    }
    const double base = thickness(*probe_body).value;
    const int m = static_cast<int>(probe_body->vertices.size());
    for (int i = 0; i < m; ++i) {
        ReducedVertexDetail det;
        const HPoint& v = probe_body->vertices[i];
        det.dichotomy = extreme_point_dichotomy(*probe_body, v, 1e-6);
        if (!det.dichotomy.found) rep.passes_necessary = false;
        double cut = base;
        try {
            cut = cap_cut_thickness(*probe_body, i, eps_cap);
        } catch (const error&) {
            // cap swallowed the polygon; treat as uninformative
        }
        det.cap_decrease = base - cut;
        det.cap_ok = det.cap_decrease > tol;
        if (!det.cap_ok) rep.cap_test = false;
        rep.details.push_back(std::move(det));
    }
    rep.reduced_consistent = rep.passes_necessary && rep.cap_test;
    return rep;
}

ThresholdScanReport rhombus_threshold_scan(double a, double b_lo, double b_hi, int steps) {
    if (!(a > 0.0)) throw domain_error("rhombus_threshold_scan: a must be positive");
    if (!(b_lo > a) || !(b_hi > b_lo))
        throw domain_error("rhombus_threshold_scan: need a < b_lo < b_hi");
    if (steps < 4) throw domain_error("rhombus_threshold_scan: too few steps");
    ThresholdScanReport rep;
    rep.resolution = (b_hi - b_lo) / steps;
    rep.reading_half = std::asinh(std::sinh(a) * std::cosh(2.0 * a));
    rep.reading_full = 0.5 * std::asinh(std::sinh(2.0 * a) * std::cosh(4.0 * a));
    auto classify = [&](double b) {
        return reduced_probe(make_rhombus(a, b)).reduced_consistent;
    };
    bool monotone = true;
    bool seen_true = false;
    for (int i = 0; i <= steps; ++i) {
        const double b = b_lo + (b_hi - b_lo) * i / steps;
        const bool r = classify(b);
        if (seen_true && !r) monotone = false;
        if (r) seen_true = true;
        rep.grid.push_back({b, r});
    }
    rep.monotone = monotone;
    int first_true = -1;
    for (std::size_t i = 0; i < rep.grid.size(); ++i)
        if (rep.grid[i].second) { first_true = static_cast<int>(i); break; }
    if (first_true < 0 || !monotone) {
        rep.found = false;
        return rep;
    }
    if (first_true == 0) {
        // already reduced-consistent at the low end; the flip is at or
        // below b_lo, report the boundary
        rep.found = true;
        rep.b_star = b_lo;
    } else {
        double lo = rep.grid[first_true - 1].first;
        double hi = rep.grid[first_true].first;
        while (hi - lo > std::min(rep.resolution, 1e-3)) {
            const double mid = 0.5 * (lo + hi);
            if (classify(mid)) hi = mid; else lo = mid;
        }
        rep.found = true;
        rep.b_star = 0.5 * (lo + hi);
    }
    const double res = std::max(rep.resolution, 1e-3);
    if (std::abs(rep.b_star - rep.reading_half) <= res)
        rep.matching_reading = "half";
    else if (std::abs(rep.b_star - rep.reading_full) <= res)
        rep.matching_reading = "full";
    else
        rep.matching_reading = "none";
    rep.thickness_at_bstar = thickness(make_rhombus(a, rep.b_star)).value;
    rep.lambert_at_bstar = lambert_height(a, rep.b_star);
    return rep;
}

ConvexBody random_klein_polygon(Rng& rng, int min_v, int max_v, double radius) {
    for (int tries = 0; tries < 1000; ++tries) {
        const int n = rng.uniform_int(min_v, max_v) + 3;
        std::vector<HPoint> pts;
        pts.reserve(n);
        for (int i = 0; i < n; ++i) {
            const double r = radius * std::sqrt(rng.uniform());
            const double t = rng.uniform(0.0, kTwoPi);
            pts.push_back(klein_inv({r * std::cos(t), r * std::sin(t)}));
        }
        ConvexBody body;
        try {
            body = make_polytope(pts);
        } catch (const degeneracy_error&) {
            continue;
        }
        const int v = static_cast<int>(body.vertices.size());
        if (v >= min_v && v <= max_v) return body;
    }
    throw search_error("random_klein_polygon: failed to generate a polygon");
}

ConvexBody make_reuleaux(double delta) {
    if (!(delta > 0.0)) throw domain_error("make_reuleaux: delta must be positive");
    // circumradius of the equilateral triangle with side delta
    const double r = std::asinh(std::sqrt((std::cosh(delta) - 1.0) / 1.5));
    const ConvexBody tri = make_regular_polygon(3, r);
    return ball_intersection(tri.vertices, delta);
}

} // namespace hconvex
