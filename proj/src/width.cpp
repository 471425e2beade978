#include "hconvex/width.hpp"

#include <algorithm>
#include <cmath>
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

struct Candidate {
    double value;
    HPoint point;
};

void arc_support_candidates(const CircArc& arc, const LVec& u,
                            std::vector<Candidate>& maxc, std::vector<Candidate>& minc) {
    const double a0 = std::cosh(arc.radius) * lorentz_dot(arc.center.coords, u);
    const double a1 = std::sinh(arc.radius) * lorentz_dot(arc.e1, u);
    const double a2 = std::sinh(arc.radius) * lorentz_dot(arc.e2, u);
    const double amp = std::hypot(a1, a2);
    auto value_at = [&](double t) { return a0 + a1 * std::cos(t) + a2 * std::sin(t); };
    auto push_if_in_range = [&](double t, std::vector<Candidate>& out) {
        const double rel = wrap_angle(t - arc.t0);
        if (rel <= arc.t1 - arc.t0 + 1e-12) {
            const double tt = arc.t0 + rel;
            out.push_back({value_at(tt), arc.point_at_angle(tt)});
        }
    };
    if (amp > 1e-300) {
        const double phi = std::atan2(a2, a1);
        push_if_in_range(phi, maxc);
        push_if_in_range(phi + kPi, minc);
    }
    maxc.push_back({value_at(arc.t0), arc.start});
    maxc.push_back({value_at(arc.t1), arc.end});
    minc.push_back({value_at(arc.t0), arc.start});
    minc.push_back({value_at(arc.t1), arc.end});
}

// Width along a fixed normal without building witness sets.
double support_max_only(const ConvexBody& body, const LVec& u) {
    double best = -std::numeric_limits<double>::infinity();
    if (body.kind == ConvexBody::Kind::polytope) {
        for (const HPoint& v : body.vertices)
            best = std::max(best, lorentz_dot(v.coords, u));
        return best;
    }
    for (const CircArc& arc : body.arcs) {
        const double a0 = std::cosh(arc.radius) * lorentz_dot(arc.center.coords, u);
        const double a1 = std::sinh(arc.radius) * lorentz_dot(arc.e1, u);
        const double a2 = std::sinh(arc.radius) * lorentz_dot(arc.e2, u);
        const double amp = std::hypot(a1, a2);
        double m = std::max(a0 + a1 * std::cos(arc.t0) + a2 * std::sin(arc.t0),
                            a0 + a1 * std::cos(arc.t1) + a2 * std::sin(arc.t1));
        if (amp > 1e-300) {
            const double phi = std::atan2(a2, a1);
            if (wrap_angle(phi - arc.t0) <= arc.t1 - arc.t0 + 1e-12)
                m = std::max(m, a0 + amp);
        }
        best = std::max(best, m);
    }
    return best;
}

double support_min_only(const ConvexBody& body, const LVec& u) {
    double best = std::numeric_limits<double>::infinity();
    if (body.kind == ConvexBody::Kind::polytope) {
        for (const HPoint& v : body.vertices)
            best = std::min(best, lorentz_dot(v.coords, u));
        return best;
    }
    for (const CircArc& arc : body.arcs) {
        const double a0 = std::cosh(arc.radius) * lorentz_dot(arc.center.coords, u);
        const double a1 = std::sinh(arc.radius) * lorentz_dot(arc.e1, u);
        const double a2 = std::sinh(arc.radius) * lorentz_dot(arc.e2, u);
        const double amp = std::hypot(a1, a2);
        double m = std::min(a0 + a1 * std::cos(arc.t0) + a2 * std::sin(arc.t0),
                            a0 + a1 * std::cos(arc.t1) + a2 * std::sin(arc.t1));
        if (amp > 1e-300) {
            const double phi = std::atan2(a2, a1);
            if (wrap_angle(phi + kPi - arc.t0) <= arc.t1 - arc.t0 + 1e-12)
                m = std::min(m, a0 - amp);
        }
        best = std::min(best, m);
    }
    return best;
}

LVec tangent_normal_of_arc(const CircArc& arc, double t) {
    // unit normal of the tangent line at arc point x(t), body side nonnegative
    const double sr = std::sinh(arc.radius), cr = std::cosh(arc.radius);
    const double ct = std::cos(t), st = std::sin(t);
    LVec u(arc.center.coords.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        u[i] = -(sr * arc.center.coords[i] + cr * (ct * arc.e1[i] + st * arc.e2[i]));
    return u;
}

struct FamilyScan {
    double best_t = 0.0;
    double best_value = 0.0;
};

FamilyScan scan_family(const SupportingFamily& fam, const ConvexBody& body, int grid,
                       bool minimize) {
    auto value = [&](double t) {
        const double s = support_max_only(body, fam.at(t).normal);
        return std::asinh(s);
    };
    const double lo = fam.t0, hi = fam.t1;
    const int n = std::max(grid, 16);
    std::vector<double> w(n + 1);
    for (int i = 0; i <= n; ++i)
        w[i] = value(lo + (hi - lo) * i / n);
    auto better = [&](double a, double b) { return minimize ? a < b : a > b; };
    FamilyScan out;
    out.best_t = lo;
    out.best_value = w[0];
    if (better(w[n], out.best_value)) { out.best_value = w[n]; out.best_t = hi; }
    const double h = (hi - lo) / n;
    for (int i = 1; i < n; ++i) {
        const bool local = minimize ? (w[i] <= w[i - 1] && w[i] <= w[i + 1])
                                    : (w[i] >= w[i - 1] && w[i] >= w[i + 1]);
        if (!local) continue;
        double arg = 0.0;
        const double a = lo + h * (i - 1), b = lo + h * (i + 1);
        const double v = minimize ? golden_min(value, a, b, 1e-13, &arg)
                                  : golden_max(value, a, b, 1e-13, &arg);
        if (better(v, out.best_value)) { out.best_value = v; out.best_t = arg; }
    }
    return out;
}

LVec random_spacelike_direction(int dim, Rng& rng) {
    LVec v(dim + 1);
    for (;;) {
        for (double& x : v) x = rng.normal();
        v[0] *= 0.25;
        double s = -v[0] * v[0];
        for (int i = 1; i <= dim; ++i) s += v[i] * v[i];
        if (s > 1e-6) {
            const double f = 1.0 / std::sqrt(s);
            for (double& x : v) x *= f;
            return v;
        }
    }
}

WidthExtremum optimize_highdim(const ConvexBody& body, const WidthOptions& opts,
                               bool minimize) {
    Rng rng(opts.seed);
    // Each evaluation re-anchors the direction at the supported normal; the
    // walk then stays on well-conditioned representatives of the shift family
    // instead of drifting toward the light cone.
    auto objective = [&](const LVec& dir, LVec& anchored) {
        const Hyperplane h = supporting_hyperplane(body, dir, opts);
        anchored = h.normal;
        return std::asinh(support_max_only(body, h.normal));
    };
    double best = minimize ? std::numeric_limits<double>::infinity()
                           : -std::numeric_limits<double>::infinity();
    LVec best_dir;
    auto better = [&](double a, double b) { return minimize ? a < b : a > b; };
    const int n = body.dim + 1;
    for (int s = 0; s < std::max(1, opts.multistart); ++s) {
        LVec u = random_spacelike_direction(body.dim, rng);
        double cur = objective(u, u);
        double step = 0.35;
        while (step > 1e-7) {
            bool moved = false;
            for (int k = 0; k < n && !moved; ++k) {
                for (int sgn : {+1, -1}) {
                    LVec cand = u;
                    cand[k] += sgn * step;
                    double norm = -cand[0] * cand[0];
                    for (int i = 1; i < n; ++i) norm += cand[i] * cand[i];
                    if (norm < 1e-9) continue;
                    const double f = 1.0 / std::sqrt(norm);
                    for (double& x : cand) x *= f;
                    if (std::abs(cand[0]) > 1e3) continue; // unusably close to the cone
                    LVec anchored;
                    const double v = objective(cand, anchored);
                    if (better(v, cur)) {
                        cur = v;
                        u = std::move(anchored);
                        moved = true;
                        break;
                    }
                }
            }
            if (!moved) step *= 0.5;
        }
        if (better(cur, best)) { best = cur; best_dir = u; }
    }
    WidthExtremum out;
    out.witness = width_given_h(body, supporting_hyperplane(body, best_dir, opts), opts);
    out.value = out.witness.value;
    out.global_certified = false;
    out.starts_used = std::max(1, opts.multistart);
    return out;
}

WidthExtremum optimize_planar(const ConvexBody& body, const WidthOptions& opts,
                              bool minimize) {
    const auto families = supporting_families(body);
    double best = minimize ? std::numeric_limits<double>::infinity()
                           : -std::numeric_limits<double>::infinity();
    const SupportingFamily* best_fam = nullptr;
    double best_t = 0.0;
    auto better = [&](double a, double b) { return minimize ? a < b : a > b; };
    for (const auto& fam : families) {
        const FamilyScan scan = scan_family(fam, body, opts.coarse_grid, minimize);
        if (better(scan.best_value, best)) {
            best = scan.best_value;
            best_fam = &fam;
            best_t = scan.best_t;
        }
    }
    if (!best_fam) throw search_error("width optimizer: no supporting families");
    WidthExtremum out;
    out.witness = width_given_h(body, best_fam->at(best_t), opts);
    out.value = out.witness.value;
    out.global_certified = true;
    return out;
}

} // namespace

SupportExtrema support_sinh(const ConvexBody& body, const LVec& u_in, double tie_tol) {
    const LVec u = normalize_spacelike(u_in);
    std::vector<Candidate> maxc, minc;
    if (body.kind == ConvexBody::Kind::polytope) {
        for (const HPoint& v : body.vertices) {
            const double s = lorentz_dot(v.coords, u);
            maxc.push_back({s, v});
            minc.push_back({s, v});
        }
    } else {
        for (const HPoint& c : body.corners) {
            const double s = lorentz_dot(c.coords, u);
            maxc.push_back({s, c});
            minc.push_back({s, c});
        }
        for (const CircArc& arc : body.arcs)
            arc_support_candidates(arc, u, maxc, minc);
    }
    SupportExtrema out;
    out.max_value = -std::numeric_limits<double>::infinity();
    out.min_value = std::numeric_limits<double>::infinity();
    for (const Candidate& c : maxc) out.max_value = std::max(out.max_value, c.value);
    for (const Candidate& c : minc) out.min_value = std::min(out.min_value, c.value);
    auto dedup_push = [](std::vector<HPoint>& set, const HPoint& p) {
        for (const HPoint& q : set)
            if (dist(p, q) < 1e-9) return;
        set.push_back(p);
    };
    for (const Candidate& c : maxc)
        if (c.value >= out.max_value - tie_tol) dedup_push(out.argmax, c.point);
    for (const Candidate& c : minc)
        if (c.value <= out.min_value + tie_tol) dedup_push(out.argmin, c.point);
    return out;
}

HPoint body_centroid(const ConvexBody& body) {
    LVec acc;
    auto add = [&](const HPoint& p) {
        if (acc.empty()) acc.assign(p.coords.size(), 0.0);
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += p.coords[i];
    };
    if (body.kind == ConvexBody::Kind::polytope) {
        for (const HPoint& v : body.vertices) add(v);
    } else {
        for (const HPoint& c : body.corners) add(c);
        for (const CircArc& a : body.arcs) add(a.point_at_fraction(0.5));
    }
    return HPoint::renormalized(std::move(acc));
}

Hyperplane supporting_hyperplane(const ConvexBody& body, const LVec& direction,
                                 const WidthOptions& opts) {
    LVec u = normalize_spacelike(direction);
    const HPoint b0 = body_centroid(body);
    // future timelike axis of the translate family
    LVec w = b0.coords;
    const double s0 = lorentz_dot_unchecked(b0.coords, u);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] -= s0 * u[i];
    w = normalize_timelike_future(std::move(w));
    auto member = [&](double mu) {
        const double ch = std::cosh(mu), sh = std::sinh(mu);
        LVec n(u.size());
        for (std::size_t i = 0; i < n.size(); ++i) n[i] = ch * u[i] + sh * w[i];
        return n;
    };
    auto fmin = [&](double mu) { return support_min_only(body, member(mu)); };
    // min support is strictly decreasing in mu
    double lo = 0.0, hi = 0.0;
    if (fmin(0.0) > 0.0) {
        hi = 1.0;
        while (fmin(hi) > 0.0) {
            lo = hi;
            hi *= 2.0;
            if (hi > 64.0) throw search_error("supporting_hyperplane: no bracket");
        }
    } else {
        lo = -1.0;
        while (fmin(lo) <= 0.0) {
            hi = lo;
            lo *= 2.0;
            if (lo < -64.0) throw search_error("supporting_hyperplane: no bracket");
        }
    }
    for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (fmin(mid) > 0.0) lo = mid; else hi = mid;
    }
    (void)opts;
    // pick the endpoint with the smaller violation
    const double vlo = std::abs(fmin(lo)), vhi = std::abs(fmin(hi));
    return Hyperplane::from_normal(normalize_spacelike(member(vlo <= vhi ? lo : hi)));
}

WidthWitness width_given_h(const ConvexBody& body, const Hyperplane& h,
                           const WidthOptions& opts) {
    const SupportExtrema ext = support_sinh(body, h.normal, opts.farthest_tie);
    const double min_dist = std::asinh(ext.min_value);
    if (std::abs(min_dist) > opts.support_tol)
        throw precondition_error("width_given_h: hyperplane does not support the body");
    WidthWitness w;
    w.plane = h;
    w.value = std::asinh(ext.max_value);
    w.surface = EquidistantSurface{h.normal, w.value};
    w.farthest = ext.argmax;
    for (const HPoint& p : ext.argmin)
        if (std::abs(std::asinh(lorentz_dot(p.coords, h.normal))) <= std::max(opts.contact_tol, opts.support_tol))
            w.contact.push_back(p);
    return w;
}

Hyperplane SupportingFamily::at(double t) const {
    if (kind == Kind::vertex_fan) {
        const double c = std::cos(t), s = std::sin(t);
        LVec u(f1.size());
        for (std::size_t i = 0; i < u.size(); ++i) u[i] = c * f1[i] + s * f2[i];
        return Hyperplane{std::move(u)};
    }
    return Hyperplane{normalize_spacelike(tangent_normal_of_arc(arc, t))};
}

HPoint SupportingFamily::contact_at(double t) const {
    if (kind == Kind::vertex_fan) return pivot;
    return arc.point_at_angle(t);
}

std::vector<SupportingFamily> supporting_families(const ConvexBody& body) {
    if (body.dim != 2)
        throw unsupported_error("supporting_families: H^2 only");
    std::vector<SupportingFamily> fams;
    auto make_fan = [&](const HPoint& pivot, const LVec& n_from, const LVec& n_to) {
        SupportingFamily fam;
        fam.kind = SupportingFamily::Kind::vertex_fan;
        fam.pivot = pivot;
        auto basis = tangent_basis(pivot);
        fam.f1 = std::move(basis[0]);
        fam.f2 = std::move(basis[1]);
        const double a0 = std::atan2(lorentz_dot(n_from, fam.f2), lorentz_dot(n_from, fam.f1));
        const double a1 = std::atan2(lorentz_dot(n_to, fam.f2), lorentz_dot(n_to, fam.f1));
        double delta = wrap_angle(a1 - a0);
        if (delta > kPi) { // take the short side: swept fans at convex corners are < pi
            fam.t0 = a1;
            fam.t1 = a1 + (kTwoPi - delta);
        } else {
            fam.t0 = a0;
            fam.t1 = a0 + delta;
        }
        if (fam.span() < 1e-12) return; // collinear neighbors, nothing to sweep
        // orientation check at the midpoint: the body must sit on the
        // nonnegative side, otherwise sweep the complementary arc
        const double mid = 0.5 * (fam.t0 + fam.t1);
        if (support_min_only(body, fam.at(mid).normal) < -1e-7) {
            const double nt0 = fam.t1;
            fam.t1 = fam.t0 + kTwoPi;
            fam.t0 = nt0;
        }
        fams.push_back(std::move(fam));
    };

    if (body.kind == ConvexBody::Kind::polytope) {
        const int m = static_cast<int>(body.vertices.size());
        for (int i = 0; i < m; ++i) {
            const Hyperplane prev = edge_line(body, (i - 1 + m) % m);
            const Hyperplane next = edge_line(body, i);
            make_fan(body.vertices[i], prev.normal, next.normal);
        }
        return fams;
    }
    const int m = static_cast<int>(body.arcs.size());
    for (int i = 0; i < m; ++i) {
        SupportingFamily fam;
        fam.kind = SupportingFamily::Kind::arc_tangent;
        fam.arc = body.arcs[i];
        fam.t0 = body.arcs[i].t0;
        fam.t1 = body.arcs[i].t1;
        fams.push_back(std::move(fam));
        if (!body.corners.empty()) {
            const CircArc& cur = body.arcs[i];
            const CircArc& nxt = body.arcs[(i + 1) % m];
            const LVec n_from = normalize_spacelike(tangent_normal_of_arc(cur, cur.t1));
            const LVec n_to = normalize_spacelike(tangent_normal_of_arc(nxt, nxt.t0));
            make_fan(body.corners[i], n_from, n_to);
        }
    }
    return fams;
}

WidthExtremum thickness(const ConvexBody& body, const WidthOptions& opts) {
    if (body.dim == 2) return optimize_planar(body, opts, /*minimize=*/true);
    return optimize_highdim(body, opts, true);
}

WidthExtremum max_width(const ConvexBody& body, const WidthOptions& opts) {
    if (body.dim == 2) return optimize_planar(body, opts, /*minimize=*/false);
    return optimize_highdim(body, opts, false);
}

std::vector<ProfileSample> width_profile(const ConvexBody& body, int n,
                                         const WidthOptions& opts) {
    if (body.dim != 2) throw unsupported_error("width_profile: H^2 only");
    if (n < 8) throw contract_error("width_profile: need n >= 8");
    const auto families = supporting_families(body);
    double total = 0.0;
    for (const auto& f : families) total += f.span();
    std::vector<ProfileSample> out;
    out.reserve(n + families.size());
    double acc = 0.0;
    for (const auto& fam : families) {
        const int k = std::max(2, static_cast<int>(std::lround(n * fam.span() / total)));
        for (int i = 0; i < k; ++i) {
            const double t = fam.t0 + fam.span() * i / k;
            ProfileSample s;
            s.param = (acc + fam.span() * i / k) / total;
            s.plane = fam.at(t);
            s.width = std::asinh(support_max_only(body, s.plane.normal));
            out.push_back(std::move(s));
        }
        acc += fam.span();
    }
    (void)opts;
    return out;
}

double golden_min(const std::function<double(double)>& f, double lo, double hi,
                  double tol, double* arg) {
    const double gr = 0.6180339887498949;
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    while (hi - lo > tol) {
        if (f1 < f2) {
            hi = x2; x2 = x1; f2 = f1;
            x1 = hi - gr * (hi - lo); f1 = f(x1);
        } else {
            lo = x1; x1 = x2; f1 = f2;
            x2 = lo + gr * (hi - lo); f2 = f(x2);
        }
    }
    const double xm = 0.5 * (lo + hi);
    const double fm = f(xm);
    if (arg) *arg = xm;
    return fm;
}

double golden_max(const std::function<double(double)>& f, double lo, double hi,
                  double tol, double* arg) {
    auto neg = [&](double t) { return -f(t); };
    double a = 0.0;
    const double v = golden_min(neg, lo, hi, tol, &a);
    if (arg) *arg = a;
    return -v;
}

} // namespace hconvex
