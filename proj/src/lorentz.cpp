#include "hconvex/lorentz.hpp"

#include <algorithm>
#include <cmath>

namespace hconvex {

double lorentz_dot(const LVec& x, const LVec& y) {
    if (x.size() != y.size() || x.size() < 3)
        throw contract_error("lorentz_dot: vectors must have equal length d+1 >= 3");
    return lorentz_dot_unchecked(x, y);
}

HPoint HPoint::from_coords(LVec c) {
    if (c.size() < 3) throw contract_error("HPoint: need at least 3 coordinates");
    const double s = lorentz_dot_unchecked(c, c);
    if (std::abs(s + 1.0) > kRejectTol)
        throw invalid_point_error("HPoint: self-pairing deviates from -1 beyond tolerance");
    if (c[0] <= 0.0)
        throw invalid_point_error("HPoint: not on the future sheet");
    return renormalized(std::move(c));
}

HPoint HPoint::renormalized(LVec c) {
    const double s = lorentz_dot_unchecked(c, c);
    if (!(s < 0.0)) throw invalid_point_error("HPoint: vector is not timelike");
    const double f = 1.0 / std::sqrt(-s);
    for (double& v : c) v *= f;
    if (c[0] < 0.0)
        throw invalid_point_error("HPoint: not on the future sheet");
    return HPoint{std::move(c)};
}

Hyperplane Hyperplane::from_normal(LVec u) {
    if (u.size() < 3) throw contract_error("Hyperplane: need at least 3 coordinates");
    const double s = lorentz_dot_unchecked(u, u);
    if (!(s > 0.0))
        throw invalid_point_error("Hyperplane: normal must be spacelike");
    if (std::abs(s - 1.0) > kRejectTol)
        throw invalid_point_error("Hyperplane: normal deviates from unit norm beyond tolerance");
    const double f = 1.0 / std::sqrt(s);
    for (double& v : u) v *= f;
    return Hyperplane{std::move(u)};
}

Hyperplane Hyperplane::flipped() const {
    LVec u = normal;
    for (double& v : u) v = -v;
    return Hyperplane{std::move(u)};
}

EquidistantSurface EquidistantSurface::make(LVec u, double offset) {
    if (!(offset > 0.0))
        throw domain_error("EquidistantSurface: offset must be positive");
    Hyperplane h = Hyperplane::from_normal(std::move(u));
    return EquidistantSurface{std::move(h.normal), offset};
}

double dist(const HPoint& p, const HPoint& q) {
    // chord form of arcosh(-<p,q>): the difference vector is spacelike with
    // <p-q, p-q> = 2(c - 1), which is stable for nearby points where the
    // direct arcosh loses half the digits
    if (p.coords.size() != q.coords.size())
        throw contract_error("dist: dimension mismatch");
    if (-lorentz_dot_unchecked(p.coords, q.coords) < 1.0 - kRejectTol)
        throw invalid_point_error("dist: pairing below 1, inputs are off the sheet");
    LVec d(p.coords.size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = p.coords[i] - q.coords[i];
    double q2 = lorentz_dot_unchecked(d, d); // = 2(c - 1)
    if (q2 < 0.0) q2 = 0.0;
    return 2.0 * std::asinh(0.5 * std::sqrt(q2));
}

double signed_dist(const HPoint& p, const Hyperplane& h) {
    return std::asinh(lorentz_dot(p.coords, h.normal));
}

PlaneClassification classify_hyperplanes(const Hyperplane& h1, const Hyperplane& h2) {
    const double c = std::abs(lorentz_dot(h1.normal, h2.normal));
    if (std::abs(c - 1.0) <= kBranchClampTol)
        return {PlaneRelation::parallel, 0.0};
    if (c < 1.0)
        return {PlaneRelation::intersecting, 0.0};
    return {PlaneRelation::ultraparallel, std::acosh(c)};
}

HPoint project_onto(const HPoint& p, const Hyperplane& h) {
    const double s = lorentz_dot(p.coords, h.normal);
    LVec y = p.coords;
    for (std::size_t i = 0; i < y.size(); ++i) y[i] -= s * h.normal[i];
    // <y,y> = -(1 + s^2), always timelike.
    const double f = 1.0 / std::sqrt(1.0 + s * s);
    for (double& v : y) v *= f;
    return HPoint{std::move(y)};
}

double lambert_height(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw domain_error("lambert_height: legs must be positive");
    return std::asinh(std::sinh(a) * std::cosh(b));
}

LVec klein(const HPoint& p) {
    LVec y(p.coords.size() - 1);
    for (std::size_t i = 0; i + 1 < p.coords.size(); ++i)
        y[i] = p.coords[i + 1] / p.coords[0];
    return y;
}

HPoint klein_inv(const LVec& y) {
    double n2 = 0.0;
    for (double v : y) n2 += v * v;
    if (n2 >= 1.0)
        throw domain_error("klein_inv: point lies outside the unit ball");
    const double x0 = 1.0 / std::sqrt(1.0 - n2);
    LVec c(y.size() + 1);
    c[0] = x0;
    for (std::size_t i = 0; i < y.size(); ++i) c[i + 1] = x0 * y[i];
    return HPoint::renormalized(std::move(c));
}

LVec unit_tangent(const HPoint& p, const HPoint& q) {
    const double g = lorentz_dot(p.coords, q.coords); // <= -1
    LVec w(q.coords.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        w[i] = q.coords[i] + g * p.coords[i];
    const double n2 = g * g - 1.0;
    if (n2 <= 0.0)
        throw degeneracy_error("unit_tangent: endpoints coincide");
    const double f = 1.0 / std::sqrt(n2);
    for (double& v : w) v *= f;
    return w;
}

HPoint geodesic_point(const HPoint& p, const LVec& tangent, double s) {
    const double ch = std::cosh(s), sh = std::sinh(s);
    LVec c(p.coords.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = ch * p.coords[i] + sh * tangent[i];
    return HPoint::renormalized(std::move(c));
}

double GeodesicSegment::length() const { return dist(p, q); }

HPoint GeodesicSegment::point_at(double s) const {
    if (s == 0.0) return p;
    return geodesic_point(p, unit_tangent(p, q), s);
}

LVec lorentz_cross(const LVec& x, const LVec& y) {
    if (x.size() != 3 || y.size() != 3)
        throw contract_error("lorentz_cross: defined for ambient dimension 3 only");
    // n = G (x cross y) with G = diag(-1, 1, 1), so <n, z> = det[x; y; z].
    LVec e = {x[1] * y[2] - x[2] * y[1],
              x[2] * y[0] - x[0] * y[2],
              x[0] * y[1] - x[1] * y[0]};
    e[0] = -e[0];
    return e;
}

LVec normalize_spacelike(LVec v) {
    const double s = lorentz_dot_unchecked(v, v);
    if (!(s > 0.0))
        throw invalid_point_error("normalize_spacelike: vector is not spacelike");
    const double f = 1.0 / std::sqrt(s);
    for (double& x : v) x *= f;
    return v;
}

LVec normalize_timelike_future(LVec v) {
    const double s = lorentz_dot_unchecked(v, v);
    if (!(s < 0.0))
        throw invalid_point_error("normalize_timelike_future: vector is not timelike");
    const double f = 1.0 / std::sqrt(-s);
    for (double& x : v) x *= f;
    if (v[0] < 0.0) for (double& x : v) x = -x;
    return v;
}

std::vector<LVec> tangent_basis(const HPoint& p) {
    const int n = static_cast<int>(p.coords.size());
    std::vector<LVec> basis;
    basis.reserve(n - 1);
    // Lorentz Gram-Schmidt against p and the spacelike vectors found so far,
    // seeded with the standard basis.
    for (int seed = 1; seed < n && static_cast<int>(basis.size()) < n - 1; ++seed) {
        LVec v(n, 0.0);
        v[seed] = 1.0;
        // remove the timelike component: v -> v + <v,p> p  (since <p,p> = -1)
        const double vp = lorentz_dot_unchecked(v, p.coords);
        for (int i = 0; i < n; ++i) v[i] += vp * p.coords[i];
        for (const LVec& e : basis) {
            const double ve = lorentz_dot_unchecked(v, e);
            for (int i = 0; i < n; ++i) v[i] -= ve * e[i];
        }
        const double s = lorentz_dot_unchecked(v, v);
        if (s < 1e-14) continue; // seed nearly dependent, skip
        const double f = 1.0 / std::sqrt(s);
        for (double& x : v) x *= f;
        basis.push_back(std::move(v));
    }
    if (static_cast<int>(basis.size()) != n - 1)
        throw degeneracy_error("tangent_basis: failed to build a full frame");
    if (n == 3) {
        // orient so that increasing angle means counterclockwise in Klein view
        const LVec& a = basis[0];
        const LVec& b = basis[1];
        const double det =
            p.coords[0] * (a[1] * b[2] - a[2] * b[1]) -
            p.coords[1] * (a[0] * b[2] - a[2] * b[0]) +
            p.coords[2] * (a[0] * b[1] - a[1] * b[0]);
        if (det < 0.0) for (double& x : basis[1]) x = -x;
    }
    return basis;
}

LVec LorentzMap::apply(const LVec& v) const {
    LVec out(n, 0.0);
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += m[i * n + j] * v[j];
        out[i] = s;
    }
    return out;
}

HPoint LorentzMap::apply(const HPoint& p) const {
    return HPoint::renormalized(apply(p.coords));
}

Hyperplane LorentzMap::apply(const Hyperplane& h) const {
    return Hyperplane::from_normal(normalize_spacelike(apply(h.normal)));
}

std::uint64_t Rng::next_u64() {
    // splitmix64; small, seedable, and identical everywhere
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double Rng::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform();
}

double Rng::normal() {
    if (have_spare) {
        have_spare = false;
        return spare;
    }
    double u1 = uniform(), u2 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 6.283185307179586476925286766559 * u2;
    spare = r * std::sin(t);
    have_spare = true;
    return r * std::cos(t);
}

int Rng::uniform_int(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next_u64() % span);
}

LorentzMap random_isometry(int d, Rng& rng) {
    const int n = d + 1;
    // columns: one future timelike + d spacelike, Lorentz-orthonormal
    std::vector<LVec> cols;
    LVec t(n);
    double s2 = 0.0;
    for (int i = 1; i < n; ++i) {
        t[i] = 0.7 * rng.normal();
        s2 += t[i] * t[i];
    }
    t[0] = std::sqrt(1.0 + s2); // unit future timelike by construction
    cols.push_back(std::move(t));
    while (static_cast<int>(cols.size()) < n) {
        LVec v(n);
        for (int i = 0; i < n; ++i) v[i] = rng.normal();
        // subtract projections: onto timelike col (note sign), then spacelike
        const double vt = lorentz_dot_unchecked(v, cols[0]);
        for (int i = 0; i < n; ++i) v[i] += vt * cols[0][i];
        for (std::size_t k = 1; k < cols.size(); ++k) {
            const double ve = lorentz_dot_unchecked(v, cols[k]);
            for (int i = 0; i < n; ++i) v[i] -= ve * cols[k][i];
        }
        const double s = lorentz_dot_unchecked(v, v);
        if (s < 1e-10) continue; // unlucky draw, resample
        const double f = 1.0 / std::sqrt(s);
        for (double& x : v) x *= f;
        cols.push_back(std::move(v));
    }
    LorentzMap map;
    map.n = n;
    map.m.assign(n * n, 0.0);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            map.m[i * n + j] = cols[j][i];
    return map;
}

} // namespace hconvex
