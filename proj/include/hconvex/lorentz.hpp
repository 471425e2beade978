#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "hconvex/error.hpp"

// Hyperboloid-model primitives.
//
// H^d is realized as the future sheet { x : <x,x> = -1, x0 > 0 } in
// (d+1)-dimensional Lorentzian space with pairing
//     <x,y> = -x0*y0 + x1*y1 + ... + xd*yd.
// Totally geodesic hyperplanes are zero sets of unit spacelike normals,
// distances and projections are closed-form bilinear expressions, and the
// Klein map turns geodesic convexity into linear convexity.

namespace hconvex {

using LVec = std::vector<double>;

inline constexpr double kOnSheetTol    = 1e-12; // invariant check tolerance
inline constexpr double kRejectTol     = 1e-9;  // inputs farther off-sheet are rejected
inline constexpr double kBranchClampTol = 1e-12; // arcosh/arsinh branch clamping

double lorentz_dot(const LVec& x, const LVec& y);

// -x0*y0 contribution only; handy when composing products.
inline double lorentz_dot_unchecked(const LVec& x, const LVec& y) {
    double s = -x[0] * y[0];
    for (std::size_t i = 1; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

// A point of H^d: future-pointing unit timelike vector.
struct HPoint {
    LVec coords;

    int dim() const { return static_cast<int>(coords.size()) - 1; }

    // Validates the self-pairing and sheet, renormalizing small drift.
    static HPoint from_coords(LVec c);

    // Trusted constructor for internally generated values; renormalizes.
    static HPoint renormalized(LVec c);
};

inline double lorentz_dot(const HPoint& p, const HPoint& q) {
    return lorentz_dot(p.coords, q.coords);
}

// Oriented totally geodesic hyperplane { x : <x,u> = 0 }.
// Convention: a body attached to the hyperplane lies on the side <x,u> >= 0.
struct Hyperplane {
    LVec normal; // unit spacelike

    int dim() const { return static_cast<int>(normal.size()) - 1; }

    static Hyperplane from_normal(LVec u);

    Hyperplane flipped() const;
};

// Locus { x on sheet : <x,normal> = sinh(offset) }, offset > 0.
// Not totally geodesic; it is the boundary at fixed distance `offset`
// on the nonnegative side of the hyperplane with the same normal.
struct EquidistantSurface {
    LVec normal;
    double offset = 0.0;

    static EquidistantSurface make(LVec u, double offset);
};

struct GeodesicSegment {
    HPoint p;
    HPoint q;

    double length() const;
    // s in [0, length()], arclength parametrization from p.
    HPoint point_at(double s) const;
};

// Hyperbolic distance arcosh(-<p,q>), clamped near the branch point.
double dist(const HPoint& p, const HPoint& q);

// arsinh(<p, normal>); positive on the body side of H.
double signed_dist(const HPoint& p, const Hyperplane& h);

enum class PlaneRelation { intersecting, parallel, ultraparallel };

struct PlaneClassification {
    PlaneRelation relation;
    double distance; // > 0 only for ultraparallel pairs
};

PlaneClassification classify_hyperplanes(const Hyperplane& h1, const Hyperplane& h2);

// Orthogonal projection onto H; returns p itself when p lies on H.
HPoint project_onto(const HPoint& p, const Hyperplane& h);

// Fourth-side relation of a quadrilateral with three right angles:
// legs a and b meeting at a right angle, returns arsinh(sinh a * cosh b),
// the distance from the far end of leg b to the line erected orthogonally
// at the far end of leg a.
double lambert_height(double a, double b);

// Klein (projective) coordinates: p -> (p1/p0, ..., pd/p0), |y| < 1.
LVec klein(const HPoint& p);
HPoint klein_inv(const LVec& y);

// Unit tangent at p pointing toward q. Requires p != q.
LVec unit_tangent(const HPoint& p, const HPoint& q);

// cosh(s) p + sinh(s) w for a unit spacelike tangent w at p.
HPoint geodesic_point(const HPoint& p, const LVec& tangent, double s);

// Orthonormal spacelike basis of the tangent space at p (d vectors).
// Deterministic; for d = 2 the pair (e1, e2) is oriented so that the
// angular parametrization around p runs counterclockwise in Klein view.
std::vector<LVec> tangent_basis(const HPoint& p);

// d = 2 only: vector n with <n,z> = det[x; y; z]; Lorentz-orthogonal to x, y.
LVec lorentz_cross(const LVec& x, const LVec& y);

// Normalizations. Throw invalid_point_error when the causal type is wrong.
LVec normalize_spacelike(LVec v);
LVec normalize_timelike_future(LVec v);

// Linear isometry of the hyperboloid model: a Lorentz matrix, stored
// row-major, that preserves the pairing and the future sheet.
struct LorentzMap {
    int n = 0; // (d+1)
    std::vector<double> m; // n*n, row-major

    LVec apply(const LVec& v) const;
    HPoint apply(const HPoint& p) const;
    Hyperplane apply(const Hyperplane& h) const;
};

// Deterministic pseudo-random source. Distribution helpers are hand-rolled
// on top of the mt19937_64 stream so results are identical on any platform.
struct Rng {
    explicit Rng(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next_u64();
    double uniform();                       // [0, 1)
    double uniform(double lo, double hi);
    double normal();                        // standard Gaussian
    int uniform_int(int lo, int hi);        // inclusive bounds

private:
    std::uint64_t state;
    bool have_spare = false;
    double spare = 0.0;
};

// Random orthochronous Lorentz map (Gram-Schmidt on a random frame).
LorentzMap random_isometry(int d, Rng& rng);

} // namespace hconvex
