#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hconvex/lorentz.hpp"

// Convex bodies: V-polytopes in H^d and arc-polygons in H^2.
//
// Arc-polygons cover intersections of congruent balls (single disk, lens,
// Reuleaux-type bodies, ball hulls of finite samples): the boundary is a
// cyclic chain of outward-bulging circular arcs and the body equals the
// intersection of the arcs' disks.

namespace hconvex {

// Circular arc in H^2, parametrized x(t) = cosh(radius) center + sinh(radius) E(t)
// with E(t) = cos(t) e1 + sin(t) e2 in an oriented frame of center's tangent
// space. t runs over [t0, t1], increasing t moves counterclockwise; a full
// circle has t1 - t0 = 2*pi and start == end.
struct CircArc {
    HPoint center;
    double radius = 0.0;
    HPoint start;
    HPoint end;
    LVec e1, e2;
    double t0 = 0.0, t1 = 0.0;

    bool full() const { return t1 - t0 >= 6.283185307179586 - 1e-12; }
    double angular_span() const { return t1 - t0; }
    HPoint point_at_angle(double t) const;
    HPoint point_at_fraction(double f) const; // f in [0,1]

    static CircArc from_angles(const HPoint& center, double radius, double t0, double t1);
};

struct Ball {
    HPoint center;
    double radius = 0.0;

    static Ball make(HPoint center, double radius);
};

struct ConvexBody {
    enum class Kind { polytope, arc_polygon };

    Kind kind = Kind::polytope;
    int dim = 2;
    std::vector<HPoint> vertices; // polytope: extreme points (H^2: ccw order)
    std::vector<HPoint> corners;  // arc-polygon corners, ccw (empty for a disk)
    std::vector<CircArc> arcs;    // arc-polygon boundary, ccw chained

    bool is_polytope() const { return kind == Kind::polytope; }
};

// angle of x in the frame of an arc's center (x assumed on that circle)
double angle_in_frame(const HPoint& center, const LVec& e1, const LVec& e2, const HPoint& x);

// ----- constructors -------------------------------------------------------

// Convex hull of the given points; keeps extreme points only. H^2 input is
// canonicalized counterclockwise. Throws degeneracy_error when the hull is
// not full-dimensional.
ConvexBody make_polytope(const std::vector<HPoint>& points);

// Convex hull of two perpendicular segments through a common midpoint at
// (1,0,0): half-lengths a (short) and b (long). Vertices in ccw order:
//   0: (cosh a,  sinh a, 0)   short-axis endpoint
//   1: (cosh b,  0,  sinh b)  long-axis endpoint
//   2: (cosh a, -sinh a, 0)
//   3: (cosh b,  0, -sinh b)
ConvexBody make_rhombus(double a, double b);

// Convex hull of d perpendicular segments through (1,0,...,0); 2d vertices.
ConvexBody make_crosspolytope(const std::vector<double>& half_lengths);

// Regular n-gon with circumradius r about (1,0,0).
ConvexBody make_regular_polygon(int n, double circumradius);

// Disk of the given radius as a single full-circle arc-polygon.
ConvexBody make_ball_body(const HPoint& center, double radius);

// Intersection of congruent balls of radius delta about the centers (H^2).
// Throws emptiness_error when the intersection has no interior.
ConvexBody ball_intersection(const std::vector<HPoint>& centers, double delta);

// ----- queries ------------------------------------------------------------

bool contains(const ConvexBody& body, const HPoint& p, double tol);

struct DiameterResult {
    double value = 0.0;
    HPoint a, b; // witness pair
};

DiameterResult diameter(const ConvexBody& body);

struct ExtremePoints {
    std::vector<HPoint> points;     // vertices / corners
    bool arcs_all_extreme = false;  // arc-polygon: every boundary point is extreme
};

ExtremePoints extreme_points(const ConvexBody& body);

// n roughly-uniform boundary points (vertices/corners always included).
std::vector<HPoint> boundary_samples(const ConvexBody& body, int n);

// 0 inside the body, otherwise hyperbolic distance to the boundary.
double dist_to_body(const ConvexBody& body, const HPoint& p);

struct FarthestResult {
    double value = 0.0;
    HPoint point;
};

// max_{x in body} dist(x, p) and a realizing point.
FarthestResult farthest_in_body(const ConvexBody& body, const HPoint& p);

// Unit outward tangent direction at a boundary point (edge/arc normal,
// averaged at vertices and corners).
LVec outward_direction(const ConvexBody& body, const HPoint& boundary_point);

// Oriented geodesic line through vertices i -> i+1 of an H^2 polygon,
// body on the nonnegative side.
Hyperplane edge_line(const ConvexBody& body, int edge_index);

// H^2 polygon cut by a half-plane (keeps the side <x,u> >= 0).
// Throws emptiness_error when nothing full-dimensional remains.
ConvexBody clip_polygon(const ConvexBody& body, const Hyperplane& h);

// Intersection points of two circles (0, 1 or 2 points).
std::vector<HPoint> circle_intersection(const HPoint& c1, double r1,
                                        const HPoint& c2, double r2);

// geodesic midpoint
HPoint midpoint(const HPoint& p, const HPoint& q);

// Euclidean-straight segment test in Klein coordinates; a and b are the
// segment, p and q the other one.
bool segments_cross_klein(const LVec& a, const LVec& b, const LVec& p, const LVec& q);

} // namespace hconvex
