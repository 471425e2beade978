#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hconvex/body.hpp"
#include "hconvex/width.hpp"

// Structural classifiers and verification procedures: completeness,
// constant width, constant diameter, spindle-arc containment, the
// extreme-point dichotomy, and the reduced-body cap probe.

namespace hconvex {

enum class DichotomyCase { on_hyperplane, on_equidistant, both };

struct DichotomyReport {
    HPoint extreme_point;
    bool found = false;
    Hyperplane plane;                 // a thickness-realizing supporting line
    DichotomyCase which = DichotomyCase::on_hyperplane;
    StripSpec strip;
    double residual = 0.0;            // 0 when found, best miss otherwise
};

struct CompletenessReport {
    double diameter_value = 0.0;
    bool is_complete = false;
    std::optional<HPoint> violating_point; // present iff not complete
    double ball_hull_residual = 0.0;       // test A residual
    bool outward_probe_ok = false;         // test B verdict
};

struct SpindleCheckReport {
    bool pass = false;
    double worst_residual = 0.0;
    int arcs_checked = 0;
};

struct ConstantWidthReport {
    bool is_constant = false;
    double width = 0.0;      // mean profile width
    double spread = 0.0;     // max - min of the profile
    bool approximate = false; // d >= 3 direction sampling instead of the exact sweep
};

struct Theorem2Report {
    CompletenessReport completeness;
    ConstantWidthReport constant_width;
    bool forward_ok = false;  // complete  =>  constant width, matching value
    bool converse_ok = false; // constant width  =>  complete
    bool consistent = false;  // both directions hold (vacuously or not)
};

struct UniqueContactReport {
    int cluster_count = 0;
    double spread = 0.0; // diameter of the farthest set
};

struct ReducedVertexDetail {
    DichotomyReport dichotomy;
    double cap_decrease = 0.0;
    bool cap_ok = false;
};

struct ReducedProbeReport {
    bool passes_necessary = false;
    bool cap_test = false;
    bool reduced_consistent = false; // heuristic verdict, not a proof
    std::vector<ReducedVertexDetail> details;
};

struct ThresholdScanReport {
    bool found = false;
    double b_star = 0.0;
    double resolution = 0.0;
    bool monotone = false;
    double reading_half = 0.0;      // arsinh(sinh a cosh 2a), lambda = half-length
    double reading_full = 0.0;      // arsinh(sinh 2a cosh 4a)/2, lambda = full length
    std::string matching_reading;   // "half", "full" or "none"
    double thickness_at_bstar = 0.0;
    double lambert_at_bstar = 0.0;
    std::vector<std::pair<double, bool>> grid; // (b, reduced-consistent)
};

// Arc of the radius-delta circle about c subtended by the cone over the
// segment ab; requires dist(c,a) = dist(c,b) = delta. a and b are endpoints.
CircArc piece_circle(const HPoint& c, const HPoint& a, const HPoint& b, double delta);

// Samples point pairs (a,b) inside the body, takes every circle-intersection
// center c with dist(c,a) = dist(c,b) = delta and checks the subtended arcs
// stay inside the body within tol.
SpindleCheckReport lemma_spindle_check(const ConvexBody& body, double delta,
                                       int samples, std::uint64_t seed,
                                       double tol = 1e-8);

// Two-criterion completeness test at delta = diameter(body):
//   A. the ball hull of a dense boundary sample coincides with the body;
//   B. every slightly-outward offset of a boundary point raises the diameter.
CompletenessReport is_complete(const ConvexBody& body, double tol = 1e-6,
                               int boundary_n = 4096);

// Cluster count of the farthest set of width_given_h (complete bodies are
// expected to give exactly one cluster).
UniqueContactReport claim_unique_contact(const ConvexBody& body, const Hyperplane& h,
                                         double cluster_radius = 1e-6);

ConstantWidthReport is_constant_width(const ConvexBody& body, double tol = 1e-6,
                                      int profile_n = 4096);

// Every boundary sample has a partner in the body at distance delta +- tol.
bool is_constant_diameter(const ConvexBody& body, double delta, double tol,
                          int samples = 2048);

Theorem2Report theorem2_pipeline(const ConvexBody& body, double tol = 1e-6);

// Searches thickness-realizing supporting lines for one passing through e
// (case on_hyperplane) or having e on its equidistant surface (on_equidistant).
DichotomyReport extreme_point_dichotomy(const ConvexBody& body, const HPoint& e,
                                        double tol = 1e-6);

// Heuristic reducedness classifier: the dichotomy must succeed at every
// extreme point and truncating any vertex must strictly decrease thickness.
ReducedProbeReport reduced_probe(const ConvexBody& body, double eps_cap = 5e-3,
                                 double tol = 1e-7);

// Locates the b at which reduced_probe flips for rhombi with fixed short
// half-axis a, and compares it against both readings of the closed-form
// threshold candidate.
ThresholdScanReport rhombus_threshold_scan(double a, double b_lo, double b_hi,
                                           int steps);

// Seeded convex polygon with vertex count in [min_v, max_v], Klein radius bound.
ConvexBody random_klein_polygon(Rng& rng, int min_v = 5, int max_v = 12,
                                double radius = 0.9);

// Reuleaux-type body: intersection of three congruent disks of radius delta
// centered at the vertices of an equilateral triangle of side delta.
ConvexBody make_reuleaux(double delta);

} // namespace hconvex
