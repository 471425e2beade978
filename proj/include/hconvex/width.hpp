#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hconvex/body.hpp"
#include "hconvex/lorentz.hpp"

// Width machinery.
//
// The width of a body determined by a supporting hyperplane H is the distance
// from H to the nearest equidistant surface whose strip contains the body;
// along a fixed normal u that is arsinh of the support maximum of <., u>.
// Thickness minimizes this over supporting hyperplanes, max width maximizes.
// In H^2 the supporting lines form one-parameter families (vertex and corner
// fans, arc tangents) whose union is swept exactly; in higher dimension the
// optimizers are multistart local searches and results are labeled best-found.

namespace hconvex {

struct SupportExtrema {
    double max_value = 0.0;
    std::vector<HPoint> argmax;
    double min_value = 0.0;
    std::vector<HPoint> argmin;
};

// Extrema of <x, u> over the body (u unit spacelike). Ties within tie_tol
// (in the sinh scale) are all reported.
SupportExtrema support_sinh(const ConvexBody& body, const LVec& u, double tie_tol = 1e-8);

struct WidthWitness {
    Hyperplane plane;
    double value = 0.0;              // width determined by plane
    std::vector<HPoint> farthest;    // points realizing the width
    EquidistantSurface surface;      // same normal, offset = value
    std::vector<HPoint> contact;     // body points on the plane
};

struct StripSpec {
    Hyperplane plane;
    EquidistantSurface surface;
    double thickness = 0.0;
};

struct WidthOptions {
    double support_tol = 1e-9;   // how far from supporting a plane may be (sinh scale)
    double farthest_tie = 1e-8;  // width-value tie tolerance for the farthest set
    double contact_tol = 1e-9;
    int coarse_grid = 257;       // per-family scan resolution in H^2
    int multistart = 64;         // starts for d >= 3
    std::uint64_t seed = 1234567;
};

// Interior reference point (normalized vertex/corner mean).
HPoint body_centroid(const ConvexBody& body);

// The member of the translate family of `direction` (hyperplanes orthogonal
// to the geodesic through the body centroid) whose support minimum is zero;
// the body ends up on the nonnegative side.
Hyperplane supporting_hyperplane(const ConvexBody& body, const LVec& direction,
                                 const WidthOptions& opts = {});

// Width determined by a supporting hyperplane. Throws precondition_error
// when h does not support the body within opts.support_tol.
WidthWitness width_given_h(const ConvexBody& body, const Hyperplane& h,
                           const WidthOptions& opts = {});

struct WidthExtremum {
    double value = 0.0;
    WidthWitness witness;
    bool global_certified = false; // true for the exact H^2 family sweep
    int starts_used = 0;           // multistart count in d >= 3
};

WidthExtremum thickness(const ConvexBody& body, const WidthOptions& opts = {});
WidthExtremum max_width(const ConvexBody& body, const WidthOptions& opts = {});

struct ProfileSample {
    double param = 0.0; // cumulative boundary-contact parameter in [0, 1)
    double width = 0.0;
    Hyperplane plane;
};

// n supporting lines swept by boundary contact (H^2 only, n >= 8).
std::vector<ProfileSample> width_profile(const ConvexBody& body, int n,
                                         const WidthOptions& opts = {});

// ----- supporting-line families (H^2) --------------------------------------

// One-parameter family of supporting lines attached to a boundary feature.
struct SupportingFamily {
    enum class Kind { vertex_fan, arc_tangent };
    Kind kind = Kind::vertex_fan;

    // vertex_fan: lines through pivot with normal cos(t) f1 + sin(t) f2
    HPoint pivot;
    LVec f1, f2;

    // arc_tangent: tangent lines of this arc
    CircArc arc;

    double t0 = 0.0, t1 = 0.0;

    Hyperplane at(double t) const;
    // Boundary contact of the line at parameter t.
    HPoint contact_at(double t) const;
    double span() const { return t1 - t0; }
};

// Families in boundary order; their union covers every supporting line
// (edge lines appear as fan endpoints).
std::vector<SupportingFamily> supporting_families(const ConvexBody& body);

// ----- 1-d refinement helpers ----------------------------------------------

double golden_min(const std::function<double(double)>& f, double lo, double hi,
                  double tol, double* arg = nullptr);
double golden_max(const std::function<double(double)>& f, double lo, double hi,
                  double tol, double* arg = nullptr);

} // namespace hconvex
