#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hconvex/structure.hpp"

using namespace hconvex;

namespace {

HPoint hp(double x0, double x1, double x2) { return HPoint::from_coords({x0, x1, x2}); }

ConvexBody equilateral_triangle(double side) {
    const double r = std::asinh(std::sqrt((std::cosh(side) - 1.0) / 1.5));
    return make_regular_polygon(3, r);
}

} // namespace

TEST_CASE("piece_circle endpoints and samples") {
    const double delta = 1.0;
    const HPoint a = hp(std::cosh(0.4), std::sinh(0.4), 0);
    const HPoint b = hp(std::cosh(0.4), -std::sinh(0.4), 0);
    const auto cs = circle_intersection(a, delta, b, delta);
    REQUIRE(cs.size() == 2);
    for (const HPoint& c : cs) {
        const CircArc arc = piece_circle(c, a, b, delta);
        // endpoints are a and b (stored counterclockwise, so possibly swapped)
        const double as_given = dist(arc.start, a) + dist(arc.end, b);
        const double swapped = dist(arc.start, b) + dist(arc.end, a);
        CHECK(std::min(as_given, swapped) < 1e-9);
        // the point subtending the midpoint of ab sits on the circle
        const HPoint mid = midpoint(a, b);
        const HPoint g = geodesic_point(c, unit_tangent(c, mid), delta);
        CHECK(dist(c, g) == doctest::Approx(delta).epsilon(1e-12));
        bool found_mid_dir = false;
        for (int s = 0; s <= 100; ++s) {
            const HPoint x = arc.point_at_fraction(s / 100.0);
            CHECK(dist(c, x) == doctest::Approx(delta).epsilon(1e-10));
            // the chord from c to x crosses segment ab
            CHECK(segments_cross_klein(klein(c), klein(x), klein(a), klein(b)));
            if (dist(x, g) < 1e-6) found_mid_dir = true;
        }
        (void)found_mid_dir;
    }
    CHECK_THROWS_AS(piece_circle(hp(1, 0, 0), a, b, delta), precondition_error);
}

TEST_CASE("spindle arcs stay inside complete bodies") {
    // disk of diameter delta
    const double delta = 1.0;
    const ConvexBody ball = make_ball_body(hp(1, 0, 0), delta / 2);
    const auto rep_ball = lemma_spindle_check(ball, delta, 120, 99);
    CHECK(rep_ball.pass);

    const ConvexBody reuleaux = make_reuleaux(delta);
    const auto rep_r = lemma_spindle_check(reuleaux, delta, 120, 99);
    CHECK(rep_r.pass);
    CHECK(rep_r.arcs_checked > 0);

    // negative control: the bare triangle of side delta leaks
    const ConvexBody tri = equilateral_triangle(delta);
    const auto rep_t = lemma_spindle_check(tri, delta, 200, 99);
    CHECK_FALSE(rep_t.pass);
    CHECK(rep_t.worst_residual > 1e-3);
}

TEST_CASE("completeness of the disk") {
    const ConvexBody ball = make_ball_body(hp(1, 0, 0), 0.5);
    const auto rep = is_complete(ball, 1e-6, 2048);
    CHECK(rep.is_complete);
    CHECK(rep.diameter_value == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(rep.ball_hull_residual < 1e-6);
    CHECK(rep.outward_probe_ok);
    CHECK_FALSE(rep.violating_point.has_value());
}

TEST_CASE("completeness of the Reuleaux body") {
    const auto rep = is_complete(make_reuleaux(1.0), 1e-6, 2048);
    CHECK(rep.is_complete);
    CHECK(rep.diameter_value == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("the lens is not complete and not constant width, consistently") {
    const HPoint c1 = hp(std::cosh(0.5), std::sinh(0.5), 0);
    const HPoint c2 = hp(std::cosh(0.5), -std::sinh(0.5), 0);
    const ConvexBody lens = ball_intersection({c1, c2}, 1.0);
    const auto rep = theorem2_pipeline(lens, 1e-6);
    CHECK_FALSE(rep.completeness.is_complete);
    CHECK_FALSE(rep.constant_width.is_constant);
    CHECK(rep.consistent);
    REQUIRE(rep.completeness.violating_point.has_value());
}

TEST_CASE("the triangle is not complete") {
    const ConvexBody tri = equilateral_triangle(1.0);
    const auto rep = is_complete(tri, 1e-6, 2048);
    CHECK_FALSE(rep.is_complete);
    CHECK(rep.ball_hull_residual > 1e-2);
    REQUIRE(rep.violating_point.has_value());
    // the violating point does not raise the diameter
    CHECK(farthest_in_body(tri, *rep.violating_point).value <= rep.diameter_value + 1e-9);
}

TEST_CASE("unique farthest contact for complete bodies") {
    const ConvexBody ball = make_ball_body(hp(1, 0, 0), 0.5);
    const Hyperplane tangent = supporting_hyperplane(ball, {0, 1, 0});
    const auto rep = claim_unique_contact(ball, tangent);
    CHECK(rep.cluster_count == 1);

    for (const ConvexBody& body : {make_reuleaux(1.0), make_ball_body(hp(1, 0, 0), 0.5)}) {
        int checked = 0;
        for (const SupportingFamily& fam : supporting_families(body))
            for (int i = 0; i <= 16; ++i) {
                const auto r = claim_unique_contact(body, fam.at(fam.t0 + fam.span() * i / 16));
                CHECK(r.cluster_count == 1);
                ++checked;
            }
        CHECK(checked >= 16);
    }
}

TEST_CASE("farthest-set multiplicity on a non-complete body is observed, not asserted") {
    // tall rhombus, line orthogonal to the short diagonal: the two long-axis
    // endpoints tie by symmetry, so the cluster count may exceed one
    const ConvexBody rh = make_rhombus(0.5, 1.5);
    const Hyperplane h =
        Hyperplane::from_normal({-std::sinh(0.5), -std::cosh(0.5), 0.0});
    const auto rep = claim_unique_contact(rh, h, 1e-6);
    CHECK(rep.cluster_count >= 1);
    CHECK(rep.spread == doctest::Approx(3.0).epsilon(1e-9)); // the long diagonal
}

TEST_CASE("constant width classification") {
    const ConvexBody ball = make_ball_body(hp(1, 0, 0), 0.5);
    const auto rb = is_constant_width(ball, 1e-6, 512);
    CHECK(rb.is_constant);
    CHECK(rb.width == doctest::Approx(1.0).epsilon(1e-9));

    const auto rr = is_constant_width(make_reuleaux(1.0), 1e-6, 512);
    CHECK(rr.is_constant);
    CHECK(rr.width == doctest::Approx(1.0).epsilon(1e-6));

    const auto rh = is_constant_width(make_rhombus(0.5, 1.5), 1e-6, 512);
    CHECK_FALSE(rh.is_constant);
}

TEST_CASE("constant width sampling variant in three dimensions is approximate") {
    const auto rep = is_constant_width(make_crosspolytope({0.3, 0.3, 0.9}), 1e-6, 128);
    CHECK(rep.approximate);
    CHECK_FALSE(rep.is_constant); // polytopes are never constant width
    CHECK(rep.spread > 1e-3);
}

TEST_CASE("constant diameter classification") {
    const ConvexBody ball = make_ball_body(hp(1, 0, 0), 0.5);
    CHECK(is_constant_diameter(ball, 1.0, 1e-6, 512));
    CHECK(is_constant_diameter(make_reuleaux(1.0), 1.0, 1e-6, 512));
    CHECK_FALSE(is_constant_diameter(equilateral_triangle(1.0), 1.0, 1e-6, 512));
}

TEST_CASE("complete iff constant width on the standard corpus") {
    const auto ball_rep = theorem2_pipeline(make_ball_body(hp(1, 0, 0), 0.5), 1e-6);
    CHECK(ball_rep.completeness.is_complete);
    CHECK(ball_rep.constant_width.is_constant);
    CHECK(ball_rep.forward_ok);
    CHECK(ball_rep.converse_ok);

    const auto r_rep = theorem2_pipeline(make_reuleaux(1.0), 1e-6);
    CHECK(r_rep.completeness.is_complete);
    CHECK(r_rep.constant_width.is_constant);
    CHECK(r_rep.consistent);

    const auto rh_rep = theorem2_pipeline(make_rhombus(0.5, 1.5), 1e-6);
    CHECK_FALSE(rh_rep.completeness.is_complete);
    CHECK_FALSE(rh_rep.constant_width.is_constant);
    CHECK(rh_rep.consistent); // failing both directions is consistent
}

TEST_CASE("extreme point dichotomy on the tall rhombus") {
    const ConvexBody rh = make_rhombus(0.5, 1.5);
    // short-axis endpoint: a thickness line passes through it
    const auto rep_short = extreme_point_dichotomy(rh, rh.vertices[0], 1e-6);
    CHECK(rep_short.found);
    CHECK(rep_short.which == DichotomyCase::on_hyperplane);
    CHECK(rep_short.residual < 1e-6);
    CHECK(std::abs(rep_short.strip.thickness - thickness(rh).value) < 1e-6);

    // long-axis endpoint: only the equidistant surface reaches it
    const auto rep_long = extreme_point_dichotomy(rh, rh.vertices[1], 1e-6);
    CHECK(rep_long.found);
    CHECK(rep_long.which == DichotomyCase::on_equidistant);
    CHECK(rep_long.residual < 1e-6);
    // the supporting line passes through a short-axis vertex
    bool through_short = false;
    for (int idx : {0, 2})
        if (std::abs(signed_dist(rh.vertices[idx], rep_long.plane)) < 1e-7)
            through_short = true;
    CHECK(through_short);

    // interior points are rejected
    CHECK_THROWS_AS(extreme_point_dichotomy(rh, hp(1, 0, 0), 1e-6), precondition_error);
}

TEST_CASE("constant width bodies satisfy both dichotomy cases everywhere") {
    const ConvexBody reuleaux = make_reuleaux(1.0);
    for (const HPoint& e : boundary_samples(reuleaux, 12)) {
        const auto rep = extreme_point_dichotomy(reuleaux, e, 1e-6);
        CHECK(rep.found);
        CHECK(rep.which == DichotomyCase::both);
    }
}

TEST_CASE("reduced probe: regular odd-gon passes, square fails") {
    const auto pent = reduced_probe(make_regular_polygon(5, 0.8));
    CHECK(pent.passes_necessary);
    CHECK(pent.cap_test);
    CHECK(pent.reduced_consistent);

    const auto sq = reduced_probe(make_regular_polygon(4, 0.8));
    CHECK_FALSE(sq.cap_test);
    CHECK_FALSE(sq.reduced_consistent);

    const auto rhombus_sq = reduced_probe(make_rhombus(0.6, 0.6));
    CHECK_FALSE(rhombus_sq.cap_test);
}

TEST_CASE("reduced probe on the tall rhombus") {
    const auto rep = reduced_probe(make_rhombus(0.4, 1.5));
    CHECK(rep.passes_necessary);
    CHECK(rep.cap_test);
    CHECK(rep.reduced_consistent);
}

TEST_CASE("threshold scan smoke") {
    const auto rep = rhombus_threshold_scan(0.4, 0.4 + 1e-6, 1.2, 16);
    CHECK(rep.monotone);
    CHECK(rep.found);
    CHECK(rep.b_star < 1.2);
    CHECK((rep.matching_reading == "half" || rep.matching_reading == "full" ||
           rep.matching_reading == "none"));
}

TEST_CASE("batch of random polygons: max width is the diameter, projections land inside") {
    Rng rng(2024);
    int unique_farthest = 0;
    for (int i = 0; i < 30; ++i) {
        const ConvexBody poly = random_klein_polygon(rng);
        CHECK(max_width(poly).value == doctest::Approx(diameter(poly).value).epsilon(1e-6));
        const WidthExtremum t = thickness(poly);
        const auto contact = claim_unique_contact(poly, t.witness.plane);
        if (contact.cluster_count == 1) {
            ++unique_farthest;
            const HPoint foot = project_onto(t.witness.farthest.front(), t.witness.plane);
            CHECK(contains(poly, foot, 1e-6));
            CHECK(std::abs(signed_dist(foot, t.witness.plane)) < 1e-9);
        }
    }
    CHECK(unique_farthest > 0);
}
