// Command-line front end: body construction, measurements, verification
// suites, and plot/data emission.

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <future>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hconvex/json_io.hpp"
#include "hconvex/structure.hpp"

using namespace hconvex;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAssertion = 1;
constexpr int kExitInput = 2;

LVec parse_vector(const std::string& csv) {
    LVec out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(std::stod(item));
    return out;
}

void write_output(const ojson& j, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw schema_error("cannot open output file " + path);
    out << j.dump(2) << "\n";
}

std::uint64_t effective_seed(std::uint64_t flag_seed) {
    if (const char* env = std::getenv("HCONVEX_SEED"))
        return static_cast<std::uint64_t>(std::strtoull(env, nullptr, 10));
    return flag_seed;
}

LVec poincare(const HPoint& p) {
    return {p.coords[1] / (1.0 + p.coords[0]), p.coords[2] / (1.0 + p.coords[0])};
}

// ----- verification suites --------------------------------------------------

struct Check {
    std::string name;
    std::string ref;
    bool pass = false;
    double residual = 0.0;
    ojson witnesses = ojson::object();
};

void add_check(std::vector<Check>& checks, Check c) { checks.push_back(std::move(c)); }

ConvexBody equilateral_triangle(double side) {
    const double r = std::asinh(std::sqrt((std::cosh(side) - 1.0) / 1.5));
    return make_regular_polygon(3, r);
}

void suite_theorem1(std::vector<Check>& checks) {
    // closed form of the three-right-angle quadrilateral vs coordinates
    {
        double worst = 0.0;
        for (int ia = 1; ia <= 20; ++ia)
            for (int ib = 1; ib <= 20; ++ib) {
                const double a = 0.1 * ia, b = 0.1 * ib;
                const HPoint far_b = HPoint::from_coords({std::cosh(b), 0, std::sinh(b)});
                const Hyperplane h =
                    Hyperplane::from_normal({std::sinh(a), std::cosh(a), 0});
                worst = std::max(worst,
                                 std::abs(lambert_height(a, b) - std::abs(signed_dist(far_b, h))));
            }
        add_check(checks, {"lambert-grid", "construction", worst < 1e-12, worst, {}});
    }
    // tall-regime rhombus thickness equals the quadrilateral height
    for (auto [a, b] : {std::pair{0.5, 1.5}, std::pair{0.4, 1.5}}) {
        const WidthExtremum t = thickness(make_rhombus(a, b));
        const double expect = lambert_height(a, b);
        const double res = std::abs(t.value - expect);
        Check c{"rhombus-thickness(" + std::to_string(a) + "," + std::to_string(b) + ")",
                "theorem-1", res < 1e-8, res, {}};
        c.witnesses["witness"] = witness_to_json(t.witness);
        add_check(checks, std::move(c));
    }
    // dichotomy at every vertex of regular odd-gons and tall rhombi
    struct Item { std::string name; ConvexBody body; };
    std::vector<Item> corpus;
    for (int n : {5, 7, 9})
        corpus.push_back({"regular-" + std::to_string(n), make_regular_polygon(n, 0.8)});
    corpus.push_back({"rhombus(0.5,1.5)", make_rhombus(0.5, 1.5)});
    corpus.push_back({"rhombus(0.4,1.5)", make_rhombus(0.4, 1.5)});
    for (const Item& item : corpus) {
        double worst = 0.0;
        bool all_found = true;
        std::string cases;
        for (const HPoint& v : item.body.vertices) {
            const DichotomyReport rep = extreme_point_dichotomy(item.body, v, 1e-6);
            all_found = all_found && rep.found;
            worst = std::max(worst, rep.residual);
            cases += rep.which == DichotomyCase::on_hyperplane   ? "H"
                     : rep.which == DichotomyCase::on_equidistant ? "E"
                                                                  : "B";
        }
        Check c{"dichotomy-" + item.name, "theorem-1", all_found && worst < 1e-6, worst, {}};
        c.witnesses["cases"] = cases;
        add_check(checks, std::move(c));
    }
    // the tall rhombus shows the two pure cases at the two vertex types
    {
        const ConvexBody rh = make_rhombus(0.5, 1.5);
        const auto s = extreme_point_dichotomy(rh, rh.vertices[0], 1e-6);
        const auto l = extreme_point_dichotomy(rh, rh.vertices[1], 1e-6);
        const bool ok = s.found && s.which == DichotomyCase::on_hyperplane &&
                        l.found && l.which == DichotomyCase::on_equidistant;
        add_check(checks, {"rhombus-case-split", "theorem-1", ok,
                           ok ? 0.0 : 1.0, {}});
    }
}

void suite_theorem2(std::vector<Check>& checks) {
    struct Item { std::string name; ConvexBody body; bool expect_complete; };
    const std::vector<Item> corpus = {
        {"ball(r=0.5)", make_ball_body(HPoint::from_coords({1, 0, 0}), 0.5), true},
        {"reuleaux(1)", make_reuleaux(1.0), true},
        {"rhombus(0.5,1.5)", make_rhombus(0.5, 1.5), false},
    };
    for (const Item& item : corpus) {
        const Theorem2Report rep = theorem2_pipeline(item.body, 1e-6);
        Check c{"pipeline-" + item.name, "theorem-2",
                rep.consistent && rep.completeness.is_complete == item.expect_complete,
                rep.completeness.ball_hull_residual, {}};
        c.witnesses["complete"] = rep.completeness.is_complete;
        c.witnesses["constant_width"] = rep.constant_width.is_constant;
        c.witnesses["width"] = rep.constant_width.width;
        c.witnesses["diameter"] = rep.completeness.diameter_value;
        add_check(checks, std::move(c));
        if (item.expect_complete) {
            const double res = std::abs(rep.constant_width.width -
                                        rep.completeness.diameter_value);
            add_check(checks, {"width-matches-diameter-" + item.name, "theorem-2",
                               rep.constant_width.is_constant && res < 1e-6, res, {}});
        }
    }
}

void suite_claim(std::vector<Check>& checks) {
    const ConvexBody reuleaux = make_reuleaux(1.0);
    const auto families = supporting_families(reuleaux);
    double total = 0.0;
    for (const auto& f : families) total += f.span();
    int bad = 0, count = 0;
    double worst_spread = 0.0;
    for (const auto& fam : families) {
        const int k = std::max(2, static_cast<int>(std::lround(1000.0 * fam.span() / total)));
        for (int i = 0; i < k; ++i) {
            const auto rep =
                claim_unique_contact(reuleaux, fam.at(fam.t0 + fam.span() * i / k), 1e-6);
            ++count;
            if (rep.cluster_count != 1) ++bad;
            worst_spread = std::max(worst_spread, rep.spread);
        }
    }
    Check c{"unique-farthest-reuleaux", "claim", bad == 0 && count >= 1000,
            static_cast<double>(bad), {}};
    c.witnesses["lines"] = count;
    add_check(checks, std::move(c));
}

void suite_lemma(std::vector<Check>& checks, std::uint64_t seed) {
    const auto ball = lemma_spindle_check(
        make_ball_body(HPoint::from_coords({1, 0, 0}), 0.5), 1.0, 1000, seed, 1e-8);
    add_check(checks, {"spindle-ball", "lemma", ball.pass, ball.worst_residual, {}});
    const auto reuleaux = lemma_spindle_check(make_reuleaux(1.0), 1.0, 1000, seed, 1e-8);
    add_check(checks, {"spindle-reuleaux", "lemma", reuleaux.pass, reuleaux.worst_residual, {}});
    const auto tri = lemma_spindle_check(equilateral_triangle(1.0), 1.0, 1000, seed, 1e-8);
    add_check(checks,
              {"spindle-triangle-negative-control", "lemma", !tri.pass, tri.worst_residual, {}});
}

// structure checks for user-supplied bodies (replaces the built-in corpus
// of the theorem2/claim/lemma suites when --body is given)
void suite_user_corpus(std::vector<Check>& checks, const std::vector<std::string>& paths,
                       const std::string& suite, std::uint64_t seed) {
    for (const std::string& path : paths) {
        const ConvexBody body = load_body(path);
        const std::string tag = "(" + path + ")";
        if (suite == "all" || suite == "theorem2") {
            const Theorem2Report rep = theorem2_pipeline(body, 1e-6);
            Check c{"pipeline" + tag, "theorem-2", rep.consistent,
                    rep.completeness.ball_hull_residual, {}};
            c.witnesses["complete"] = rep.completeness.is_complete;
            c.witnesses["constant_width"] = rep.constant_width.is_constant;
            add_check(checks, std::move(c));
        }
        if ((suite == "all" || suite == "claim") && body.dim == 2) {
            const auto families = supporting_families(body);
            int bad = 0, count = 0;
            const bool complete = is_complete(body, 1e-6).is_complete;
            for (const auto& fam : families)
                for (int i = 0; i < 64; ++i) {
                    const auto rep = claim_unique_contact(
                        body, fam.at(fam.t0 + fam.span() * i / 64), 1e-6);
                    ++count;
                    if (rep.cluster_count != 1) ++bad;
                }
            // the uniqueness claim is asserted for complete bodies only
            Check c{"unique-farthest" + tag, "claim", !complete || bad == 0,
                    static_cast<double>(bad), {}};
            c.witnesses["complete"] = complete;
            c.witnesses["lines"] = count;
            add_check(checks, std::move(c));
        }
        if ((suite == "all" || suite == "lemma") && body.dim == 2) {
            const double delta = diameter(body).value;
            const bool complete = is_complete(body, 1e-6).is_complete;
            const auto rep = lemma_spindle_check(body, delta, 300, seed, 1e-8);
            add_check(checks, {"spindle" + tag, "lemma", !complete || rep.pass,
                               rep.worst_residual, {}});
        }
    }
}

void suite_l23(std::vector<Check>& checks, std::uint64_t seed, int workers) {
    // ball sanity: every sampled supporting line yields the full diameter
    for (double r : {0.25, 0.5, 1.0}) {
        const ConvexBody ball = make_ball_body(HPoint::from_coords({1, 0, 0}), r);
        double worst = 0.0;
        for (const ProfileSample& s : width_profile(ball, 256))
            worst = std::max(worst, std::abs(s.width - 2 * r));
        worst = std::max(worst, std::abs(thickness(ball).value - 2 * r));
        worst = std::max(worst, std::abs(max_width(ball).value - 2 * r));
        worst = std::max(worst, std::abs(diameter(ball).value - 2 * r));
        add_check(checks, {"ball-sanity(r=" + std::to_string(r) + ")", "l23-prop-2",
                           worst < 1e-9, worst, {}});
    }
    // max width equals diameter on random polygons; bodies are generated
    // sequentially, evaluated across workers, merged in input order
    Rng rng(seed);
    std::vector<ConvexBody> corpus;
    corpus.reserve(100);
    for (int i = 0; i < 100; ++i) corpus.push_back(random_klein_polygon(rng));
    struct PolyResult {
        double gap = 0.0;
        bool unique_farthest = false;
        double proj = 0.0;
    };
    std::vector<PolyResult> results(corpus.size());
    auto eval_one = [&](std::size_t i) {
        const ConvexBody& poly = corpus[i];
        PolyResult r;
        r.gap = std::abs(max_width(poly).value - diameter(poly).value);
        const WidthExtremum t = thickness(poly);
        if (claim_unique_contact(poly, t.witness.plane, 1e-6).cluster_count == 1) {
            r.unique_farthest = true;
            const HPoint foot = project_onto(t.witness.farthest.front(), t.witness.plane);
            r.proj = std::max(dist_to_body(poly, foot),
                              std::abs(signed_dist(foot, t.witness.plane)));
        }
        results[i] = r;
    };
    if (workers > 1) {
        std::vector<std::future<void>> futures;
        std::atomic<std::size_t> next{0};
        for (int w = 0; w < workers; ++w)
            futures.push_back(std::async(std::launch::async, [&] {
                for (std::size_t i = next++; i < corpus.size(); i = next++) eval_one(i);
            }));
        for (auto& f : futures) f.get();
    } else {
        for (std::size_t i = 0; i < corpus.size(); ++i) eval_one(i);
    }
    double worst = 0.0;
    int projections = 0;
    double worst_proj = 0.0;
    for (const PolyResult& r : results) {
        worst = std::max(worst, r.gap);
        if (r.unique_farthest) {
            ++projections;
            worst_proj = std::max(worst_proj, r.proj);
        }
    }
    add_check(checks, {"max-width-equals-diameter", "l23-theorem-1", worst < 1e-6, worst, {}});
    Check cp{"thickness-projection-in-contact", "l23-theorem-2", worst_proj < 1e-6, worst_proj, {}};
    cp.witnesses["bodies_with_unique_farthest"] = projections;
    add_check(checks, std::move(cp));
    // crosspolytopes in d = 3 (best-found optimizer)
    for (const auto& hl : {std::vector<double>{0.3, 0.3, 0.9}, std::vector<double>{0.2, 0.5, 0.7}}) {
        const ConvexBody c3 = make_crosspolytope(hl);
        const double res = std::abs(max_width(c3).value - diameter(c3).value);
        add_check(checks, {"crosspolytope-max-width", "l23-theorem-1", res < 1e-4, res, {}});
    }
    // complete bodies have diametric partners everywhere
    add_check(checks, {"diametric-partners-ball", "l23-prop-5",
                       is_constant_diameter(make_ball_body(HPoint::from_coords({1, 0, 0}), 0.5),
                                            1.0, 1e-6, 2048),
                       0.0, {}});
    add_check(checks, {"diametric-partners-reuleaux", "l23-prop-5",
                       is_constant_diameter(make_reuleaux(1.0), 1.0, 1e-6, 2048), 0.0, {}});
    // ball-hull fixed point for complete bodies
    const auto rep = is_complete(make_reuleaux(1.0), 1e-6, 4096);
    add_check(checks, {"ball-hull-fixed-point-reuleaux", "l23-claim-4",
                       rep.is_complete, rep.ball_hull_residual, {}});
}

int cmd_verify(const std::string& suite, std::uint64_t seed, int workers,
               const std::vector<std::string>& bodies, const std::string& out_path) {
    std::vector<Check> checks;
    if (bodies.empty()) {
        if (suite == "all" || suite == "theorem1") suite_theorem1(checks);
        if (suite == "all" || suite == "theorem2") suite_theorem2(checks);
        if (suite == "all" || suite == "claim") suite_claim(checks);
        if (suite == "all" || suite == "lemma") suite_lemma(checks, seed);
        if (suite == "all" || suite == "l23") suite_l23(checks, seed, workers);
    } else {
        suite_user_corpus(checks, bodies, suite, seed);
        if (suite == "all" || suite == "l23") suite_l23(checks, seed, workers);
    }
    if (checks.empty()) throw schema_error("unknown suite " + suite);

    ojson report;
    report["suite"] = suite;
    report["seed"] = seed;
    report["workers"] = workers;
    report["tolerances"] = {{"support", 1e-9}, {"farthest_tie", 1e-8},
                            {"cluster_radius", 1e-6}, {"check_default", 1e-6}};
    ojson arr = ojson::array();
    int failed = 0;
    for (const Check& c : checks) {
        ojson j;
        j["name"] = c.name;
        j["paper_ref"] = c.ref;
        j["status"] = c.pass ? "pass" : "fail";
        j["residual"] = c.residual;
        j["witnesses"] = c.witnesses;
        if (!c.pass) ++failed;
        arr.push_back(std::move(j));
    }
    report["checks"] = std::move(arr);
    report["passed"] = static_cast<int>(checks.size()) - failed;
    report["failed"] = failed;
    write_output(report, out_path);
    return failed == 0 ? kExitOk : kExitAssertion;
}

// ----- make / measure / plot / scan ----------------------------------------

int cmd_make(const std::string& kind, double a, double b,
             const std::vector<double>& half_lengths, int n, double r, double delta,
             const std::string& points_path, const std::string& out_path) {
    ConvexBody body;
    if (kind == "rhombus") {
        body = make_rhombus(a, b);
    } else if (kind == "crosspolytope") {
        body = make_crosspolytope(half_lengths);
    } else if (kind == "regular") {
        body = make_regular_polygon(n, r);
    } else if (kind == "reuleaux") {
        body = make_reuleaux(delta);
    } else if (kind == "ball") {
        body = make_ball_body(HPoint::from_coords({1, 0, 0}), r);
    } else if (kind == "polytope") {
        if (points_path.empty()) throw schema_error("make polytope requires --points");
        std::ifstream in(points_path);
        if (!in) throw schema_error("cannot open " + points_path);
        ojson j;
        in >> j;
        std::vector<HPoint> pts;
        for (const auto& row : j) {
            LVec v;
            for (const auto& x : row) v.push_back(x.get<double>());
            pts.push_back(HPoint::from_coords(v));
        }
        body = make_polytope(pts);
    } else {
        throw schema_error("unknown body kind " + kind);
    }
    if (out_path.empty()) {
        std::cout << body_to_json(body).dump(2) << "\n";
    } else {
        save_body(body, out_path);
    }
    return kExitOk;
}

// supporting line at a cumulative boundary-contact parameter in [0, 1)
Hyperplane line_at_contact_param(const ConvexBody& body, double param) {
    const auto families = supporting_families(body);
    double total = 0.0;
    for (const auto& f : families) total += f.span();
    double target = std::clamp(param, 0.0, 1.0) * total;
    for (const auto& fam : families) {
        if (target <= fam.span()) return fam.at(fam.t0 + target);
        target -= fam.span();
    }
    return families.back().at(families.back().t1);
}

int cmd_measure(const std::string& body_path, const std::string& what,
                const std::string& normal_csv, double contact_param,
                const std::string& out_path) {
    const ConvexBody body = load_body(body_path);
    ojson j;
    j["what"] = what;
    if (what == "thickness" || what == "maxwidth") {
        const WidthExtremum ext = what == "thickness" ? thickness(body) : max_width(body);
        j["value"] = ext.value;
        j["best_found_only"] = !ext.global_certified;
        if (ext.starts_used > 0) j["multistart"] = ext.starts_used;
        j["witness"] = witness_to_json(ext.witness);
    } else if (what == "diameter") {
        const DiameterResult d = diameter(body);
        j["value"] = d.value;
        j["witness"] = {{"a", ojson(d.a.coords)}, {"b", ojson(d.b.coords)}};
    } else if (what == "width") {
        if (normal_csv.empty() && contact_param < 0.0)
            throw schema_error("measure width requires --normal or --contact");
        const Hyperplane h =
            normal_csv.empty()
                ? line_at_contact_param(body, contact_param)
                : Hyperplane::from_normal(normalize_spacelike(parse_vector(normal_csv)));
        try {
            const WidthWitness w = width_given_h(body, h);
            j["value"] = w.value;
            j["witness"] = witness_to_json(w);
        } catch (const precondition_error&) {
            const double res = std::asinh(support_sinh(body, h.normal).min_value);
            std::cerr << "error: hyperplane does not support the body, min support distance "
                      << res << "\n";
            return kExitInput;
        }
    } else {
        throw schema_error("unknown measurement " + what);
    }
    write_output(j, out_path);
    return kExitOk;
}

int cmd_plot(const std::string& body_path, const std::string& out_path,
             const std::string& format, const std::string& profile_path) {
    const ConvexBody body = load_body(body_path);
    if (body.dim != 2) {
        std::cerr << "error: plotting supports H^2 bodies only\n";
        return kExitInput;
    }
    const int n = 1024;
    std::vector<LVec> pts;
    for (const HPoint& p : boundary_samples(body, n)) pts.push_back(poincare(p));
    if (format == "csv") {
        std::ofstream out(out_path);
        if (!out) throw schema_error("cannot open " + out_path);
        out << "x,y\n";
        for (const LVec& p : pts) out << p[0] << "," << p[1] << "\n";
        if (!pts.empty()) out << pts[0][0] << "," << pts[0][1] << "\n";
    } else if (format == "svg") {
        std::ofstream out(out_path);
        if (!out) throw schema_error("cannot open " + out_path);
        const double s = 220.0, cx = 250.0, cy = 250.0;
        out << "<svg xmlns='http://www.w3.org/2000/svg' width='500' height='500'>\n";
        out << "<circle cx='" << cx << "' cy='" << cy << "' r='" << s
            << "' fill='none' stroke='#999'/>\n<path d='";
        for (std::size_t i = 0; i < pts.size(); ++i)
            out << (i == 0 ? "M" : "L") << cx + s * pts[i][0] << " " << cy - s * pts[i][1] << " ";
        out << "Z' fill='none' stroke='#036'/>\n</svg>\n";
    } else {
        throw schema_error("unknown plot format " + format);
    }
    if (!profile_path.empty()) {
        std::ofstream out(profile_path);
        if (!out) throw schema_error("cannot open " + profile_path);
        out << "param,width\n";
        for (const ProfileSample& s : width_profile(body, 1024))
            out << s.param << "," << s.width << "\n";
    }
    return kExitOk;
}

int cmd_scan(double a, double b_min, double b_max, int steps, const std::string& out_path) {
    const ThresholdScanReport rep = rhombus_threshold_scan(a, b_min, b_max, steps);
    ojson j;
    j["a"] = a;
    j["found"] = rep.found;
    j["monotone"] = rep.monotone;
    if (rep.found) {
        j["b_star"] = rep.b_star;
        j["resolution"] = std::max(rep.resolution, 1e-3);
        j["thickness_at_b_star"] = rep.thickness_at_bstar;
        j["lambert_at_b_star"] = rep.lambert_at_bstar;
    }
    j["reading_half_lambda"] = rep.reading_half;
    j["reading_full_lambda"] = rep.reading_full;
    j["matching_reading"] = rep.matching_reading;
    ojson grid = ojson::array();
    for (const auto& [b, red] : rep.grid) grid.push_back({{"b", b}, {"reduced", red}});
    j["grid"] = std::move(grid);
    write_output(j, out_path);
    return rep.found ? kExitOk : kExitAssertion;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hconvex: widths, thickness and structure of convex bodies in the hyperboloid model"};
    app.require_subcommand(1);

    // make
    auto* mk = app.add_subcommand("make", "construct a body and write its JSON");
    std::string mk_kind, mk_points, mk_out;
    double mk_a = 0.5, mk_b = 1.0, mk_r = 0.8, mk_delta = 1.0;
    int mk_n = 5;
    std::vector<double> mk_half;
    mk->add_option("kind", mk_kind, "polytope|rhombus|crosspolytope|regular|reuleaux|ball")
        ->required();
    mk->add_option("--a", mk_a, "rhombus short half-axis");
    mk->add_option("--b", mk_b, "rhombus long half-axis");
    mk->add_option("--half-lengths", mk_half, "crosspolytope half-lengths");
    mk->add_option("--n", mk_n, "regular polygon vertex count");
    mk->add_option("--r", mk_r, "circumradius / ball radius");
    mk->add_option("--delta", mk_delta, "diameter for reuleaux");
    mk->add_option("--points", mk_points, "JSON file with hyperboloid coordinates");
    mk->add_option("--out,-o", mk_out, "output body file (stdout when omitted)");

    // measure
    auto* ms = app.add_subcommand("measure", "width/thickness/maxwidth/diameter of a body");
    std::string ms_body, ms_what = "thickness", ms_normal, ms_out;
    double ms_contact = -1.0;
    ms->add_option("body", ms_body, "body JSON file")->required();
    ms->add_option("--what", ms_what, "width|thickness|maxwidth|diameter");
    ms->add_option("--normal", ms_normal, "comma-separated supporting normal (width)");
    ms->add_option("--contact", ms_contact,
                   "boundary contact parameter in [0,1) selecting a supporting line");
    ms->add_option("--out,-o", ms_out, "output file (stdout when omitted)");

    // verify
    auto* vf = app.add_subcommand("verify", "run a verification suite");
    std::string vf_suite = "all", vf_out;
    std::uint64_t vf_seed = 7;
    int vf_workers = 1;
    std::vector<std::string> vf_bodies;
    vf->add_option("--suite", vf_suite, "all|theorem1|theorem2|claim|lemma|l23");
    vf->add_option("--seed", vf_seed, "random seed (HCONVEX_SEED overrides)");
    vf->add_option("--workers", vf_workers, "worker count for the polygon battery");
    vf->add_option("--body", vf_bodies, "body files replacing the built-in corpus");
    vf->add_option("--out,-o", vf_out, "report file (stdout when omitted)");

    // plot
    auto* pl = app.add_subcommand("plot", "emit a boundary polyline or SVG");
    std::string pl_body, pl_out = "plot.csv", pl_format = "csv", pl_profile;
    pl->add_option("body", pl_body, "body JSON file")->required();
    pl->add_option("--out,-o", pl_out, "output path");
    pl->add_option("--format", pl_format, "csv|svg");
    pl->add_option("--width-profile", pl_profile, "also write a param,width CSV");

    // scan-rhombus
    auto* sc = app.add_subcommand("scan-rhombus", "locate the reduced-probe transition in b");
    double sc_a = 0.4, sc_bmin = 0.0, sc_bmax = 3.0;
    int sc_steps = 64;
    std::string sc_out;
    sc->add_option("--a", sc_a, "short half-axis");
    sc->add_option("--b-min", sc_bmin, "scan start (defaults to just above a)");
    sc->add_option("--b-max", sc_bmax, "scan end");
    sc->add_option("--steps", sc_steps, "grid steps");
    sc->add_option("--out,-o", sc_out, "report file (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (app.got_subcommand(mk))
            return cmd_make(mk_kind, mk_a, mk_b, mk_half, mk_n, mk_r, mk_delta, mk_points, mk_out);
        if (app.got_subcommand(ms))
            return cmd_measure(ms_body, ms_what, ms_normal, ms_contact, ms_out);
        if (app.got_subcommand(vf))
            return cmd_verify(vf_suite, effective_seed(vf_seed), std::max(1, vf_workers),
                              vf_bodies, vf_out);
        if (app.got_subcommand(pl))
            return cmd_plot(pl_body, pl_out, pl_format, pl_profile);
        if (app.got_subcommand(sc)) {
            if (sc_bmin <= sc_a) sc_bmin = sc_a + 1e-6;
            return cmd_scan(sc_a, sc_bmin, sc_bmax, sc_steps, sc_out);
        }
    } catch (const schema_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
