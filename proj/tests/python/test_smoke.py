"""Smoke tests for the python module and the CLI round trip."""

import json
import math
import os
import subprocess
import sys
import tempfile

import hconvex


def approx(a, b, tol=1e-9):
    assert abs(a - b) <= tol, f"{a} != {b} (tol {tol})"


def test_rhombus_thickness():
    rh = hconvex.make_rhombus(0.5, 1.5)
    t = hconvex.thickness(rh)
    approx(t["value"], hconvex.lambert_height(0.5, 1.5), 1e-8)
    assert t["global_certified"]
    # both long-axis endpoints are farthest
    assert len(t["farthest"]) == 2


def test_reuleaux_constant_width():
    body = hconvex.make_reuleaux(1.0)
    assert body.kind == "arc-polygon"
    assert body.arc_count == 3
    ok, width, spread = hconvex.is_constant_width(body, 1e-6, 512)
    assert ok
    approx(width, 1.0, 1e-6)
    rep = hconvex.theorem2(body)
    assert rep["complete"] and rep["constant_width"] and rep["consistent"]


def test_max_width_is_diameter():
    poly = hconvex.make_regular_polygon(7, 0.8)
    value, a, b = hconvex.diameter(poly)
    approx(hconvex.max_width(poly)["value"], value, 1e-6)
    approx(hconvex.dist(a, b), value, 1e-12)


def test_dichotomy_cases():
    rh = hconvex.make_rhombus(0.5, 1.5)
    short = hconvex.extreme_point_dichotomy(rh, rh.vertices[0])
    long_ = hconvex.extreme_point_dichotomy(rh, rh.vertices[1])
    assert short["found"] and short["case"] == "on_hyperplane"
    assert long_["found"] and long_["case"] == "on_equidistant"


def test_json_round_trip():
    rh = hconvex.make_rhombus(0.4, 1.1)
    back = hconvex.body_from_json(rh.to_json())
    assert len(back.vertices) == len(rh.vertices)
    for v in rh.vertices:  # reading canonicalizes the cyclic order
        best = min(max(abs(x - y) for x, y in zip(v, w)) for w in back.vertices)
        assert best < 1e-12, best


def test_errors_are_typed():
    try:
        hconvex.make_rhombus(1.0, 0.5)
    except hconvex.HconvexError:
        pass
    else:
        raise AssertionError("expected HconvexError")


def test_cli_round_trip():
    cli = os.environ.get("HCONVEX_CLI")
    if not cli:
        print("HCONVEX_CLI not set, skipping the CLI round trip")
        return
    with tempfile.TemporaryDirectory() as tmp:
        body_path = os.path.join(tmp, "body.json")
        subprocess.run([cli, "make", "rhombus", "--a", "0.5", "--b", "1.5",
                        "-o", body_path], check=True)
        out = subprocess.run([cli, "measure", body_path, "--what", "thickness"],
                             check=True, capture_output=True, text=True)
        value = json.loads(out.stdout)["value"]
        approx(value, math.asinh(math.sinh(0.5) * math.cosh(1.5)), 1e-8)
        # width along an explicitly supplied supporting normal
        a = 0.5
        normal = f"{-math.sinh(a)},{-math.cosh(a)},0"
        out = subprocess.run([cli, "measure", body_path, "--what", "width",
                              "--normal", normal],
                             check=True, capture_output=True, text=True)
        approx(json.loads(out.stdout)["value"],
               math.asinh(math.sinh(0.5) * math.cosh(1.5)), 1e-10)
        # a non-supporting normal is a precondition failure, exit 2
        rc = subprocess.run([cli, "measure", body_path, "--what", "width",
                             "--normal", "0,1,0"], capture_output=True)
        assert rc.returncode == 2, rc.returncode
        # malformed file: schema error, exit 2
        bad_path = os.path.join(tmp, "bad.json")
        with open(bad_path, "w") as fh:
            fh.write("{\"kind\": 12}")
        rc = subprocess.run([cli, "measure", bad_path], capture_output=True)
        assert rc.returncode == 2, rc.returncode


def test_cli_polytope_from_points():
    cli = os.environ.get("HCONVEX_CLI")
    if not cli:
        print("HCONVEX_CLI not set, skipping")
        return
    with tempfile.TemporaryDirectory() as tmp:
        pts_path = os.path.join(tmp, "points.json")
        t = 0.6
        pts = [[math.cosh(t),
                math.sinh(t) * math.cos(2 * math.pi * k / 3),
                math.sinh(t) * math.sin(2 * math.pi * k / 3)] for k in range(3)]
        pts.append([1.0, 0.0, 0.0])  # interior, dropped by the hull
        with open(pts_path, "w") as fh:
            json.dump(pts, fh)
        body_path = os.path.join(tmp, "tri.json")
        subprocess.run([cli, "make", "polytope", "--points", pts_path,
                        "-o", body_path], check=True)
        assert len(json.load(open(body_path))["vertices"]) == 3


def test_cli_crosspolytope_and_seed_env():
    cli = os.environ.get("HCONVEX_CLI")
    if not cli:
        print("HCONVEX_CLI not set, skipping")
        return
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "cross.json")
        subprocess.run([cli, "make", "crosspolytope",
                        "--half-lengths", "0.3", "0.3", "0.9", "-o", path], check=True)
        out = subprocess.run([cli, "measure", path, "--what", "diameter"],
                             check=True, capture_output=True, text=True)
        approx(json.loads(out.stdout)["value"], 1.8, 1e-9)
        # HCONVEX_SEED overrides --seed
        env = dict(os.environ, HCONVEX_SEED="7")
        a = subprocess.run([cli, "verify", "--suite", "lemma", "--seed", "3"],
                           env=env, check=True, capture_output=True, text=True)
        b = subprocess.run([cli, "verify", "--suite", "lemma", "--seed", "7"],
                           check=True, capture_output=True, text=True)
        assert a.stdout == b.stdout


def test_cli_make_and_plot():
    cli = os.environ.get("HCONVEX_CLI")
    if not cli:
        print("HCONVEX_CLI not set, skipping the plot smoke")
        return
    with tempfile.TemporaryDirectory() as tmp:
        body_path = os.path.join(tmp, "reuleaux.json")
        subprocess.run([cli, "make", "reuleaux", "--delta", "1", "-o", body_path],
                       check=True)
        body = json.load(open(body_path))
        assert body["kind"] == "arc-polygon" and len(body["arcs"]) == 3
        penta_path = os.path.join(tmp, "penta.json")
        subprocess.run([cli, "make", "regular", "--n", "5", "--r", "0.8",
                        "-o", penta_path], check=True)
        assert len(json.load(open(penta_path))["vertices"]) == 5

        csv_path = os.path.join(tmp, "outline.csv")
        profile_path = os.path.join(tmp, "profile.csv")
        subprocess.run([cli, "plot", body_path, "--format", "csv", "-o", csv_path,
                        "--width-profile", profile_path], check=True)
        lines = open(csv_path).read().strip().splitlines()
        assert lines[0] == "x,y"
        for row in lines[1:]:
            x, y = map(float, row.split(","))
            assert x * x + y * y < 1.0  # inside the unit disk
        prof = open(profile_path).read().strip().splitlines()
        assert prof[0] == "param,width"
        widths = [float(r.split(",")[1]) for r in prof[1:]]
        assert max(widths) - min(widths) < 1e-6  # constant width body

        svg_path = os.path.join(tmp, "outline.svg")
        subprocess.run([cli, "plot", body_path, "--format", "svg", "-o", svg_path],
                       check=True)
        assert "<svg" in open(svg_path).read()


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for test in tests:
        test()
        print(f"ok {test.__name__}")
    print(f"{len(tests)} python smoke tests passed")


if __name__ == "__main__":
    sys.exit(main())
