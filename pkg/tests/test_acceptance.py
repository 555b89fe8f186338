"""Exit criteria for the package, one test per criterion.

Run with ``pytest tests/test_acceptance.py``; the terminal summary lists a
PASS/FAIL line per criterion.
"""

import json
import math

import numpy as np
import pytest

from ftrisk import datasets
from ftrisk.cli import RunConfig, run_pipeline
from ftrisk.geometry import (
    Case,
    contains,
    fermat_point,
    fermat_point_analytic,
    fermat_point_weiszfeld,
    triangle,
)
from ftrisk.interpolant import czech_interpolant, evaluate, evaluate_complex
from ftrisk.report import build_report
from ftrisk.smoothing import Series, smooth
from ftrisk.stats import classical_summary, coverage, ft_summary

from oracles import grid_minimum, random_acute_like, subtended_angles, wide_angle_triangle

TWO_PI_OVER_3 = 2 * math.pi / 3


def close(x, target, tol):
    return abs(x - target) <= tol


def test_ac1_classical_replication(czech, criterion):
    c = classical_summary(czech.values, k=3)
    checks = {
        "mean": close(c.mean, 2.0, 1e-4),
        "sigma": close(c.sigma, 1.1265, 1e-4),
        "V": close(c.variation, 0.56325, 1e-4),
        "low": close(c.interval[0], -1.3795, 1e-3),
        "high": close(c.interval[1], 5.3795, 1e-3),
    }
    criterion(
        "AC1 classical replication",
        all(checks.values()),
        f"mean={c.mean:.6g} sigma={c.sigma:.6g} V={c.variation:.6g} "
        f"interval=({c.interval[0]:.6g}, {c.interval[1]:.6g})",
    )


def test_ac2_fermat_point_replication(czech, criterion):
    rows = {p.center_index: p for p in smooth(czech).points}
    moved_ok = (
        close(rows[2].smoothed.t, 1.7912, 1e-3)
        and close(rows[2].smoothed.v, 2.4661, 1e-3)
        and close(rows[7].smoothed.t, 7.1264, 1e-3)
        and close(rows[7].smoothed.v, 2.1045, 1e-3)
    )
    fixed_ok = all(
        rows[i].smoothed == rows[i].original and rows[i].case is Case.VERTEX_OPTIMAL
        for i in (3, 4, 5, 6, 8, 9, 10)
    )
    criterion(
        "AC2 Fermat-point replication",
        moved_ok and fixed_ok and sorted(rows) == list(range(2, 11)),
        f"phi(2)=({rows[2].smoothed.t:.5f}, {rows[2].smoothed.v:.5f}) "
        f"phi(7)=({rows[7].smoothed.t:.5f}, {rows[7].smoothed.v:.5f}) "
        f"vertex-identity={fixed_ok}",
    )


def test_ac3_ft_statistics_published_pairs(criterion):
    orig, phi = datasets.published_pairs()
    f = ft_summary(orig, phi)
    ok = (
        close(f.M_phi, 1.87425, 1e-4)
        and close(f.S, 0.351, 2e-3)
        and close(f.W, 0.187, 2e-3)
        and close(f.interval[0], 0.47, 0.01)
        and close(f.interval[1], 3.27, 0.01)
    )
    criterion(
        "AC3 FT statistics (published pairs)",
        ok,
        f"M_phi={f.M_phi:.6g} S={f.S:.6g} W={f.W:.6g} "
        f"interval=({f.interval[0]:.6g}, {f.interval[1]:.6g})",
    )


def test_ac4_solver_agreement(criterion):
    rng = np.random.default_rng(4)
    n = 10_000
    worst_gap = worst_angle = 0.0
    for _ in range(n):
        pts = random_acute_like(rng)
        tri = triangle(*pts)
        a = fermat_point_analytic(tri).location
        w = fermat_point_weiszfeld(tri).location
        worst_gap = max(worst_gap, abs(a.t - w.t), abs(a.v - w.v))
        for loc in (a, w):
            for ang in subtended_angles(tuple(loc), pts):
                worst_angle = max(worst_angle, abs(ang - TWO_PI_OVER_3))
    criterion(
        "AC4 solver agreement",
        worst_gap <= 1e-8 and worst_angle <= 1e-6,
        f"{n} triangles, max |analytic - iterative|={worst_gap:.3g}, "
        f"max 120-degree error={worst_angle:.3g} rad",
    )


def test_ac5_brute_force_oracle(criterion):
    rng = np.random.default_rng(5)
    n = 500
    worst = -math.inf
    coarsest = 0.0
    for _ in range(n):
        pts = [tuple(rng.uniform(-1, 1, 2)) for _ in range(3)]
        sol = fermat_point(triangle(*pts))
        best, _, cell = grid_minimum(pts, final_cell=1e-4, stages=3)
        coarsest = max(coarsest, cell)
        worst = max(worst, sol.total_distance - best)
    criterion(
        "AC5 brute-force oracle",
        worst <= 1e-6 and coarsest <= 1e-4,
        f"{n} triangles, max(objective - grid minimum)={worst:.3g}, final cell<={coarsest:.3g}",
    )


def test_ac6_vertex_and_collinear_dispatch(criterion):
    rng = np.random.default_rng(6)
    wide_ok = 0
    n_wide = 1000
    for k in range(n_wide):
        angle = rng.uniform(TWO_PI_OVER_3, math.pi - 1e-3)
        slot = k % 3
        tri = triangle(*wide_angle_triangle(rng, angle, slot))
        sol = fermat_point(tri)
        wide_ok += sol.case is Case.VERTEX_OPTIMAL and sol.vertex == slot and sol.location == tri[slot]

    col_ok = 0
    n_col = 1000
    for k in range(n_col):
        origin = rng.uniform(-10, 10, 2)
        theta = rng.uniform(0, 2 * math.pi)
        direction = np.array([math.cos(theta), math.sin(theta)])
        params = np.sort(rng.uniform(-5, 5, 3))
        pts = [tuple(origin + s * direction) for s in params]
        if k % 2:
            # exactly representable integer triples as well
            step = rng.integers(1, 5, 2)
            base = rng.integers(-20, 20, 2)
            pts = [tuple(map(float, base + j * step)) for j in (0, 1, 3)]
        middle = pts[1]
        order = rng.permutation(3)
        tri = triangle(*(pts[i] for i in order))
        sol = fermat_point(tri)
        col_ok += sol.case is Case.COLLINEAR and tuple(sol.location) == middle

    criterion(
        "AC6 vertex/collinear dispatch",
        wide_ok == n_wide and col_ok == n_col,
        f"wide-angle {wide_ok}/{n_wide} vertex-optimal, collinear {col_ok}/{n_col} middle point",
    )


def test_ac7_coverage_report(czech, criterion):
    values = czech.values
    classical = classical_summary(values, k=3)
    orig, phi = datasets.published_pairs()
    published = ft_summary(orig, phi)
    c_frac, c_in = coverage(values, classical.interval)
    p_frac, p_in = coverage(values, published.interval)
    rep = build_report(czech, smooth(czech), datasets.BUILTIN_TAG)
    reported = rep["coverage"]["ft_paper_mode"]
    # the report must carry the figure and flag it against the 93.75% bound
    surfaced = reported["inside"] == p_in and reported["below_nominal"] == (p_frac < 0.9375)
    criterion(
        "AC7 coverage report",
        c_in == 11 and p_in == 9 and surfaced,
        f"3sigma {c_in}/11, published-pairs 4S {p_in}/11 (criterion expects 9/11), "
        f"reported below nominal={reported['below_nominal']}",
    )


def test_ac8_interpolant_evaluator(criterion):
    f = czech_interpolant()
    worst_im = 0.0
    for t in np.arange(0, 1201) / 100:
        z = evaluate_complex(f, float(t))
        worst_im = max(worst_im, abs(z.imag) / max(1.0, abs(z.real)))
    worst_lin = worst_conj = 0.0
    for t in np.linspace(0, 12, 121):
        t = float(t)
        worst_lin = max(worst_lin, abs(evaluate(f + f, t) - 2 * evaluate(f, t)))
        worst_conj = max(worst_conj, abs(evaluate(f.conjugate(), t) - evaluate(f, t)))
    rep = build_report(datasets.czech2011(), smooth(datasets.czech2011()), datasets.BUILTIN_TAG)
    emitted = len(rep["interpolant"]["rows"]) == 10
    criterion(
        "AC8 interpolant evaluator",
        worst_im <= 1e-9 and worst_lin <= 1e-12 and worst_conj <= 1e-12
        and f.is_conjugate_closed() and emitted,
        f"max imag={worst_im:.3g}, linearity={worst_lin:.3g}, conjugation={worst_conj:.3g}, "
        f"max residual vs published points={rep['interpolant']['max_abs_residual']:.3g}",
    )


def test_ac9_property_suite(czech, criterion):
    rng = np.random.default_rng(9)
    failures = []

    for _ in range(300):
        n = int(rng.integers(3, 13))
        vals = list(rng.uniform(0.5, 10, n))
        phi = list(rng.uniform(0.5, 10, n))
        c = float(rng.uniform(-5, 5))
        s = 2.0 ** int(rng.integers(-8, 8))
        base = classical_summary(vals)
        sh = classical_summary([v + c for v in vals])
        sc = classical_summary([v * s for v in vals])
        tol = 1e-12 * max(map(abs, vals + [c]))
        if not (close(sh.mean, base.mean + c, tol) and close(sh.sigma, base.sigma, tol)
                and close(sh.interval[0], base.interval[0] + c, 4 * tol)
                and close(sh.interval[1], base.interval[1] + c, 4 * tol)):
            failures.append("classical shift")
        if not (close(sc.sigma, s * base.sigma, 1e-12 * s * base.sigma)
                and close(sc.mean, s * base.mean, 1e-12 * s * base.mean)
                and close(sc.variation, base.variation, 1e-12 * base.variation)):
            failures.append("classical scale")
        fb = ft_summary(vals, phi)
        fsh = ft_summary([v + c for v in vals], [p + c for p in phi])
        fsc = ft_summary([v * s for v in vals], [p * s for p in phi])
        if not (close(fsh.S, fb.S, 4 * tol) and close(fsh.M_phi, fb.M_phi + c, tol)
                and close(fsh.interval[0], fb.interval[0] + c, 16 * tol)):
            failures.append("ft shift")
        if not (close(fsc.S, s * fb.S, 1e-12 * s * fb.S) and close(fsc.W, fb.W, 1e-12 * fb.W)):
            failures.append("ft scale")

    for _ in range(200):
        n = int(rng.integers(3, 13))
        vals = list(rng.normal(0, 3, n))
        series = Series.from_values(vals)
        out = smooth(series)
        c = float(rng.uniform(-50, 50))
        moved = smooth(Series.from_values([v + c for v in vals]))
        for p, q in zip(out.points, moved.points):
            i = p.center_index - 1
            tri = triangle(*series.points[i - 1 : i + 2])
            if p.case is Case.INTERIOR and not contains(tri, p.smoothed, slack=1e-10):
                failures.append("hull confinement")
            if not (close(q.smoothed.t, p.smoothed.t, 1e-10) and close(q.smoothed.v, p.smoothed.v + c, 1e-10)):
                failures.append("smoothing translation")

    def pipeline():
        import io

        buf = io.StringIO()
        code = run_pipeline(RunConfig("@czech2011", output_format="json"), stdout=buf)
        return code, buf.getvalue()

    first, second = pipeline(), pipeline()
    if first != second or first[0] != 0:
        failures.append("pipeline determinism")
    json.loads(first[1])

    criterion(
        "AC9 property suite",
        not failures,
        "all properties hold" if not failures else f"failed: {sorted(set(failures))}",
    )
