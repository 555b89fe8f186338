"""Pipeline report: smoothing, both statistics families, coverage, comparison."""

from __future__ import annotations

import json
import math
from typing import Optional

from . import datasets
from .interpolant import czech_interpolant, residual_report
from .smoothing import Series, SmoothedSeries, displacement_table
from .stats import (
    ClassicalSummary,
    FTSummary,
    classical_summary,
    comparison_report,
    coverage,
    ft_summary,
)


def _dataset(series: Series, source: str) -> dict:
    return {
        "label": series.label,
        "source": source,
        "n": len(series),
        "t": series.times,
        "values": series.values,
    }


def displacement_rows(smoothed: SmoothedSeries) -> list[dict]:
    rows = []
    for sp, (idx, dv, dp) in zip(smoothed.points, displacement_table(smoothed)):
        rows.append(
            {
                "center_index": idx,
                "t": sp.original.t,
                "value": sp.original.v,
                "phi_t": sp.smoothed.t,
                "phi_value": sp.smoothed.v,
                "value_displacement": dv,
                "planar_displacement": dp,
                "case": sp.case.value,
            }
        )
    return rows


def _coverage_entry(values, summary, nominal: float) -> dict:
    fraction, inside = coverage(values, summary.interval)
    return {
        "interval": list(summary.interval),
        "inside": inside,
        "n": len(values),
        "fraction": fraction,
        "nominal": nominal,
        "below_nominal": fraction < nominal,
    }


def normal_coverage(k: float) -> float:
    """P(|Z| < k) for a standard normal Z."""
    return math.erf(k / math.sqrt(2.0))


def chebyshev_coverage(m: float) -> float:
    """Lower bound 1 - 1/m^2 claimed for the Fermat-relative interval."""
    return max(0.0, 1.0 - 1.0 / (m * m))


def smooth_report(series: Series, smoothed: SmoothedSeries, source: str) -> dict:
    return {"dataset": _dataset(series, source), "displacements": displacement_rows(smoothed)}


def build_report(
    series: Series,
    smoothed: SmoothedSeries,
    source: str,
    k_sigma: float = 3.0,
    s_multiplier: float = 4.0,
    paper_mode: Optional[bool] = None,
) -> dict:
    """Full comparison report as a JSON-ready dict.

    ``paper_mode`` adds the statistics of the published ten-pair Fermat table
    and the interpolant residuals; it defaults to on for the bundled dataset.
    """
    if paper_mode is None:
        paper_mode = source == datasets.BUILTIN_TAG
    values = series.values
    classical = classical_summary(values, k_sigma)
    principled = ft_summary(smoothed.originals, smoothed.smoothed_values, s_multiplier)

    report = {
        "dataset": _dataset(series, source),
        "classical": classical.to_dict(),
        "ft_principled": principled.to_dict(),
    }
    comparisons = {"principled": comparison_report(classical, principled).to_dict()}
    cov = {
        "classical": _coverage_entry(values, classical, normal_coverage(k_sigma)),
        "ft_principled": _coverage_entry(values, principled, chebyshev_coverage(s_multiplier)),
    }
    if paper_mode:
        orig, phi = datasets.published_pairs()
        published = ft_summary(orig, phi, s_multiplier)
        report["ft_paper_mode"] = published.to_dict()
        comparisons["paper_mode"] = comparison_report(classical, published).to_dict()
        cov["ft_paper_mode"] = _coverage_entry(values, published, chebyshev_coverage(s_multiplier))
        report["interpolant"] = residual_report(
            czech_interpolant(), datasets.published_phi_points()
        ).to_dict()
    report["comparison"] = comparisons
    report["displacements"] = displacement_rows(smoothed)
    report["coverage"] = cov
    return report


def to_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=False) + "\n"


def _g(x) -> str:
    if x is None:
        return "n/a"
    if isinstance(x, bool):
        return str(x).lower()
    if isinstance(x, int):
        return str(x)
    return f"{x:.6g}"


def _interval(iv) -> str:
    return f"({_g(iv[0])}, {_g(iv[1])})"


def _displacement_text(rows: list[dict]) -> list[str]:
    lines = [
        f"{'center':>6}  {'t':>8}  {'value':>8}  {'phi_t':>8}  {'phi_value':>9}  "
        f"{'|dv|':>8}  {'planar':>8}  case"
    ]
    for r in rows:
        lines.append(
            f"{r['center_index']:>6}  {_g(r['t']):>8}  {_g(r['value']):>8}  "
            f"{_g(r['phi_t']):>8}  {_g(r['phi_value']):>9}  "
            f"{_g(r['value_displacement']):>8}  {_g(r['planar_displacement']):>8}  {r['case']}"
        )
    return lines


def _summary_text(name: str, d: dict, fields: tuple[str, ...]) -> list[str]:
    parts = [f"{f}={_g(d[f])}" for f in fields]
    return [f"{name}: " + "  ".join(parts), f"  interval: {_interval(d['interval'])}"]


def render_text(report: dict) -> str:
    ds = report["dataset"]
    lines = [f"dataset: {ds['label'] or ds['source']}  (n={ds['n']})", ""]
    if "classical" in report:
        lines += _summary_text(
            "classical", report["classical"],
            ("n", "mean", "variance", "sigma", "variation", "interval_k", "half_width"),
        )
        ft_fields = ("n", "F", "S", "M_phi", "W", "multiplier", "half_width")
        lines += _summary_text("ft_principled", report["ft_principled"], ft_fields)
        if "ft_paper_mode" in report:
            lines += _summary_text("ft_paper_mode", report["ft_paper_mode"], ft_fields)
        lines.append("")
        lines.append("comparison (FT width / classical width):")
        for name, comp in report["comparison"].items():
            lines.append(f"  {name}: width_ratio={_g(comp['width_ratio'])}")
        lines.append("")
        lines.append("coverage of the observed values:")
        for name, c in report["coverage"].items():
            flag = "  BELOW NOMINAL" if c["below_nominal"] else ""
            lines.append(
                f"  {name}: {c['inside']}/{c['n']} fraction={_g(c['fraction'])} "
                f"nominal={_g(c['nominal'])}{flag}"
            )
        lines.append("")
    lines.append("displacements:")
    lines += _displacement_text(report["displacements"])
    if "interpolant" in report:
        lines.append("")
        lines.append("interpolant residuals at published Fermat points:")
        lines.append(f"{'t':>8}  {'expected':>9}  {'actual':>9}  residual")
        for r in report["interpolant"]["rows"]:
            lines.append(
                f"{_g(r['t']):>8}  {_g(r['expected']):>9}  {_g(r['actual']):>9}  {_g(r['residual'])}"
            )
        lines.append(f"max |residual| = {_g(report['interpolant']['max_abs_residual'])}")
    return "\n".join(lines) + "\n"
