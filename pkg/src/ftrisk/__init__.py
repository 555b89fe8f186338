"""Fermat-Torricelli smoothing of numerical series and the dispersion
statistics built on it.

>>> from ftrisk import datasets, smooth, classical_summary, ft_summary
>>> series = datasets.czech2011()
>>> s = smooth(series)
>>> ft_summary(s.originals, s.smoothed_values).S  # doctest: +ELLIPSIS
0.358...
"""

from .geometry import (
    Case,
    FermatSolution,
    Point,
    Triangle,
    fermat_point,
    fermat_point_analytic,
    fermat_point_weiszfeld,
    max_vertex_angle,
    objective,
    triangle,
    uteshev_form,
)
from .interpolant import ExponentialSum, czech_interpolant, evaluate, residual_report
from .smoothing import Series, SmoothedPoint, SmoothedSeries, displacement_table, smooth
from .stats import (
    ClassicalSummary,
    Comparison,
    FTSummary,
    classical_summary,
    comparison_report,
    coverage,
    ft_summary,
)

__version__ = "0.1.0"

__all__ = [
    "Case",
    "ClassicalSummary",
    "Comparison",
    "ExponentialSum",
    "FTSummary",
    "FermatSolution",
    "Point",
    "Series",
    "SmoothedPoint",
    "SmoothedSeries",
    "Triangle",
    "classical_summary",
    "comparison_report",
    "coverage",
    "displacement_table",
    "czech_interpolant",
    "evaluate",
    "fermat_point",
    "fermat_point_analytic",
    "fermat_point_weiszfeld",
    "ft_summary",
    "max_vertex_angle",
    "objective",
    "residual_report",
    "smooth",
    "triangle",
    "uteshev_form",
]
