"""Bundled data: Czech annual inflation 2011-2021 and its published Fermat points."""

from __future__ import annotations

import csv
import io
from importlib import resources

from .geometry import Point
from .smoothing import Series

BUILTIN_TAG = "@czech2011"
FIRST_YEAR = 2011

CZECH_2011_VALUES = (2.2, 3.5, 1.4, 0.4, 0.3, 0.6, 2.4, 2.0, 2.6, 3.3, 3.3)

# Published Fermat-point table: (smoothed t, original value I, smoothed value phi(I)).
# The last row is not the Fermat point of any neighbour triangle of the series
# but is part of the published aggregate figures.
PUBLISHED_ROWS = (
    (1.7912, 3.5, 2.4661),
    (3.0, 1.4, 1.4),
    (4.0, 0.4, 0.4),
    (5.0, 0.3, 0.3),
    (6.0, 0.6, 0.6),
    (7.1264, 2.4, 2.1045),
    (8.0, 2.0, 2.0),
    (9.0, 2.6, 2.6),
    (10.0, 3.3, 3.3),
    (10.6380, 3.3, 3.5719),
)


def czech2011() -> Series:
    """The bundled CSV as a :class:`Series` (t = year number 1..11)."""
    text = resources.files("ftrisk").joinpath("data/czech2011.csv").read_text("utf-8")
    rows = list(csv.DictReader(io.StringIO(text)))
    return Series(
        tuple(Point(float(r["t"]), float(r["value"])) for r in rows),
        label="Czech inflation 2011-2021 (%)",
    )


def published_pairs() -> tuple[list[float], list[float]]:
    """Originals and smoothed values of the published table, in order."""
    return [r[1] for r in PUBLISHED_ROWS], [r[2] for r in PUBLISHED_ROWS]


def published_phi_points() -> list[Point]:
    return [Point(t, phi) for t, _, phi in PUBLISHED_ROWS]
