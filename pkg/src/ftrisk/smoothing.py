"""Fermat-point smoothing of a numerical series.

Every interior point is replaced by the Fermat-Torricelli point of the
triangle it forms with its two neighbours.  The first and last points have
no such triangle and are dropped.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NonMonotonicTime, SeriesTooShort
from .geometry import Case, Point, Triangle, fermat_point


@dataclass(frozen=True)
class Series:
    points: tuple[Point, ...]
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        for prev, cur in zip(self.points, self.points[1:]):
            if not cur.t > prev.t:
                raise NonMonotonicTime(
                    f"time must be strictly increasing, got {prev.t!r} then {cur.t!r}"
                )

    @classmethod
    def from_values(cls, values: Iterable[float], label: str = "", start: float = 1.0) -> Series:
        """Series with t = start, start + 1, ..."""
        return cls(tuple(Point(start + i, float(v)) for i, v in enumerate(values)), label)

    def __len__(self) -> int:
        return len(self.points)

    @property
    def values(self) -> list[float]:
        return [p.v for p in self.points]

    @property
    def times(self) -> list[float]:
        return [p.t for p in self.points]


@dataclass(frozen=True)
class SmoothedPoint:
    center_index: int  # 1-based position in the source series
    original: Point
    smoothed: Point
    value_displacement: float
    planar_displacement: float
    case: Case


@dataclass(frozen=True)
class SmoothedSeries:
    source: Series
    points: tuple[SmoothedPoint, ...]
    endpoint_policy: str = "drop"

    @property
    def originals(self) -> list[float]:
        return [p.original.v for p in self.points]

    @property
    def smoothed_values(self) -> list[float]:
        return [p.smoothed.v for p in self.points]


def _phi_pass(points: Sequence[Point], t_scale: float) -> list[tuple[Point, Case]]:
    out = []
    for i in range(1, len(points) - 1):
        tri = Triangle(
            *(Point(p.t * t_scale, p.v) for p in points[i - 1 : i + 2])
        )
        sol = fermat_point(tri)
        if sol.vertex == 1:
            # optimum is the centre itself; keep its coordinates bit-exact
            loc = points[i]
        else:
            loc = Point(sol.location.t / t_scale, sol.location.v)
        out.append((loc, sol.case))
    return out


def smooth(series: Series, *, t_scale: float = 1.0, repeat: int = 1) -> SmoothedSeries:
    """Apply the Fermat-point map to every interior point of ``series``.

    ``t_scale`` multiplies the time axis before the geometry is solved (and
    is undone afterwards); the Fermat point is not invariant under unequal
    axis scaling, so this changes the answer.  ``repeat`` > 1 re-applies the
    map to the series with the endpoints kept and the interior replaced.
    Displacements are always measured against the source series.
    """
    if len(series) < 3:
        raise SeriesTooShort(f"need at least 3 points to smooth, got {len(series)}")
    if t_scale <= 0:
        raise ValueError(f"t_scale must be > 0, got {t_scale}")
    if repeat < 1:
        raise ValueError(f"repeat must be >= 1, got {repeat}")

    current = list(series.points)
    cases: list[Case] = []
    for _ in range(repeat):
        images = _phi_pass(current, t_scale)
        current = [current[0], *(loc for loc, _ in images), current[-1]]
        cases = [case for _, case in images]

    rows = []
    for i, (orig, new, case) in enumerate(zip(series.points[1:-1], current[1:-1], cases), start=2):
        rows.append(
            SmoothedPoint(
                center_index=i,
                original=orig,
                smoothed=new,
                value_displacement=abs(orig.v - new.v),
                planar_displacement=orig.distance(new),
                case=case,
            )
        )
    return SmoothedSeries(series, tuple(rows))


def displacement_table(s: SmoothedSeries) -> list[tuple[int, float, float]]:
    """(center_index, value displacement, planar displacement) per smoothed point."""
    return [(p.center_index, p.value_displacement, p.planar_displacement) for p in s.points]
