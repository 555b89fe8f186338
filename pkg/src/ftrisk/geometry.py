"""Fermat-Torricelli point of a triangle.

Two independent solvers are provided: a closed form valid when every angle
is below 120 degrees, and a safeguarded Weiszfeld iteration.  The
:func:`fermat_point` dispatcher picks the right one and handles the
vertex-optimal and collinear cases exactly.
"""

from __future__ import annotations

import enum
import math
import sys
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional

from .errors import (
    DegenerateTriangle,
    DuplicateVertices,
    NoConvergence,
    NonFinitePoint,
    PreconditionViolated,
    SolverDisagreement,
)

TWO_PI_OVER_3 = 2.0 * math.pi / 3.0
SQRT3 = math.sqrt(3.0)
EPS = sys.float_info.epsilon

# |S| <= COLLINEAR_RTOL * (r12^2 + r13^2 + r23^2) counts as collinear
COLLINEAR_RTOL = 1e-12

ANGLE_TIE_TOL = 1e-12

WEISZFELD_TOL = 1e-10
WEISZFELD_MAX_ITER = 1000

# fermat_point raises SolverDisagreement above this (times coordinate scale)
CROSS_CHECK_TOL = 1e-7


@dataclass(frozen=True)
class Point:
    """A point on the analysis plane: time coordinate ``t``, value ``v``."""

    t: float
    v: float

    def __post_init__(self):
        if not (math.isfinite(self.t) and math.isfinite(self.v)):
            raise NonFinitePoint(f"non-finite coordinate in ({self.t!r}, {self.v!r})")

    def __iter__(self) -> Iterator[float]:
        yield self.t
        yield self.v

    def distance(self, other: Point) -> float:
        return math.hypot(self.t - other.t, self.v - other.v)


class Triangle(NamedTuple):
    a: Point
    b: Point
    c: Point


class Case(enum.Enum):
    INTERIOR = "interior"
    VERTEX_OPTIMAL = "vertex_optimal"
    COLLINEAR = "collinear"


@dataclass(frozen=True)
class FermatSolution:
    location: Point
    case: Case
    total_distance: float
    iterations: int = 0
    # index (0, 1, 2) of the minimizing vertex for VERTEX_OPTIMAL / COLLINEAR
    vertex: Optional[int] = None


@dataclass(frozen=True)
class UteshevForm:
    """Intermediate quantities of the closed-form solution."""

    r12_sq: float
    r13_sq: float
    r23_sq: float
    S: float
    d: float
    X: float
    Y: float

    @property
    def location(self) -> tuple[float, float]:
        k = 2.0 * self.d * SQRT3
        return self.X / k, self.Y / k


def triangle(a, b, c) -> Triangle:
    """Build a :class:`Triangle` from three ``(t, v)`` pairs or points."""
    return Triangle(*(p if isinstance(p, Point) else Point(*p) for p in (a, b, c)))


def objective(p: Point, tri: Triangle) -> float:
    """Sum of Euclidean distances from ``p`` to the three vertices."""
    return p.distance(tri.a) + p.distance(tri.b) + p.distance(tri.c)


def signed_area2(tri: Triangle) -> float:
    """Doubled signed area; positive for counter-clockwise vertex order."""
    (x1, y1), (x2, y2), (x3, y3) = tri
    return (x2 - x1) * (y3 - y1) - (x3 - x1) * (y2 - y1)


def _sides_sq(tri: Triangle) -> tuple[float, float, float]:
    (x1, y1), (x2, y2), (x3, y3) = tri
    r12 = (x1 - x2) ** 2 + (y1 - y2) ** 2
    r13 = (x1 - x3) ** 2 + (y1 - y3) ** 2
    r23 = (x2 - x3) ** 2 + (y2 - y3) ** 2
    return r12, r13, r23


def is_collinear(tri: Triangle) -> bool:
    return abs(signed_area2(tri)) <= COLLINEAR_RTOL * sum(_sides_sq(tri))


def angle_at(tri: Triangle, i: int) -> float:
    """Interior angle (radians) at vertex ``i``."""
    p = tri[i]
    q = tri[(i + 1) % 3]
    r = tri[(i + 2) % 3]
    ux, uy = q.t - p.t, q.v - p.v
    wx, wy = r.t - p.t, r.v - p.v
    return math.atan2(abs(ux * wy - uy * wx), ux * wx + uy * wy)


def max_vertex_angle(tri: Triangle) -> tuple[float, int]:
    """Largest interior angle and the index of its vertex (lowest index on ties).

    Raises DegenerateTriangle for collinear vertices.
    """
    if is_collinear(tri):
        raise DegenerateTriangle(f"collinear vertices {tuple(tri)}")
    angles = [angle_at(tri, i) for i in range(3)]
    top = max(angles)
    # angles equal up to rounding count as tied
    best = next(i for i in range(3) if angles[i] >= top - ANGLE_TIE_TOL)
    return angles[best], best


def uteshev_form(tri: Triangle) -> UteshevForm:
    (x1, y1), (x2, y2), (x3, y3) = tri
    r12, r13, r23 = _sides_sq(tri)
    S = x1 * y2 + x3 * y1 + x2 * y3 - x1 * y3 - x2 * y1 - x3 * y2
    abs_s = abs(S)
    sgn = math.copysign(1.0, S) if S else 0.0
    d = (r12 + r13 + r23) / 2.0 + abs_s * SQRT3
    p12 = x1 * x2 + y1 * y2
    p13 = x1 * x3 + y1 * y3
    p23 = x2 * x3 + y2 * y3
    X = (
        SQRT3 * (x1 * r23 + x2 * r13 + x3 * r12)
        + (x1 + x2 + x3) * abs_s
        + 3.0 * sgn * ((y2 - y1) * p12 + (y1 - y3) * p13 + (y3 - y2) * p23)
    )
    Y = (
        SQRT3 * (y1 * r23 + y2 * r13 + y3 * r12)
        + (y1 + y2 + y3) * abs_s
        - 3.0 * sgn * ((x2 - x1) * p12 + (x1 - x3) * p13 + (x3 - x2) * p23)
    )
    return UteshevForm(r12, r13, r23, S, d, X, Y)


def _centroid(tri: Triangle) -> tuple[float, float]:
    return (
        (tri.a.t + tri.b.t + tri.c.t) / 3.0,
        (tri.a.v + tri.b.v + tri.c.v) / 3.0,
    )


def _scale(tri: Triangle) -> float:
    return max(1.0, *(abs(x) for p in tri for x in p))


def fermat_point_analytic(tri: Triangle) -> FermatSolution:
    """Closed-form Fermat point for a triangle with all angles below 120 degrees.

    The form is evaluated on centroid-relative coordinates to keep the cubic
    numerators well conditioned, then shifted back.
    """
    angle, idx = max_vertex_angle(tri)
    if angle >= TWO_PI_OVER_3:
        raise PreconditionViolated(
            f"angle {math.degrees(angle):.6g} deg at vertex {idx} is not below 120 deg"
        )
    ct, cv = _centroid(tri)
    shifted = Triangle(*(Point(p.t - ct, p.v - cv) for p in tri))
    x, y = uteshev_form(shifted).location
    loc = Point(ct + x, cv + y)
    return FermatSolution(loc, Case.INTERIOR, objective(loc, tri))


def _vertex_solution(tri: Triangle, i: int, case: Case, iterations: int = 0) -> FermatSolution:
    loc = tri[i]
    return FermatSolution(loc, case, objective(loc, tri), iterations, vertex=i)


def _escape_vertex(tri: Triangle, i: int) -> tuple[float, float]:
    # descent direction at a non-optimal vertex: sum of unit vectors to the others
    p = tri[i]
    rx = ry = 0.0
    nearest = math.inf
    for j in range(3):
        if j == i:
            continue
        q = tri[j]
        dist = p.distance(q)
        nearest = min(nearest, dist)
        rx += (q.t - p.t) / dist
        ry += (q.v - p.v) / dist
    norm = math.hypot(rx, ry)
    ux, uy = rx / norm, ry / norm
    f0 = objective(p, tri)
    h = 0.1 * nearest
    while h > 0.0:
        cand = (p.t + h * ux, p.v + h * uy)
        if objective(Point(*cand), tri) < f0:
            return cand
        h *= 0.5
    raise NoConvergence(f"cannot leave vertex {i} of {tuple(tri)}")


def fermat_point_weiszfeld(
    tri: Triangle, tol: float = WEISZFELD_TOL, max_iter: int = WEISZFELD_MAX_ITER
) -> FermatSolution:
    """Iterative Fermat point, started from the centroid.

    Each step evaluates the Weiszfeld map and a Newton step on the (smooth,
    away from the vertices) objective, keeping whichever has the lower
    objective.  The Weiszfeld candidate never increases the objective, so
    the iteration stays monotone (up to rounding) while converging
    quadratically near an interior optimum.  Convergence is declared when a
    step is no longer than ``tol`` times the coordinate scale
    ``max(1, max|coordinate|)``.

    An iterate within that distance of a vertex triggers an analytic
    vertex-optimality test (angle >= 120 degrees): the vertex is returned if
    it passes, otherwise the iterate is pushed off along the descent
    direction and the iteration continues.
    """
    if tol <= 0 or max_iter < 1:
        raise ValueError("tol must be > 0 and max_iter >= 1")
    if is_collinear(tri):
        raise DegenerateTriangle(f"collinear vertices {tuple(tri)}")
    eps = tol * _scale(tri)
    pts = [(p.t, p.v) for p in tri]

    def f(x, y):
        return sum(math.hypot(x - px, y - py) for px, py in pts)

    y0, y1 = _centroid(tri)
    for k in range(1, max_iter + 1):
        dists = [math.hypot(y0 - px, y1 - py) for px, py in pts]
        near = min(range(3), key=dists.__getitem__)
        if dists[near] <= eps:
            if angle_at(tri, near) >= TWO_PI_OVER_3:
                return _vertex_solution(tri, near, Case.VERTEX_OPTIMAL, k - 1)
            y0, y1 = _escape_vertex(tri, near)
            continue

        sw = swx = swy = 0.0
        gx = gy = 0.0
        hxx = hxy = hyy = 0.0
        for (px, py), r in zip(pts, dists):
            w = 1.0 / r
            dx, dy = y0 - px, y1 - py
            sw += w
            swx += px * w
            swy += py * w
            gx += dx * w
            gy += dy * w
            r3 = r * r * r
            hxx += dy * dy / r3
            hyy += dx * dx / r3
            hxy -= dx * dy / r3
        nxt = (swx / sw, swy / sw)
        det = hxx * hyy - hxy * hxy
        if det > 0.0:
            newton = (y0 - (hyy * gx - hxy * gy) / det, y1 - (hxx * gy - hxy * gx) / det)
            f_w = f(*nxt)
            # ties within rounding go to Newton; a Weiszfeld step that is tiny
            # only because the objective is flat would stop the loop too early
            if f(*newton) <= f_w + 8.0 * EPS * f_w:
                nxt = newton
        step = math.hypot(nxt[0] - y0, nxt[1] - y1)
        y0, y1 = nxt
        if step <= eps:
            break
    else:
        raise NoConvergence(f"no convergence in {max_iter} iterations for {tuple(tri)}")

    dists = [math.hypot(y0 - px, y1 - py) for px, py in pts]
    near = min(range(3), key=dists.__getitem__)
    if dists[near] <= eps and angle_at(tri, near) >= TWO_PI_OVER_3:
        return _vertex_solution(tri, near, Case.VERTEX_OPTIMAL, k)
    loc = Point(y0, y1)
    return FermatSolution(loc, Case.INTERIOR, objective(loc, tri), k)


def _middle_index(tri: Triangle) -> int:
    # project onto the direction of the longest side and take the median
    r12, r13, r23 = _sides_sq(tri)
    i, j = max(((0, 1, r12), (0, 2, r13), (1, 2, r23)), key=lambda s: s[2])[:2]
    p, q = tri[i], tri[j]
    dt, dv = q.t - p.t, q.v - p.v
    proj = [(x.t - p.t) * dt + (x.v - p.v) * dv for x in tri]
    return sorted(range(3), key=proj.__getitem__)[1]


def fermat_point(tri: Triangle, *, cross_check: bool = True) -> FermatSolution:
    """Fermat-Torricelli point of ``tri`` with exact case handling.

    * collinear vertices: the middle vertex
    * an angle >= 120 degrees: that vertex
    * otherwise the closed form, verified against the iterative solver when
      ``cross_check`` is set
    """
    for i, j in ((0, 1), (0, 2), (1, 2)):
        if tri[i] == tri[j]:
            raise DuplicateVertices(f"vertices {i} and {j} coincide at {tuple(tri[i])}")
    if is_collinear(tri):
        return _vertex_solution(tri, _middle_index(tri), Case.COLLINEAR)
    angle, idx = max_vertex_angle(tri)
    if angle >= TWO_PI_OVER_3:
        return _vertex_solution(tri, idx, Case.VERTEX_OPTIMAL)
    sol = fermat_point_analytic(tri)
    if cross_check:
        ref = fermat_point_weiszfeld(tri)
        gap = sol.location.distance(ref.location)
        if gap > CROSS_CHECK_TOL * _scale(tri):
            raise SolverDisagreement(
                f"closed form and iteration differ by {gap:.3g} for {tuple(tri)}"
            )
    return sol


def contains(tri: Triangle, p: Point, slack: float = 0.0) -> bool:
    """True if ``p`` lies in the closed triangle, allowing ``slack`` distance outside."""
    s = signed_area2(tri)
    if s == 0.0:
        raise DegenerateTriangle(f"collinear vertices {tuple(tri)}")
    sign = 1.0 if s > 0 else -1.0
    for i in range(3):
        q, r = tri[i], tri[(i + 1) % 3]
        edge = math.hypot(r.t - q.t, r.v - q.v)
        cross = (r.t - q.t) * (p.v - q.v) - (r.v - q.v) * (p.t - q.t)
        if sign * cross < -slack * edge:
            return False
    return True


def strictly_inside(tri: Triangle, p: Point) -> bool:
    s = signed_area2(tri)
    sign = 1.0 if s > 0 else -1.0
    for i in range(3):
        q, r = tri[i], tri[(i + 1) % 3]
        cross = (r.t - q.t) * (p.v - q.v) - (r.v - q.v) * (p.t - q.t)
        if sign * cross <= 0.0:
            return False
    return True
