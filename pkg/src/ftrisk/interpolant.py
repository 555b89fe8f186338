"""Complex exponential sums and the published Czech-inflation interpolant."""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NonRealResult
from .geometry import Point

IMAG_RTOL = 1e-9


@dataclass(frozen=True)
class ExponentialSum:
    """``sum_j amplitude_j * exp(rate_j * t)`` over ``terms``."""

    terms: tuple[tuple[complex, complex], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "terms", tuple((complex(a), complex(r)) for a, r in self.terms)
        )

    def __add__(self, other: ExponentialSum) -> ExponentialSum:
        return ExponentialSum(self.terms + other.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def conjugate(self) -> ExponentialSum:
        return ExponentialSum(tuple((a.conjugate(), r.conjugate()) for a, r in self.terms))

    def is_conjugate_closed(self) -> bool:
        """True if every term with an imaginary part has its conjugate partner."""
        pending = [t for t in self.terms if t[0].imag or t[1].imag]
        while pending:
            a, r = pending.pop()
            partner = (a.conjugate(), r.conjugate())
            if partner not in pending:
                return False
            pending.remove(partner)
        return True


def czech_interpolant() -> ExponentialSum:
    """The ten-term interpolant of the Czech 2011-2021 Fermat points (t = year number)."""
    return ExponentialSum(
        (
            (0.264901377876643, 0.249672956416996),
            (
                complex(-0.007782663831297, 0.015129431149835),
                complex(0.076090999247734, 2.511250329378980),
            ),
            (
                complex(-0.007782663831297, -0.015129431149835),
                complex(0.076090999247734, -2.511250329378980),
            ),
            (
                complex(-1.671150941557596, -0.869131660330525),
                complex(-0.303576461438207, 1.138618581934044),
            ),
            (
                complex(-1.671150941557596, 0.869131660330525),
                complex(-0.303576461438207, -1.138618581934044),
            ),
            (-0.014659833689592, -0.249672956416996),
            (
                complex(0.138184785734736, -0.180858361988375),
                complex(-0.076090999247734, -2.511250329378980),
            ),
            (
                complex(0.138184785734736, 0.180858361988375),
                complex(-0.076090999247734, 2.511250329378980),
            ),
            (
                complex(0.003015325281862, -0.001937822578385),
                complex(0.303576461438207, -1.138618581934044),
            ),
            (
                complex(0.003015325281862, 0.001937822578385),
                complex(0.303576461438207, 1.138618581934044),
            ),
        )
    )


def evaluate_complex(f: ExponentialSum, t: float) -> complex:
    return sum((a * cmath.exp(r * t) for a, r in f.terms), 0j)


def evaluate(f: ExponentialSum, t: float) -> float:
    """Real value of ``f`` at ``t``.

    Raises NonRealResult if the imaginary part exceeds 1e-9 * max(1, |real|),
    which means the terms are not closed under conjugation.
    """
    z = evaluate_complex(f, t)
    if abs(z.imag) > IMAG_RTOL * max(1.0, abs(z.real)):
        raise NonRealResult(f"imaginary residual {z.imag:.3g} at t={t}")
    return z.real


def sample(f: ExponentialSum, start: float = 1.0, stop: float = 11.0, step: float = 0.05) -> list[Point]:
    n = int(round((stop - start) / step))
    return [Point(start + i * step, evaluate(f, start + i * step)) for i in range(n + 1)]


@dataclass(frozen=True)
class Residual:
    t: float
    expected: float
    actual: float
    residual: float


@dataclass(frozen=True)
class ResidualReport:
    rows: tuple[Residual, ...]

    @property
    def max_abs(self) -> float:
        return max((abs(r.residual) for r in self.rows), default=0.0)

    def to_dict(self) -> dict:
        return {
            "rows": [vars(r) for r in self.rows],
            "max_abs_residual": self.max_abs,
        }


def residual_report(f: ExponentialSum, points: Iterable[Point] | Sequence[Point]) -> ResidualReport:
    rows = []
    for p in points:
        actual = evaluate(f, p.t)
        rows.append(Residual(p.t, p.v, actual, actual - p.v))
    return ResidualReport(tuple(rows))
