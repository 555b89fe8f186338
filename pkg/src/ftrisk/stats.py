"""Dispersion statistics and forecast intervals.

Two families are computed side by side:

* classical: mean, population variance, sigma, coefficient of variation and
  the ``mean +/- k*sigma`` interval;
* Fermat-relative: the mean squared gap between a series and its Fermat-point
  image (F), its root (S), the mean of the smoothed values (M_phi), the
  ratio W = S / M_phi and the ``M_phi +/- 4S`` interval.

The Fermat-relative quantities use value-axis gaps and average the smoothed
values themselves; with those conventions the Czech 2011-2021 inflation
example gives S = 0.3507 and M_phi = 1.87425.
"""

from __future__ import annotations

import math
import statistics
from dataclasses import asdict, dataclass
from typing import Sequence

from .errors import EmptyInput, InsufficientData, LengthMismatch, ZeroMean, ZeroMPhi


@dataclass(frozen=True)
class ClassicalSummary:
    n: int
    mean: float
    variance: float
    sigma: float
    variation: float
    interval_k: float
    interval: tuple[float, float]

    @property
    def half_width(self) -> float:
        return self.interval_k * self.sigma

    def to_dict(self) -> dict:
        d = asdict(self)
        d["interval"] = list(self.interval)
        d["half_width"] = self.half_width
        return d


@dataclass(frozen=True)
class FTSummary:
    n: int
    F: float
    S: float
    M_phi: float
    W: float
    multiplier: float
    interval: tuple[float, float]

    @property
    def half_width(self) -> float:
        return self.multiplier * self.S

    def to_dict(self) -> dict:
        d = asdict(self)
        d["interval"] = list(self.interval)
        d["half_width"] = self.half_width
        return d


def classical_summary(values: Sequence[float], k: float = 3.0) -> ClassicalSummary:
    """Mean, population variance (divide by n), sigma, V = sigma/mean, mean +/- k*sigma."""
    values = [float(x) for x in values]
    n = len(values)
    if n < 2:
        raise InsufficientData(f"need at least 2 values, got {n}")
    mean = statistics.fmean(values)
    if mean == 0.0:
        raise ZeroMean("coefficient of variation is undefined for a zero mean")
    variance = statistics.pvariance(values, mu=mean)
    sigma = math.sqrt(variance)
    return ClassicalSummary(
        n=n,
        mean=mean,
        variance=variance,
        sigma=sigma,
        variation=sigma / mean,
        interval_k=k,
        interval=(mean - k * sigma, mean + k * sigma),
    )


def ft_summary(
    originals: Sequence[float], smoothed: Sequence[float], multiplier: float = 4.0
) -> FTSummary:
    """Fermat-relative statistics of matched (original, smoothed) value pairs."""
    if len(originals) != len(smoothed):
        raise LengthMismatch(f"{len(originals)} originals vs {len(smoothed)} smoothed values")
    n = len(originals)
    if n == 0:
        raise EmptyInput("no (original, smoothed) pairs")
    F = statistics.fmean((float(x) - float(p)) ** 2 for x, p in zip(originals, smoothed))
    S = math.sqrt(F)
    m_phi = statistics.fmean(float(p) for p in smoothed)
    if m_phi == 0.0:
        raise ZeroMPhi("W is undefined when the mean of the smoothed values is zero")
    return FTSummary(
        n=n,
        F=F,
        S=S,
        M_phi=m_phi,
        W=S / m_phi,
        multiplier=multiplier,
        interval=(m_phi - multiplier * S, m_phi + multiplier * S),
    )


def coverage(values: Sequence[float], interval: tuple[float, float]) -> tuple[float, int]:
    """Fraction and count of values inside the closed interval."""
    if not values:
        raise EmptyInput("no values")
    low, high = interval
    if low > high:
        raise ValueError(f"empty interval ({low}, {high})")
    inside = sum(1 for v in values if low <= v <= high)
    return inside / len(values), inside


@dataclass(frozen=True)
class Comparison:
    classical: ClassicalSummary
    ft: FTSummary
    width_ratio: float  # FT interval width over classical interval width

    def rows(self) -> list[dict]:
        c, f = self.classical, self.ft
        return [
            {
                "method": "classical",
                "dispersion": c.sigma,
                "center": c.mean,
                "half_width": c.half_width,
                "variation": c.variation,
                "interval": list(c.interval),
            },
            {
                "method": "fermat_torricelli",
                "dispersion": f.S,
                "center": f.M_phi,
                "half_width": f.half_width,
                "variation": f.W,
                "interval": list(f.interval),
            },
        ]

    def to_dict(self) -> dict:
        ratio = self.width_ratio if math.isfinite(self.width_ratio) else None
        return {"rows": self.rows(), "width_ratio": ratio}


def comparison_report(classical: ClassicalSummary, ft: FTSummary) -> Comparison:
    cw = classical.interval[1] - classical.interval[0]
    fw = ft.interval[1] - ft.interval[0]
    if cw == 0.0:
        ratio = 1.0 if fw == 0.0 else math.inf
    else:
        ratio = fw / cw
    return Comparison(classical, ft, ratio)
