"""Plateau detection on one-dimensional negativity profiles."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass


@dataclass(frozen=True)
class Plateau:
    start: float
    stop: float
    mean: float
    count: int


def detect_plateau(
    series: Sequence[tuple[float, float]],
    value_tol: float,
    epsilon: float,
    min_points: int = 3,
) -> list[Plateau]:
    """Maximal runs of consecutive points with N > epsilon and spread <= value_tol.

    Runs are grown greedily from the left. Runs shorter than ``min_points``
    (single transition points on a sudden-death edge, typically) are dropped.
    """
    xs = [float(x) for x, _ in series]
    ns = [float(n) for _, n in series]
    if len(xs) < 8:
        raise ValueError(f"need at least 8 points, got {len(xs)}")
    if any(b <= a for a, b in zip(xs, xs[1:])):
        raise ValueError("x values must be strictly increasing")

    out = []
    i, n = 0, len(xs)
    while i < n:
        if not ns[i] > epsilon:
            i += 1
            continue
        lo = hi = ns[i]
        j = i
        while j + 1 < n and ns[j + 1] > epsilon and max(hi, ns[j + 1]) - min(lo, ns[j + 1]) <= value_tol:
            j += 1
            lo, hi = min(lo, ns[j]), max(hi, ns[j])
        if j - i + 1 >= min_points:
            run = ns[i:j + 1]
            out.append(Plateau(xs[i], xs[j], sum(run) / len(run), len(run)))
        i = j + 1
    return out
