"""Locate epsilon-crossings of the negativity along one parameter axis."""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass

import numpy as np

from ..couplings import Coupling, CouplingKind
from ..errors import DomainError, EvaluationOverflow, NoThreshold
from ..results import Mode
from .sweep import _point

SCAN_POINTS = 64
REL_WIDTH = 1e-6
MAX_BISECTIONS = 200


@dataclass(frozen=True)
class CriticalPoint:
    """Epsilon-crossing of N along ``axis``.

    ``bracket[0]`` is the side where N > epsilon and ``bracket[1]`` the side
    where N <= epsilon; either may be the numerically larger one. A crossing
    in B is only ever an epsilon contour (the exact zero set depends on J/T
    alone), which ``contour_only`` records.
    """

    axis: str
    value: float
    epsilon: float
    bracket: tuple[float, float]
    iterations: int
    contour_only: bool = False


def find_threshold(
    coupling: Coupling,
    mode: Mode,
    axis: str,
    fixed: Mapping[str, float],
    bracket: tuple[float, float],
    epsilon: float = 1e-6,
) -> CriticalPoint:
    """Bisect the first crossing from the entangled end ``bracket[0]`` towards ``bracket[1]``.

    A 64-point scan picks the first adjacent pair with N > epsilon followed by
    N <= epsilon, which skips a leading low-temperature tail where N is
    exponentially small; points that raise a domain or overflow error are
    never used as crossing endpoints.
    """
    mode = Mode(mode)
    pos_name = "J" if coupling.kind is CouplingKind.CONSTANT else "R"
    if axis not in (pos_name, "T", "B"):
        raise ValueError(f"axis must be one of {pos_name}, T, B; got {axis!r}")
    if not epsilon > 0:
        raise ValueError(f"epsilon must be positive, got {epsilon!r}")
    params = dict(fixed)
    params.pop(axis, None)
    missing = {pos_name, "T", "B"} - {axis} - set(params)
    if missing:
        raise ValueError(f"missing fixed values for {sorted(missing)}")

    def n_at(v: float) -> float:
        p = {**params, axis: v}
        return _point(coupling, mode, p[pos_name], p["B"], p["T"])[1]

    def n_or_none(v: float):
        try:
            return n_at(v)
        except (DomainError, EvaluationOverflow):
            return None

    lo, hi = (float(b) for b in bracket)
    xs = np.linspace(lo, hi, SCAN_POINTS).tolist()
    ns = [n_or_none(x) for x in xs]
    for i in range(SCAN_POINTS - 1):
        if ns[i] is not None and ns[i + 1] is not None and ns[i] > epsilon and ns[i + 1] <= epsilon:
            a, b = xs[i], xs[i + 1]
            break
    else:
        raise NoThreshold(
            f"no crossing of N = {epsilon:g} along {axis} in [{lo!r}, {hi!r}] for {coupling.kind.value}"
        )

    iterations = 0
    while abs(b - a) > REL_WIDTH * max(1.0, abs(0.5 * (a + b))) and iterations < MAX_BISECTIONS:
        m = 0.5 * (a + b)
        if n_at(m) > epsilon:
            a = m
        else:
            b = m
        iterations += 1
    return CriticalPoint(axis, 0.5 * (a + b), epsilon, (a, b), iterations, contour_only=axis == "B")
