"""Sutherland-Calogero-Moser coupling laws J(R)."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

SINGULAR_TOL = 1e-12


class CouplingKind(str, enum.Enum):
    INVERSE_SQUARE = "inverse-square"
    TRIGONOMETRIC = "trig"
    HYPERBOLIC = "hyperbolic"
    CONSTANT = "constant"


class Reason(str, enum.Enum):
    OK = "Ok"
    SINGULAR = "Singular"
    NON_FINITE = "NonFinite"


@dataclass(frozen=True)
class DomainVerdict:
    ok: bool
    reason: Reason


OK = DomainVerdict(True, Reason.OK)


@dataclass(frozen=True)
class Coupling:
    kind: CouplingKind
    j0: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "kind", CouplingKind(self.kind))
        if not math.isfinite(self.j0):
            raise ValueError(f"j0 must be finite, got {self.j0}")

    def __call__(self, R: float) -> float:
        return coupling_strength(self, R)


def _singular_mask(kind: CouplingKind, r: np.ndarray) -> np.ndarray:
    if kind is CouplingKind.TRIGONOMETRIC:
        return np.abs(r - np.pi * np.round(r / np.pi)) <= SINGULAR_TOL
    if kind in (CouplingKind.INVERSE_SQUARE, CouplingKind.HYPERBOLIC):
        return np.abs(r) <= SINGULAR_TOL
    return np.zeros(r.shape, dtype=bool)


def domain_check(c: Coupling, R: float) -> DomainVerdict:
    if not math.isfinite(R):
        return DomainVerdict(False, Reason.NON_FINITE)
    if _singular_mask(c.kind, np.asarray(float(R)))[()]:
        return DomainVerdict(False, Reason.SINGULAR)
    return OK


def strengths(c: Coupling, R) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised J(R). Returns (J, valid); J is NaN wherever ``valid`` is False."""
    r = np.abs(np.asarray(R, dtype=float))  # every law is even in R
    valid = np.isfinite(r) & ~_singular_mask(c.kind, r)
    rs = np.where(valid, r, 1.0)
    with np.errstate(over="ignore"):
        if c.kind is CouplingKind.INVERSE_SQUARE:
            j = c.j0 / rs**2
        elif c.kind is CouplingKind.TRIGONOMETRIC:
            j = c.j0 / np.sin(rs) ** 2
        elif c.kind is CouplingKind.HYPERBOLIC:
            # sinh overflows past R ~ 710; 1/sinh^2 -> 4 exp(-2R) there
            big = rs > 20.0
            j = np.where(big, 4.0 * c.j0 * np.exp(-2.0 * rs), c.j0 / np.sinh(np.where(big, 1.0, rs)) ** 2)
        else:
            j = np.full(rs.shape, float(c.j0))
    valid &= np.isfinite(j)
    return np.where(valid, j, np.nan), valid


def coupling_strength(c: Coupling, R: float) -> float:
    verdict = domain_check(c, R)
    if not verdict.ok:
        raise DomainError(f"{c.kind.value} coupling is {verdict.reason.value} at R={R!r}", verdict)
    j, valid = strengths(c, R)
    if not valid[()]:
        verdict = DomainVerdict(False, Reason.NON_FINITE)
        raise DomainError(f"{c.kind.value} coupling is not finite at R={R!r}", verdict)
    return float(j)
