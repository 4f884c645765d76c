"""
Analytic spectrum, partially transposed Gibbs elements and negativity as
explicit functions of (J, B, T).

All three coupling laws describe the same two-site problem once J = J(R) is
known, so the formulas are written once in terms of J. Every Boltzmann
weight is evaluated relative to the largest exponent, which keeps the
elements finite for any T > 0 and |J|/T far beyond the binary64 range of
cosh/sinh. Coherences carry the sign of J (positive for J > 0).

The functions accept numpy arrays and broadcast; scalar calls return floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .results import Mode, NegativityResult, PtElements

SQRT2 = math.sqrt(2.0)
GOLDEN = (1.0 + math.sqrt(5.0)) / 2.0
# N > 0 exactly when cosh(|J| / (sqrt(2) T)) exceeds the golden ratio
X_STAR = math.acosh(GOLDEN)

_ZERO_REL = 1e-16

SPECTRUM_LABELS = ("m=+3/2", "m=-3/2", "m=+1/2,sym", "m=+1/2,anti", "m=-1/2,sym", "m=-1/2,anti")


@dataclass(frozen=True)
class Spectrum:
    energies: tuple[float, ...]
    labels: tuple[str, ...] = SPECTRUM_LABELS

    def as_dict(self) -> dict[str, float]:
        return dict(zip(self.labels, self.energies))


def spectrum(J: float, B: float) -> Spectrum:
    """Eigenvalues of the two-site Hamiltonian, labelled by total S^z.

    ``sym``/``anti`` refer to the even/odd combination of the two product
    states sharing that magnetisation; the even one is lower for J > 0.
    """
    if not (math.isfinite(J) and math.isfinite(B)):
        raise DomainError(f"J and B must be finite, got J={J!r}, B={B!r}")
    g = J / SQRT2
    return Spectrum((1.5 * B, -1.5 * B, 0.5 * B - g, 0.5 * B + g, -0.5 * B - g, -0.5 * B + g))


def _check_temperature(T):
    t = np.asarray(T, dtype=float)
    if not np.all((t > 0) & np.isfinite(t)):
        raise DomainError(f"temperature must be positive and finite, got {T!r}")


def _shifted(J, B, T):
    """Normalised PT elements and ln Z as arrays, computed in shifted form."""
    _check_temperature(T)
    J, B, T = np.broadcast_arrays(*(np.asarray(v, dtype=float) for v in (J, B, T)))
    if not (np.all(np.isfinite(J)) and np.all(np.isfinite(B))):
        raise DomainError("J and B must be finite")
    u = B / (2.0 * T)
    x = np.abs(J) / (SQRT2 * T)
    top = np.maximum(3.0 * np.abs(u), np.abs(u) + x)

    e_pp = np.exp(3.0 * u - top)  # |-1/2,-1>, energy -3B/2
    e_mm = np.exp(-3.0 * u - top)  # |1/2,1>
    e_lo = np.exp(-u + x - top)  # magnetisation +1/2 pair, leading weight
    e_hi = np.exp(u + x - top)  # magnetisation -1/2 pair
    tail = np.exp(-2.0 * x)
    sh = -np.expm1(-2.0 * x)

    s = e_pp + e_mm + (e_lo + e_hi) * (1.0 + tail)
    sign = np.sign(J)
    return {
        "a11": e_pp / s,
        "a22": e_lo * (1.0 + tail) / (2.0 * s),
        "a44": e_hi * (1.0 + tail) / (2.0 * s),
        "a66": e_mm / s,
        "a12": sign * e_hi * sh / (2.0 * s),
        "a56": sign * e_lo * sh / (2.0 * s),
        "log_z": top + np.log(s),
    }


def block_min_eigen(d1, d2, od):
    """Smaller eigenvalue of [[d1, od], [od, d2]] if it is negative, else 0.

    Values within 1e-16 (d1 + d2) of zero count as zero, so states exactly on
    the PPT boundary report N = 0.
    """
    d1, d2, od = (np.asarray(v, dtype=float) for v in (d1, d2, od))
    lam = 0.5 * (d1 + d2) - np.hypot(0.5 * (d1 - d2), od)
    return np.where(lam < -_ZERO_REL * np.abs(d1 + d2), lam, 0.0)


def negativity_arrays(J, B, T):
    """Vectorised (N, neg_block_12, neg_block_56, log_z)."""
    el = _shifted(J, B, T)
    b12 = block_min_eigen(el["a11"], el["a22"], el["a12"])
    b56 = block_min_eigen(el["a44"], el["a66"], el["a56"])
    return np.abs(b12) + np.abs(b56), b12, b56, el["log_z"]


def pt_elements(J: float, B: float, T: float) -> PtElements:
    el = {k: float(v) for k, v in _shifted(J, B, T).items()}
    return PtElements(
        a11=el["a11"], a22=el["a22"], a33=el["a22"],
        a44=el["a44"], a55=el["a44"], a66=el["a66"],
        a12=el["a12"], a56=el["a56"], log_z=el["log_z"],
    )


def log_partition(J: float, B: float, T: float) -> float:
    return float(_shifted(J, B, T)["log_z"])


def negativity_closed(J: float, B: float, T: float) -> NegativityResult:
    n, b12, b56, _ = negativity_arrays(J, B, T)
    return NegativityResult(float(n), float(b12), float(b56), Mode.CANONICAL)


def negativity_from_elements(el: PtElements, mode: Mode) -> NegativityResult:
    """Block rule applied to an arbitrary element set (no validity assumed)."""
    b12 = float(block_min_eigen(el.a11, el.a22, el.a12))
    b56 = float(block_min_eigen(el.a55, el.a66, el.a56))
    return NegativityResult(abs(b12) + abs(b56), b12, b56, mode)


def vanishing_temperature(J: float) -> float:
    """Temperature above which N is exactly zero for coupling J (any B)."""
    return abs(J) / (SQRT2 * X_STAR)
