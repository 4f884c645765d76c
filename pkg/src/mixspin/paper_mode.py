"""
The published per-law element formulas, evaluated exactly as printed.

Nothing is rescaled or re-signed here: the point is to audit the printed
expressions against the Gibbs state, including where their unshifted
exponentials leave the binary64 range. Such points raise
:class:`EvaluationOverflow` instead of returning inf/nan.

J0 is fixed to 1, as in the published expressions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .closed_form import negativity_from_elements
from .couplings import Coupling, CouplingKind, domain_check
from .errors import DomainError, EvaluationOverflow
from .results import Mode, NegativityResult, PtElements

SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class PublishedIntermediates:
    kind: CouplingKind
    varphi: float | None = None
    delta1: float | None = None
    delta2: float | None = None
    mu_minus: float | None = None
    mu_plus: float | None = None
    eta: float | None = None
    xi: float | None = None


def _check(kind, R: float, T: float) -> CouplingKind:
    kind = CouplingKind(kind)
    if kind is CouplingKind.CONSTANT:
        raise ValueError("published formulas exist only for the three R-dependent laws")
    if not (T > 0 and math.isfinite(T)):
        raise DomainError(f"temperature must be positive and finite, got {T!r}")
    verdict = domain_check(Coupling(kind), R)
    if not verdict.ok:
        raise DomainError(f"{kind.value} coupling is {verdict.reason.value} at R={R!r}", verdict)
    return kind


def _finite(*values):
    if not all(math.isfinite(v) for v in values):
        raise EvaluationOverflow("published expression is not finite in binary64")


def published_intermediates(kind, R: float, B: float, T: float) -> PublishedIntermediates:
    kind = _check(kind, R, T)
    try:
        if kind is CouplingKind.TRIGONOMETRIC:
            csc4 = 1.0 / math.sin(R) ** 4
            varphi = 3.0 - 4.0 * math.cos(2 * R) + math.cos(4 * R)
            delta1 = B * math.cos(2 * R) * csc4 / (2 * T)
            delta2 = B * (3 + math.cos(4 * R)) * csc4 / (8 * T)
            arg = csc4 * (3 * B + 4 * B * math.cos(2 * R) + B * math.cos(4 * R)
                          + 8 * SQRT2 * math.sqrt(math.sin(R) ** 4)) / (16 * T)
            out = PublishedIntermediates(kind, varphi=varphi, delta1=delta1, delta2=delta2,
                                         mu_minus=math.exp(-arg), mu_plus=math.exp(arg))
            _finite(varphi, delta1, delta2, out.mu_minus, out.mu_plus)
            return out
        if kind is CouplingKind.HYPERBOLIC:
            sh4 = math.sinh(R) ** 4
            eta = math.exp(-(B - SQRT2 * (1.0 / math.sinh(R)) ** 4 * math.sqrt(sh4)) / (2 * T))
            xi = math.exp(-(B + SQRT2 / math.sqrt(sh4)) / (2 * T))
            _finite(eta, xi)
            return PublishedIntermediates(kind, eta=eta, xi=xi)
    except (OverflowError, ZeroDivisionError) as exc:
        raise EvaluationOverflow(str(exc)) from exc
    return PublishedIntermediates(kind)


def spectrum_published(kind, R: float, B: float) -> tuple[float, ...]:
    """(3B/2, -3B/2, W+, W-, Q+, Q-) from the printed per-law eigenvalues."""
    kind = _check(kind, R, 1.0)
    if kind is CouplingKind.INVERSE_SQUARE:
        g = SQRT2 / (2 * R**2)
        w = (-B / 2 + g, -B / 2 - g)
        q = (B / 2 + g, B / 2 - g)
    elif kind is CouplingKind.TRIGONOMETRIC:
        phi = 3.0 - 4.0 * math.cos(2 * R) + math.cos(4 * R)
        w = ((-B * phi + 4 * math.sqrt(phi)) / (2 * phi), (B * phi + 4 * math.sqrt(phi)) / (2 * phi))
        q = ((-B * phi - 4 * math.sqrt(phi)) / (2 * phi), (B * phi - 4 * math.sqrt(phi)) / (2 * phi))
    else:
        g = SQRT2 / math.sqrt(math.sinh(R) ** 4)
        w = ((B + g) / 2, (-B + g) / 2)
        q = ((B - g) / 2, (-B - g) / 2)
    return (1.5 * B, -1.5 * B, *w, *q)


def _type_i(R, B, T):
    g = 1.0 / (SQRT2 * R**2 * T)
    z = 2 * (math.cosh(3 * B / (2 * T)) + 2 * math.cosh(B / (2 * T)) * math.cosh(g))
    a11 = math.exp(3 * B / (2 * T)) / z
    a12 = -math.exp(B / (2 * T)) * math.sinh(g) / z
    a22 = math.exp(-B / (2 * T)) * math.cosh(g) / z
    a44 = math.exp(B / (2 * T)) * math.cosh(g) / z
    a56 = -math.exp(-B / (2 * T)) * math.sinh(g) / z
    a66 = math.exp(-3 * B / (2 * T)) / z
    return a11, a12, a22, a44, a56, a66, z


def _type_ii(R, B, T):
    p = published_intermediates(CouplingKind.TRIGONOMETRIC, R, B, T)
    d1, d2, mm, mp = p.delta1, p.delta2, p.mu_minus, p.mu_plus
    e = math.exp
    z = mm * e(-(d1 + d2)) * (
        e(d1 + 2 * d2) + e(2 * d1 + d2) + mp * e((5 * d1 - d2) / 2)
        + mp**2 * e(d2) + mp * e((-d1 + 5 * d2) / 2) + mp**2 * e(d1)
    )
    a11 = e(3 * B / (2 * T)) / z
    a12 = mm / (2 * z) * (-e(-d1) + e(-d2))
    a22 = mp / (2 * z) * (e(d1) + e(d2))
    a44 = mm / (2 * z) * (e(-d1) + e(-d2))
    a56 = mp / (2 * z) * (e(d1) - e(d2))
    a66 = e(-3 * B / (2 * T)) / z
    return a11, a12, a22, a44, a56, a66, z


def _type_iii(R, B, T):
    p = published_intermediates(CouplingKind.HYPERBOLIC, R, B, T)
    eta, xi = p.eta, p.xi
    eb = math.exp(B / T)
    z = 2 * math.cosh(3 * B / (2 * T)) + (1 + eb) * (xi + eta)
    a11 = math.exp(3 * B / (2 * T)) / z
    a12 = eta / (2 * z) * (1 - eb)
    a22 = xi / (2 * z) * (1 + eb)
    a44 = eta / (2 * z) * (1 + eb)
    a56 = xi / (2 * z) * (1 - eb)
    a66 = math.exp(-3 * B / (2 * T)) / z
    return a11, a12, a22, a44, a56, a66, z


_FORMULAS = {
    CouplingKind.INVERSE_SQUARE: _type_i,
    CouplingKind.TRIGONOMETRIC: _type_ii,
    CouplingKind.HYPERBOLIC: _type_iii,
}


def pt_elements_published(kind, R: float, B: float, T: float) -> PtElements:
    kind = _check(kind, R, T)
    if not math.isfinite(B):
        raise DomainError(f"B must be finite, got {B!r}")
    try:
        a11, a12, a22, a44, a56, a66, z = _FORMULAS[kind](R, B, T)
    except (OverflowError, ZeroDivisionError) as exc:
        raise EvaluationOverflow(f"{kind.value} published elements at R={R!r}, B={B!r}, T={T!r}: {exc}") from exc
    _finite(a11, a12, a22, a44, a56, a66, z)
    if z <= 0.0:
        # every printed partition function is a sum of exponentials; only underflow gets here
        raise EvaluationOverflow(f"printed partition function underflowed at R={R!r}, B={B!r}, T={T!r}")
    log_z = math.log(z)
    return PtElements(a11=a11, a22=a22, a33=a22, a44=a44, a55=a44, a66=a66, a12=a12, a56=a56, log_z=log_z)


def negativity_published(kind, R: float, B: float, T: float) -> NegativityResult:
    """Block-eigenvalue negativity of the printed elements; no validity bound applied."""
    return negativity_from_elements(pt_elements_published(kind, R, B, T), Mode.PUBLISHED)
