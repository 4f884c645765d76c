"""Cross-mode audits on seeded random parameter samples."""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass, field

from .. import closed_form, paper_mode, spin_core
from ..couplings import Coupling, CouplingKind
from ..errors import EvaluationOverflow
from ..results import Mode, NegativityResult, PtElements
from .sampling import SplitMix64

WORST_COUNT = 10
R_KINDS = (CouplingKind.INVERSE_SQUARE, CouplingKind.TRIGONOMETRIC, CouplingKind.HYPERBOLIC)


@dataclass(frozen=True)
class SampleBox:
    r: tuple[float, float]
    b: tuple[float, float] = (0.0, 4.0)
    t: tuple[float, float] = (0.05, 3.0)


DEFAULT_BOX = SampleBox(r=(0.3, 3.0))
TRIG_BOX = SampleBox(r=(0.2, math.pi - 0.2))


def default_box(kind: CouplingKind) -> SampleBox:
    return TRIG_BOX if kind is CouplingKind.TRIGONOMETRIC else DEFAULT_BOX


@dataclass(frozen=True)
class SamplePoint:
    kind: CouplingKind
    R: float
    B: float
    T: float


@dataclass(frozen=True)
class ValidationReport:
    mode_a: Mode
    mode_b: Mode
    samples: int
    max_abs_delta_n: float
    argmax: SamplePoint | None
    worst: list[tuple[SamplePoint, float]] = field(default_factory=list)
    sign_mismatch_count: int = 0
    overflow_count: int = 0

    def exceeds(self, tolerance: float) -> bool:
        return self.max_abs_delta_n > tolerance

    def to_dict(self) -> dict:
        def pt(p):
            return None if p is None else {"coupling": p.kind.value, "R": p.R, "B": p.B, "T": p.T}

        return {
            "mode_a": self.mode_a.value,
            "mode_b": self.mode_b.value,
            "samples": self.samples,
            "max_abs_delta_N": self.max_abs_delta_n,
            "argmax": pt(self.argmax),
            "worst": [{**pt(p), "delta_N": d} for p, d in self.worst],
            "sign_mismatch_count": self.sign_mismatch_count,
            "overflow_count": self.overflow_count,
        }


def evaluate_mode(mode: Mode, kind: CouplingKind, R: float, B: float, T: float) -> tuple[NegativityResult, PtElements]:
    """Negativity and block-layout PT elements of one point in one mode (j0 = 1)."""
    mode = Mode(mode)
    if mode is Mode.PUBLISHED:
        el = paper_mode.pt_elements_published(kind, R, B, T)
        return closed_form.negativity_from_elements(el, Mode.PUBLISHED), el
    J = Coupling(kind)(R)
    if mode is Mode.CANONICAL:
        el = closed_form.pt_elements(J, B, T)
        return closed_form.negativity_from_elements(el, Mode.CANONICAL), el
    return spin_core.oracle_point(J, B, T)


def _sign_differs(x: float, y: float) -> bool:
    return x != 0.0 and y != 0.0 and (x > 0) != (y > 0)


def draw_samples(kinds: Sequence[CouplingKind], count: int, seed: int,
                 box: SampleBox | None = None, max_ratio: float | None = None) -> list[SamplePoint]:
    """Seeded points, kinds taken round-robin; R, B, T drawn in that order.

    With ``max_ratio`` a draw is rejected (and redrawn) unless both
    |J|/(sqrt(2) T) and |B|/T stay at or below it.
    """
    rng = SplitMix64(seed)
    out = []
    for i in range(count):
        kind = CouplingKind(kinds[i % len(kinds)])
        bx = box or default_box(kind)
        while True:
            R = rng.uniform(*bx.r)
            B = rng.uniform(*bx.b)
            T = rng.uniform(*bx.t)
            if max_ratio is None:
                break
            J = Coupling(kind)(R)
            if abs(J) / (math.sqrt(2.0) * T) <= max_ratio and abs(B) / T <= max_ratio:
                break
        out.append(SamplePoint(kind, R, B, T))
    return out


def validate_modes(
    mode_a: Mode,
    mode_b: Mode,
    kinds: Sequence[CouplingKind] = R_KINDS,
    sample_count: int = 1000,
    seed: int = 0,
    box: SampleBox | None = None,
    max_ratio: float | None = None,
) -> ValidationReport:
    """Compare two evaluation modes on the same seeded sample set.

    Points where either mode overflows are counted and left out of the
    deltas. Coherence signs are compared separately, since negativity does
    not see them.
    """
    if sample_count < 1:
        raise ValueError("sample_count must be >= 1")
    mode_a, mode_b = Mode(mode_a), Mode(mode_b)
    deltas: list[tuple[float, int, SamplePoint]] = []
    sign_mismatch = overflow = 0
    for i, p in enumerate(draw_samples(kinds, sample_count, seed, box, max_ratio)):
        try:
            na, ea = evaluate_mode(mode_a, p.kind, p.R, p.B, p.T)
            nb, eb = evaluate_mode(mode_b, p.kind, p.R, p.B, p.T)
        except EvaluationOverflow:
            overflow += 1
            continue
        if _sign_differs(ea.a12, eb.a12) or _sign_differs(ea.a56, eb.a56):
            sign_mismatch += 1
        deltas.append((abs(na.negativity - nb.negativity), i, p))

    deltas.sort(key=lambda d: (-d[0], d[1]))
    worst = [(p, d) for d, _, p in deltas[:WORST_COUNT]]
    return ValidationReport(
        mode_a, mode_b, sample_count,
        max_abs_delta_n=worst[0][1] if worst else 0.0,
        argmax=worst[0][0] if worst else None,
        worst=worst,
        sign_mismatch_count=sign_mismatch,
        overflow_count=overflow,
    )
