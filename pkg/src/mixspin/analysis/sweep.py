"""Grid evaluation of the negativity over (R or J, T, B)."""

from __future__ import annotations

import enum
import math
from collections.abc import Mapping, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .. import closed_form, paper_mode, spin_core
from ..couplings import Coupling, CouplingKind, strengths
from ..errors import DomainError, EvaluationOverflow
from ..results import Mode

# Grid points are evaluated in chunks of this fixed size whatever the worker
# count, so the floating-point work per point never depends on parallelism.
CHUNK = 4096


class Status(str, enum.Enum):
    OK = "Ok"
    DOMAIN_ERROR = "DomainError"
    EVALUATION_OVERFLOW = "EvaluationOverflow"


_STATUS_BY_CODE = (Status.OK, Status.DOMAIN_ERROR, Status.EVALUATION_OVERFLOW)


@dataclass(frozen=True)
class Axis:
    name: str
    values: tuple[float, ...]
    descriptor: str = ""

    @classmethod
    def explicit(cls, name: str, values: Sequence[float]) -> Axis:
        vals = tuple(float(v) for v in values)
        if not vals:
            raise ValueError(f"axis {name} has no values")
        return cls(name, vals, "{" + ", ".join(repr(v) for v in vals) + "}")

    @classmethod
    def linear(cls, name: str, start: float, stop: float, count: int) -> Axis:
        _check_range(name, start, stop, count)
        vals = tuple(float(v) for v in np.linspace(start, stop, count))
        return cls(name, vals, f"[{start!r}, {stop!r}] x{count}")

    @classmethod
    def open_start(cls, name: str, start: float, stop: float, count: int) -> Axis:
        """``count`` evenly spaced points on (start, stop]."""
        _check_range(name, start, stop, count)
        vals = tuple(float(v) for v in np.linspace(start, stop, count + 1)[1:])
        return cls(name, vals, f"({start!r}, {stop!r}] x{count}")

    @classmethod
    def open_both(cls, name: str, start: float, stop: float, count: int) -> Axis:
        """``count`` evenly spaced interior points of (start, stop)."""
        _check_range(name, start, stop, count)
        vals = tuple(float(v) for v in np.linspace(start, stop, count + 2)[1:-1])
        return cls(name, vals, f"({start!r}, {stop!r}) x{count}")

    def __len__(self) -> int:
        return len(self.values)


def _check_range(name, start, stop, count):
    if count < 2:
        raise ValueError(f"axis {name}: range count must be >= 2, got {count}")
    if not start < stop:
        raise ValueError(f"axis {name}: range start {start!r} must be below stop {stop!r}")


@dataclass(frozen=True)
class SweepSpec:
    coupling: Coupling
    mode: Mode
    axes: tuple[Axis, ...]
    fixed: Mapping[str, float] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "mode", Mode(self.mode))
        object.__setattr__(self, "axes", tuple(self.axes))
        object.__setattr__(self, "fixed", {k: float(v) for k, v in self.fixed.items()})
        self.validate()

    @property
    def position_name(self) -> str:
        return "J" if self.coupling.kind is CouplingKind.CONSTANT else "R"

    def validate(self):
        names = [a.name for a in self.axes]
        required = {self.position_name, "T", "B"}
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate axis names: {names}")
        overlap = set(names) & set(self.fixed)
        if overlap:
            raise ValueError(f"parameters both swept and fixed: {sorted(overlap)}")
        given = set(names) | set(self.fixed)
        if given != required:
            raise ValueError(f"sweep must cover exactly {sorted(required)}, got {sorted(given)}")
        if not all(t > 0 and math.isfinite(t) for t in self.values_of("T")):
            raise DomainError("all temperatures must be positive and finite")
        if self.mode is Mode.PUBLISHED:
            if self.coupling.kind is CouplingKind.CONSTANT:
                raise ValueError("published mode needs an R-dependent coupling")
            if self.coupling.j0 != 1.0:
                raise ValueError("published formulas are printed for j0 = 1 only")

    def values_of(self, name: str) -> tuple[float, ...]:
        for a in self.axes:
            if a.name == name:
                return a.values
        return (self.fixed[name],)

    @property
    def size(self) -> int:
        return math.prod(len(a) for a in self.axes)

    def grid(self) -> dict[str, np.ndarray]:
        """Flattened coordinate columns, first declared axis outermost."""
        if self.axes:
            mesh = np.meshgrid(*(np.array(a.values) for a in self.axes), indexing="ij")
            cols = {a.name: m.ravel() for a, m in zip(self.axes, mesh)}
        else:
            cols = {}
        n = self.size
        for k, v in self.fixed.items():
            cols[k] = np.full(n, v)
        return cols


@dataclass(frozen=True)
class SweepRecord:
    coupling: CouplingKind
    mode: Mode
    R: float | None
    J: float | None
    B: float
    T: float
    negativity: float | None
    log_z: float | None
    neg_block_12: float | None
    neg_block_56: float | None
    status: Status


def _point(coupling: Coupling, mode: Mode, pos: float, B: float, T: float):
    """(J, N, log_z, b12, b56) at one point; raises DomainError / EvaluationOverflow."""
    if coupling.kind is CouplingKind.CONSTANT:
        J = pos
    else:
        J = coupling(pos)
    if mode is Mode.CANONICAL:
        n, b12, b56, lz = closed_form.negativity_arrays(J, B, T)
        return J, float(n), float(lz), float(b12), float(b56)
    if mode is Mode.PUBLISHED:
        el = paper_mode.pt_elements_published(coupling.kind, pos, B, T)
        res = closed_form.negativity_from_elements(el, Mode.PUBLISHED)
        return J, res.negativity, el.log_z, res.neg_block_12, res.neg_block_56
    res, el = spin_core.oracle_point(J, B, T)
    return J, res.negativity, el.log_z, res.neg_block_12, res.neg_block_56


def evaluate_point(coupling: Coupling, mode: Mode, pos: float, B: float, T: float) -> SweepRecord:
    """One record; ``pos`` is R, or J for the constant coupling."""
    mode = Mode(mode)
    is_const = coupling.kind is CouplingKind.CONSTANT
    R = None if is_const else pos
    try:
        J, n, lz, b12, b56 = _point(coupling, mode, pos, B, T)
    except DomainError:
        return SweepRecord(coupling.kind, mode, R, pos if is_const else None, B, T,
                           None, None, None, None, Status.DOMAIN_ERROR)
    except EvaluationOverflow:
        J = pos if is_const else coupling(pos)
        return SweepRecord(coupling.kind, mode, R, J, B, T, None, None, None, None,
                           Status.EVALUATION_OVERFLOW)
    return SweepRecord(coupling.kind, mode, R, J, B, T, n, lz, b12, b56, Status.OK)


def _evaluate_chunk(args):
    coupling, mode, pos, b, t = args
    n = len(pos)
    out = {k: np.full(n, np.nan) for k in ("J", "N", "log_z", "b12", "b56")}
    status = np.zeros(n, dtype=np.int8)
    if mode is Mode.CANONICAL:
        if coupling.kind is CouplingKind.CONSTANT:
            j, ok = pos.copy(), np.isfinite(pos)
        else:
            j, ok = strengths(coupling, pos)
        out["J"] = j
        status[~ok] = 1
        if ok.any():
            nn, b12, b56, lz = closed_form.negativity_arrays(j[ok], b[ok], t[ok])
            out["N"][ok], out["b12"][ok], out["b56"][ok], out["log_z"][ok] = nn, b12, b56, lz
        return out, status
    for i in range(n):
        rec = evaluate_point(coupling, mode, float(pos[i]), float(b[i]), float(t[i]))
        status[i] = _STATUS_BY_CODE.index(rec.status)
        if rec.J is not None:
            out["J"][i] = rec.J
        if rec.status is Status.OK:
            out["N"][i], out["log_z"][i] = rec.negativity, rec.log_z
            out["b12"][i], out["b56"][i] = rec.neg_block_12, rec.neg_block_56
    return out, status


def _opt(v: float) -> float | None:
    return None if math.isnan(v) else v


def sweep(spec: SweepSpec, workers: int = 1) -> list[SweepRecord]:
    """Evaluate every grid point of ``spec`` in row-major order of its axes."""
    spec.validate()
    cols = spec.grid()
    pos, b, t = cols[spec.position_name], cols["B"], cols["T"]
    chunks = [
        (spec.coupling, spec.mode, pos[i:i + CHUNK], b[i:i + CHUNK], t[i:i + CHUNK])
        for i in range(0, len(pos), CHUNK)
    ]
    if workers > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_evaluate_chunk, chunks))
    else:
        results = [_evaluate_chunk(c) for c in chunks]

    is_const = spec.coupling.kind is CouplingKind.CONSTANT
    kind, mode = spec.coupling.kind, spec.mode
    records = []
    offset = 0
    for out, status in results:
        cols_out = [out[k].tolist() for k in ("J", "N", "log_z", "b12", "b56")]
        for i, (j, nn, lz, b12, b56) in enumerate(zip(*cols_out)):
            k = offset + i
            p = float(pos[k])
            st = _STATUS_BY_CODE[status[i]]
            ok = st is Status.OK
            records.append(SweepRecord(
                kind, mode,
                None if is_const else p,
                p if is_const else _opt(j),
                float(b[k]), float(t[k]),
                nn if ok else None, lz if ok else None,
                b12 if ok else None, b56 if ok else None,
                st,
            ))
        offset += len(status)
    return records
