"""
Exact matrix backend for the two-site (1/2, 1) XY model.

Everything here works on dense 6x6 real matrices in the product basis
|s_z> (x) |S_z> with s_z in (+1/2, -1/2) outer and S_z in (+1, 0, -1) inner:

    index  0        1        2         3         4         5
           |+,+1>   |+,0>    |+,-1>    |-,+1>    |-,0>     |-,-1>

The pipeline build_hamiltonian -> gibbs_state -> partial_transpose ->
negativity_of_state is the brute-force reference that the closed forms in
``closed_form`` and ``paper_mode`` are checked against. It deliberately
shares no formulas with them.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction

import numpy as np

from .errors import ContractError, ConvergenceError, DomainError
from .results import PAPER_ORDER, Mode, NegativityResult, PtElements

JACOBI_TOL = 1e-14
JACOBI_MAX_SWEEPS = 100


class Basis(enum.Enum):
    PRODUCT = "product"
    PAPER = "paper"


@lru_cache(maxsize=None)
def _lower_indices(n: int):
    return np.tril_indices(n, -1)


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=float)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class SpinOps:
    """Spin matrices with hbar = 1; ``sy_imag`` is sy / i (a real matrix)."""

    s: Fraction
    sx: np.ndarray
    sy_imag: np.ndarray
    sz: np.ndarray

    @property
    def dim(self) -> int:
        return int(2 * self.s + 1)


@dataclass(frozen=True, eq=False)
class DenseSym6:
    """Real symmetric matrix tagged with its basis ordering.

    Construction copies the upper triangle onto the lower one, so the stored
    entries are exactly symmetric.
    """

    entries: np.ndarray
    basis: Basis = Basis.PRODUCT

    def __post_init__(self):
        m = np.array(self.entries, dtype=float)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {m.shape}")
        il = _lower_indices(m.shape[0])
        m[il] = m.T[il]
        object.__setattr__(self, "entries", _frozen(m))

    def to_paper_order(self) -> DenseSym6:
        if self.basis is Basis.PAPER:
            return self
        p = list(PAPER_ORDER)
        return DenseSym6(self.entries[np.ix_(p, p)], Basis.PAPER)

    def to_product_order(self) -> DenseSym6:
        if self.basis is Basis.PRODUCT:
            return self
        inv = np.argsort(PAPER_ORDER)
        return DenseSym6(self.entries[np.ix_(inv, inv)], Basis.PRODUCT)

    @property
    def trace(self) -> float:
        return float(np.trace(self.entries))


@dataclass(frozen=True, eq=False)
class EigenDecomp:
    eigenvalues: np.ndarray  # ascending
    eigenvectors: np.ndarray  # columns, orthogonal


def spin_operators(s) -> SpinOps:
    """Return sx, sy/i and sz for spin ``s`` (1/2 or 1)."""
    s = Fraction(s).limit_denominator(2)
    if s not in (Fraction(1, 2), Fraction(1)):
        raise ValueError(f"unsupported spin {s}; only 1/2 and 1 are available")
    ms = [s - k for k in range(int(2 * s) + 1)]  # s, s-1, ..., -s
    n = len(ms)
    raise_op = np.zeros((n, n))
    for k in range(1, n):
        m = ms[k]
        raise_op[k - 1, k] = math.sqrt(float(s * (s + 1) - m * (m + 1)))
    lower_op = raise_op.T
    return SpinOps(
        s=s,
        sx=_frozen((raise_op + lower_op) / 2),
        sy_imag=_frozen((lower_op - raise_op) / 2),
        sz=_frozen(np.diag([float(m) for m in ms])),
    )


def _check_finite(**values):
    for name, v in values.items():
        if not math.isfinite(v):
            raise DomainError(f"{name} must be finite, got {v}")


@lru_cache(maxsize=None)
def _bond_operators() -> tuple[np.ndarray, np.ndarray]:
    a, b = spin_operators(Fraction(1, 2)), spin_operators(1)
    i2, i3 = np.eye(2), np.eye(3)
    zeeman = np.kron(a.sz, i3) + np.kron(i2, b.sz)
    # (i A) (x) (i C) = -(A (x) C) keeps the y-y exchange real
    exchange = np.kron(a.sx, b.sx) - np.kron(a.sy_imag, b.sy_imag)
    return _frozen(zeeman), _frozen(exchange)


def build_hamiltonian(J: float, B: float) -> DenseSym6:
    """H = B (s^z + S^z) - J (s^x S^x + s^y S^y) for one (1/2, 1) bond."""
    _check_finite(J=J, B=B)
    zeeman, exchange = _bond_operators()
    return DenseSym6(B * zeeman - J * exchange)


def symmetric_eigen(m) -> EigenDecomp:
    """Cyclic Jacobi diagonalisation of a real symmetric matrix.

    Rotations are skipped for exactly-zero off-diagonal entries, so the block
    structure of the matrices in this model is preserved bit for bit.
    """
    a = np.array(getattr(m, "entries", m), dtype=float)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.array_equal(a, a.T):
        if np.max(np.abs(a - a.T)) > 1e-12 * max(1.0, np.max(np.abs(a))):
            raise ValueError("matrix is not symmetric")
        a = (a + a.T) / 2
    v = np.eye(n)
    scale = max(1.0, float(np.linalg.norm(a)))
    mask = ~np.eye(n, dtype=bool)

    for _ in range(JACOBI_MAX_SWEEPS):
        off = math.sqrt(float(np.sum(a[mask] ** 2)))
        if off < JACOBI_TOL * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = float((a[q, q] - a[p, p]) / (2.0 * apq))
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    else:
        raise ConvergenceError(f"Jacobi did not converge in {JACOBI_MAX_SWEEPS} sweeps")

    w = np.diag(a).copy()
    order = np.argsort(w, kind="stable")
    return EigenDecomp(_frozen(w[order]), _frozen(v[:, order]))


def _require_positive_temperature(T: float):
    if not (T > 0 and math.isfinite(T)):
        raise DomainError(f"temperature must be positive and finite, got {T}")


def _thermal(h: DenseSym6, T: float) -> tuple[DenseSym6, float]:
    _require_positive_temperature(T)
    eig = symmetric_eigen(h)
    e = eig.eigenvalues
    w = np.exp(-(e - e[0]) / T)
    total = float(w.sum())
    v = eig.eigenvectors
    return DenseSym6((v * (w / total)) @ v.T, h.basis), float(-e[0] / T + math.log(total))


def gibbs_state(h: DenseSym6, T: float) -> DenseSym6:
    """rho = exp(-H/T) / Z, with Boltzmann weights shifted by the ground energy."""
    return _thermal(h, T)[0]


def log_partition(h: DenseSym6, T: float) -> float:
    """ln tr exp(-H/T) from the spectrum of ``h``."""
    return _thermal(h, T)[1]


class Subsystem(enum.Enum):
    FIRST = "first"


def partial_transpose(rho: DenseSym6, subsystem: Subsystem = Subsystem.FIRST) -> DenseSym6:
    """Transpose the spin-1/2 indices: rho^T1[(m,mu),(n,nu)] = rho[(n,mu),(m,nu)]."""
    if subsystem is not Subsystem.FIRST:
        raise ValueError(f"unsupported subsystem {subsystem}")
    if rho.basis is not Basis.PRODUCT:
        rho = rho.to_product_order()
    t = rho.entries.reshape(2, 3, 2, 3).transpose(2, 1, 0, 3).reshape(6, 6)
    return DenseSym6(t)


# product-basis support of the two block-layout 2x2 blocks
_BLOCK_12 = [PAPER_ORDER[0], PAPER_ORDER[1]]
_BLOCK_56 = [PAPER_ORDER[4], PAPER_ORDER[5]]


def negativity_of_state(rho_pt: DenseSym6) -> NegativityResult:
    """Sum of |negative eigenvalues| of a partially transposed unit-trace state.

    The trace-norm form (||rho^T1||_1 - 1) / 2 is evaluated alongside and must
    agree to 1e-12. Each negative eigenvalue is attributed to the layout block
    (12 or 56) carrying most of its eigenvector weight.
    """
    if rho_pt.basis is not Basis.PRODUCT:
        rho_pt = rho_pt.to_product_order()
    tr = rho_pt.trace
    if abs(tr - 1.0) > 1e-10:
        raise ContractError(f"state trace {tr!r} differs from 1")
    eig = symmetric_eigen(rho_pt)
    lam, vecs = eig.eigenvalues, eig.eigenvectors

    neg = lam < 0
    n_sum = float(-np.sum(lam[neg]))
    n_norm = (float(np.sum(np.abs(lam))) - 1.0) / 2.0
    if abs(n_sum - n_norm) > 1e-12:
        raise ContractError(f"negativity {n_sum!r} disagrees with trace-norm form {n_norm!r}")

    b12 = b56 = 0.0
    for k in np.flatnonzero(neg):
        w12 = float(np.sum(vecs[_BLOCK_12, k] ** 2))
        w56 = float(np.sum(vecs[_BLOCK_56, k] ** 2))
        if w12 >= w56:
            b12 += float(lam[k])
        else:
            b56 += float(lam[k])
    return NegativityResult(abs(b12) + abs(b56), b12, b56, Mode.ORACLE)


def oracle_point(J: float, B: float, T: float) -> tuple[NegativityResult, PtElements]:
    """Matrix-pipeline negativity and block-layout PT entries for one (J, B, T)."""
    rho, log_z = _thermal(build_hamiltonian(J, B), T)
    pt = partial_transpose(rho)
    p = pt.to_paper_order().entries
    d = np.diag(p)
    el = PtElements(
        a11=float(d[0]), a22=float(d[1]), a33=float(d[2]),
        a44=float(d[3]), a55=float(d[4]), a66=float(d[5]),
        a12=float(p[0, 1]), a56=float(p[4, 5]), log_z=log_z,
    )
    return negativity_of_state(pt), el


def oracle_negativity(J: float, B: float, T: float) -> NegativityResult:
    """Full matrix pipeline for one (J, B, T) point."""
    return negativity_of_state(partial_transpose(gibbs_state(build_hamiltonian(J, B), T)))


def oracle_pt_elements(J: float, B: float, T: float) -> PtElements:
    return oracle_point(J, B, T)[1]
