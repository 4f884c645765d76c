from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from mixspin.couplings import (
    Coupling,
    CouplingKind,
    Reason,
    coupling_strength,
    domain_check,
    strengths,
)
from mixspin.errors import DomainError

IS, TRIG, HYP, CONST = (Coupling(k) for k in CouplingKind)
R_LAWS = [IS, TRIG, HYP]


def test_cli_names():
    assert [k.value for k in CouplingKind] == ["inverse-square", "trig", "hyperbolic", "constant"]


def test_examples():
    assert coupling_strength(IS, 2.0) == 0.25
    assert coupling_strength(TRIG, math.pi / 2) == 1.0
    assert coupling_strength(HYP, math.asinh(1.0)) == pytest.approx(1.0, abs=1e-15)
    assert Coupling(CouplingKind.INVERSE_SQUARE, 3.0)(1.0) == 3.0
    assert coupling_strength(CONST, 123.0) == 1.0


@pytest.mark.parametrize(
    "c, R, reason",
    [
        (IS, 0.0, Reason.SINGULAR),
        (TRIG, math.pi, Reason.SINGULAR),
        (TRIG, -2 * math.pi, Reason.SINGULAR),
        (HYP, 0.0, Reason.SINGULAR),
        (HYP, -0.5, Reason.OK),
        (IS, math.nan, Reason.NON_FINITE),
        (TRIG, math.inf, Reason.NON_FINITE),
        (CONST, 0.0, Reason.OK),
    ],
)
def test_domain_check(c, R, reason):
    v = domain_check(c, R)
    assert v.reason is reason
    assert v.ok == (reason is Reason.OK)


def test_singular_band():
    assert not domain_check(TRIG, math.pi + 5e-13).ok
    assert domain_check(TRIG, math.pi + 1e-11).ok


def test_singular_raises_with_verdict():
    with pytest.raises(DomainError) as exc:
        coupling_strength(IS, 0.0)
    assert exc.value.verdict.reason is Reason.SINGULAR


def test_bad_j0():
    with pytest.raises(ValueError):
        Coupling(CouplingKind.TRIGONOMETRIC, math.nan)


@given(st.floats(1e-3, 50.0))
def test_evenness_and_positivity(R):
    for c in R_LAWS:
        if domain_check(c, R).ok:
            j = coupling_strength(c, R)
            assert coupling_strength(c, -R) == j
            assert j > 0


def test_trig_periodicity_and_reflection():
    rng = np.random.default_rng(11)
    for R in rng.uniform(0.05, math.pi - 0.05, 1000):
        j = TRIG(R)
        assert abs(TRIG(R + math.pi) - j) <= 1e-12 * max(1.0, j)
        assert abs(TRIG(math.pi - R) - j) <= 1e-12 * max(1.0, j)


def test_vectorised_matches_scalar():
    rs = np.array([-3.0, -0.5, 0.0, 0.3, 1.0, math.pi, 25.0, 800.0])
    for c in R_LAWS:
        j, ok = strengths(c, rs)
        for r, jj, good in zip(rs, j, ok):
            if domain_check(c, r).ok and good:
                assert jj == pytest.approx(coupling_strength(c, r), rel=1e-14, abs=0)
            else:
                assert math.isnan(jj)


def test_hyperbolic_large_r():
    assert HYP(30.0) == pytest.approx(1 / math.sinh(30.0) ** 2, rel=1e-14)
    # sinh(300) ** 2 overflows; the asymptotic form does not
    assert HYP(300.0) == pytest.approx(4 * math.exp(-600.0), rel=1e-12)
