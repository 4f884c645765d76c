from __future__ import annotations

import math

import numpy as np
import pytest

from mixspin import closed_form, paper_mode, spin_core
from mixspin.couplings import Coupling, CouplingKind
from mixspin.errors import DomainError, EvaluationOverflow
from mixspin.results import Mode

IS, TRIG, HYP = CouplingKind.INVERSE_SQUARE, CouplingKind.TRIGONOMETRIC, CouplingKind.HYPERBOLIC
FIELDS = ("a11", "a22", "a33", "a44", "a55", "a66")


def _samples(n, seed, r=(0.3, 3.0)):
    rng = np.random.default_rng(seed)
    return zip(rng.uniform(*r, n), rng.uniform(0, 4, n), rng.uniform(0.05, 3, n))


def test_type_i_matches_canonical_up_to_sign():
    a = paper_mode.pt_elements_published(IS, 1.0, 1.0, 1.0)
    b = closed_form.pt_elements(1.0, 1.0, 1.0)
    for f in FIELDS:
        assert getattr(a, f) == pytest.approx(getattr(b, f), abs=1e-12)
    assert abs(a.a12) == pytest.approx(abs(b.a12), abs=1e-12)
    assert abs(a.a56) == pytest.approx(abs(b.a56), abs=1e-12)
    assert a.a12 < 0 < b.a12  # printed sign is opposite to the Gibbs coherence


def test_type_i_negativity_equivalence():
    for R, B, T in _samples(200, 7):
        p = paper_mode.negativity_published(IS, R, B, T)
        c = closed_form.negativity_closed(Coupling(IS)(R), B, T)
        assert abs(p.negativity - c.negativity) <= 1e-10
        assert p.mode is Mode.PUBLISHED


def test_trig_intermediates_at_half_pi():
    p = paper_mode.published_intermediates(TRIG, math.pi / 2, 1.0, 1.0)
    assert p.varphi == pytest.approx(8.0, abs=1e-14)


def test_varphi_identity():
    for R in np.linspace(0.2, math.pi - 0.2, 50):
        p = paper_mode.published_intermediates(TRIG, R, 0.5, 1.0)
        assert abs(p.varphi - 8 * math.sin(R) ** 4) <= 1e-12


def test_eta_xi_product():
    for R, B, T in _samples(200, 3):
        p = paper_mode.published_intermediates(HYP, R, B, T)
        assert abs(p.eta * p.xi - math.exp(-B / T)) <= 1e-12


def test_hyperbolic_partition_matches_canonical():
    R = math.asinh(1.0)
    el = paper_mode.pt_elements_published(HYP, R, 1.0, 1.0)
    assert math.exp(el.log_z) == pytest.approx(math.exp(closed_form.log_partition(1.0, 1.0, 1.0)), rel=1e-10)
    assert math.exp(el.log_z) == pytest.approx(10.390723576, abs=1e-8)


@pytest.mark.parametrize("kind", [IS, HYP])
def test_partition_agreement_and_trace(kind):
    for R, B, T in _samples(200, 5):
        try:
            el = paper_mode.pt_elements_published(kind, R, B, T)
        except EvaluationOverflow:
            continue
        canon = closed_form.log_partition(Coupling(kind)(R), B, T)
        assert el.log_z == pytest.approx(canon, abs=1e-10 * max(1.0, abs(canon)))
        assert abs(el.trace - 1.0) <= 1e-10


def test_type_iii_divergence_regression():
    R, B, T = 0.8814, 0.2, 0.2
    pub = paper_mode.negativity_published(HYP, R, B, T).negativity
    canon = closed_form.negativity_closed(Coupling(HYP)(R), B, T).negativity
    oracle = spin_core.oracle_negativity(Coupling(HYP)(R), B, T).negativity
    assert pub == pytest.approx(0.192, abs=1e-3)
    assert canon == pytest.approx(0.294, abs=1e-3)
    assert abs(canon - oracle) <= 1e-12


def test_type_iii_bell_regime_agrees():
    R = math.asinh(2 ** -0.5)  # J = 2
    pub = paper_mode.negativity_published(HYP, R, 1.0, 0.02).negativity
    canon = closed_form.negativity_closed(Coupling(HYP)(R), 1.0, 0.02).negativity
    assert pub == pytest.approx(0.5, abs=1e-6)
    assert canon == pytest.approx(0.5, abs=1e-6)


def test_type_ii_trace_is_an_output():
    el = paper_mode.pt_elements_published(TRIG, 1.0, 1.0, 1.0)
    assert math.isfinite(el.trace)


def test_overflow_is_typed():
    with pytest.raises(EvaluationOverflow):
        paper_mode.pt_elements_published(IS, 0.01, 1.0, 0.01)


def test_spectrum_published_matches_unified():
    for kind, R in ((IS, 0.7), (TRIG, 1.1), (HYP, 0.6)):
        e = paper_mode.spectrum_published(kind, R, 0.8)
        want = closed_form.spectrum(Coupling(kind)(R), 0.8).energies
        np.testing.assert_allclose(sorted(e), sorted(want), atol=1e-12)


@pytest.mark.parametrize(
    "kind, R, T, exc",
    [
        (IS, 0.0, 1.0, DomainError),
        (TRIG, math.pi, 1.0, DomainError),
        (HYP, 1.0, 0.0, DomainError),
        (CouplingKind.CONSTANT, 1.0, 1.0, ValueError),
    ],
)
def test_domain(kind, R, T, exc):
    with pytest.raises(exc):
        paper_mode.pt_elements_published(kind, R, 1.0, T)


def test_deterministic():
    a = paper_mode.pt_elements_published(TRIG, 0.9, 0.3, 0.4)
    b = paper_mode.pt_elements_published(TRIG, 0.9, 0.3, 0.4)
    assert a == b
