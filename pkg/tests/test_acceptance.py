"""One test per acceptance criterion; each prints a PASS/FAIL line at its tolerance."""

from __future__ import annotations

import csv
import math
import time

import numpy as np

from mixspin import Coupling, CouplingKind, negativity_closed, spin_core
from mixspin.analysis import (
    PRESET_IDS,
    Axis,
    SampleBox,
    SweepSpec,
    detect_plateau,
    figure_preset,
    find_threshold,
    sweep,
    validate_modes,
)
from mixspin.analysis.validation import R_KINDS
from mixspin.cli import run
from mixspin.results import Mode

IS = Coupling(CouplingKind.INVERSE_SQUARE)
TRIG = Coupling(CouplingKind.TRIGONOMETRIC)
HYP = Coupling(CouplingKind.HYPERBOLIC)


def test_ac1_oracle_equivalence(verdict):
    t0 = time.perf_counter()
    report = validate_modes(Mode.CANONICAL, Mode.ORACLE, R_KINDS, 1000, seed=42, max_ratio=50.0)
    elapsed = time.perf_counter() - t0
    ok = report.max_abs_delta_n <= 1e-10 and elapsed < 1.0 and report.overflow_count == 0
    verdict("AC1", ok, f"max|dN|={report.max_abs_delta_n:.3g} (tol 1e-10), {elapsed:.3f}s (< 1s), 1000 pts")
    assert ok


def test_ac2_plateau_saturation(verdict):
    spec = SweepSpec(IS, Mode.CANONICAL, (Axis.linear("R", 0.3, 0.8, 100),), {"B": 1.0, "T": 0.001})
    ns = np.array([r.negativity for r in sweep(spec)])
    dev = float(np.max(np.abs(ns - 0.5)))
    plateaus = detect_plateau([(r, n) for r, n in zip(spec.values_of("R"), ns)], 1e-6, 1e-6)
    ok = dev <= 1e-6 and len(plateaus) == 1 and plateaus[0].count == 100
    verdict("AC2", ok, f"max|N-0.5|={dev:.3g} over 100 pts (tol 1e-6), plateaus={len(plateaus)}")
    assert ok


def test_ac3_sudden_death_in_r(verdict):
    cp = find_threshold(IS, Mode.CANONICAL, "R", {"B": 1.0, "T": 1.0}, (0.3, 3.0), epsilon=1e-9)
    rho = spin_core.gibbs_state(spin_core.build_hamiltonian(IS(0.9), 1.0), 1.0)
    pt = spin_core.partial_transpose(rho)
    lam_min = float(spin_core.symmetric_eigen(pt).eigenvalues[0])
    n09 = spin_core.negativity_of_state(pt).negativity
    ok = abs(cp.value - 0.8163) <= 1e-3 and n09 == 0.0 and lam_min >= -1e-14
    verdict("AC3", ok, f"R_c={cp.value:.6f} (0.8163 +- 1e-3); N(0.9)={n09}, min eig={lam_min:.3g} (>= -1e-14)")
    assert ok


def test_ac4_b_independent_critical_temperature(verdict):
    tcs = [
        find_threshold(IS, Mode.CANONICAL, "T", {"R": 0.5, "B": b}, (0.1, 10.0), epsilon=1e-9).value
        for b in (0.5, 2.0, 4.0)
    ]
    spread = max(tcs) - min(tcs)
    tc15 = find_threshold(IS, Mode.CANONICAL, "T", {"R": 1.5, "B": 0.15}, (0.01, 1.0), epsilon=1e-9).value
    ok = spread <= 1e-6 and all(abs(t - 2.6651) <= 1e-3 for t in tcs) and abs(tc15 - 0.2961) <= 1e-3
    verdict("AC4", ok, f"T_c(R=0.5)={[round(t, 7) for t in tcs]} spread={spread:.3g} (tol 1e-6), "
                       f"T_c(R=1.5)={tc15:.6f} (0.2961 +- 1e-3)")
    assert ok


def test_ac5_type_ii_valley_symmetry(verdict):
    rs = np.array(Axis.open_both("R", 0.0, math.pi, 400).values)
    worst = 0.0
    for T in (0.001, 0.25, 0.5, 1.0):
        fwd = sweep(SweepSpec(TRIG, Mode.CANONICAL, (Axis.explicit("R", rs),), {"B": 1.0, "T": T}))
        rev = sweep(SweepSpec(TRIG, Mode.CANONICAL, (Axis.explicit("R", math.pi - rs),), {"B": 1.0, "T": T}))
        worst = max(worst, max(abs(a.negativity - b.negativity) for a, b in zip(fwd, rev)))
    ok = worst <= 1e-14
    verdict("AC5", ok, f"max|N(R)-N(pi-R)|={worst:.3g} on 400 pts x 4 T (tol 1e-14)")
    assert ok


def test_ac6_type_ii_merge_field(verdict):
    j = TRIG(math.pi / 2)
    n70 = negativity_closed(j, 0.70, 0.001).negativity
    n75 = negativity_closed(j, 0.75, 0.001).negativity
    cp = find_threshold(TRIG, Mode.CANONICAL, "B", {"R": math.pi / 2, "T": 0.001}, (0.70, 0.75))
    ok = n70 > 0.49 and n75 < 1e-6 and 0.70 < 2**-0.5 < 0.75 and cp.contour_only and 0.70 < cp.value < 0.75
    verdict("AC6", ok, f"N(B=0.70)={n70:.6f} (> 0.49), N(B=0.75)={n75:.3g} (< 1e-6), "
                       f"merge contour B={cp.value:.5f}, 2^-1/2={2**-0.5:.5f}")
    assert ok


def test_ac7_type_ii_ridge(verdict):
    j = TRIG(math.pi / 2)
    n_ridge = negativity_closed(j, 0.5, 0.01).negativity
    n_high = negativity_closed(j, 2.0, 0.01).negativity
    ok = abs(n_ridge - 0.5) <= 1e-6 and n_high < 1e-9
    verdict("AC7", ok, f"N(B=0.5)={n_ridge:.9f} (0.5 +- 1e-6), N(B=2)={n_high:.3g} (< 1e-9)")
    assert ok


def test_ac8_type_iii_critical_distance(verdict):
    r_cold = find_threshold(HYP, Mode.CANONICAL, "R", {"B": 1.5, "T": 0.001}, (0.1, 3.0)).value
    r_warm = find_threshold(HYP, Mode.CANONICAL, "R", {"B": 1.5, "T": 0.05}, (0.1, 3.0)).value
    target = math.asinh((math.sqrt(2.0) * 1.5) ** -0.5)
    drift = abs(r_cold - r_warm)
    ok = abs(r_cold - 0.6417) <= 1e-2 and abs(target - 0.6417) <= 1e-3 and drift <= 0.05
    verdict("AC8", ok, f"R_c(T=0.001)={r_cold:.5f} (0.6417 +- 1e-2), R_c(T=0.05)={r_warm:.5f}, "
                       f"|dR_c|={drift:.4f} (tol 0.05)")
    assert ok


def test_ac9_published_formula_audit(verdict, tmp_path, capsys):
    type_i = validate_modes(Mode.PUBLISHED, Mode.CANONICAL, [CouplingKind.INVERSE_SQUARE], 200, seed=7)
    w = 0.01
    box = SampleBox(r=(0.8814 - w, 0.8814 + w), b=(0.2 - w, 0.2 + w), t=(0.2 - w, 0.2 + w))
    type_iii = validate_modes(Mode.PUBLISHED, Mode.CANONICAL, [CouplingKind.HYPERBOLIC], 200, seed=7, box=box)
    code = run(["validate", "--coupling", "hyperbolic", "--samples", "50", "--seed", "7",
                "--tolerance", "1e-10", "--out", str(tmp_path / "audit.json")])
    capsys.readouterr()
    ok = (type_i.max_abs_delta_n <= 1e-10 and type_i.overflow_count == 0
          and abs(type_iii.max_abs_delta_n - 0.10) <= 0.02 and code == 4)
    verdict("AC9", ok, f"type I max|dN|={type_i.max_abs_delta_n:.3g} (tol 1e-10); type III worst "
                       f"dN={type_iii.max_abs_delta_n:.4f} (0.10 +- 0.02); validate exit={code} (want 4)")
    assert ok


def test_ac10_dataset_regeneration(verdict, tmp_path, capsys):
    t0 = time.perf_counter()
    codes = [run(["figure", p, "--out", str(tmp_path / f"fig{p}.csv")]) for p in PRESET_IDS]
    elapsed = time.perf_counter() - t0
    capsys.readouterr()
    bad_counts, n_max = [], 0.0
    for p in PRESET_IDS:
        with open(tmp_path / f"fig{p}.csv", newline="") as fh:
            rows = list(csv.DictReader(fh))
        if len(rows) != figure_preset(p).size:
            bad_counts.append(p)
        n_max = max([n_max] + [float(r["negativity"]) for r in rows if r["negativity"]])
    ok = all(c == 0 for c in codes) and not bad_counts and elapsed < 5.0 and n_max <= 0.5 + 1e-12
    verdict("AC10", ok, f"{len(PRESET_IDS)} presets, row-count mismatches={bad_counts}, {elapsed:.2f}s (< 5s), "
                        f"max N={n_max!r} (<= 0.5+1e-12)")
    assert ok
