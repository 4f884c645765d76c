"""Dataset presets for the sixteen negativity figures (1a-11).

Each preset is either a curve family (an explicit outer axis of a few values,
600 points along the curve; 400 for the trigonometric R curves) or a 201x201
surface. Values fixed by the reference figures themselves are tagged "stated";
everything else is a documented default tagged "default".
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass

from ..couplings import Coupling, CouplingKind
from ..results import Mode
from .sweep import Axis, SweepSpec

CURVE_POINTS = 600
TRIG_CURVE_POINTS = 400
SURFACE_POINTS = 201

PI = math.pi
IS, TRIG, HYP = CouplingKind.INVERSE_SQUARE, CouplingKind.TRIGONOMETRIC, CouplingKind.HYPERBOLIC


@dataclass(frozen=True)
class _AxisDef:
    name: str
    kind: str  # "open_start", "open_both" or "linear"
    start: float
    stop: float
    count: int

    def build(self) -> Axis:
        return getattr(Axis, self.kind)(self.name, self.start, self.stop, self.count)


@dataclass(frozen=True)
class PresetDef:
    id: str
    kind: CouplingKind
    fixed: dict
    axes: tuple[_AxisDef, ...]
    family: tuple[str, tuple[float, ...]] | None = None
    stated: tuple[str, ...] = ()  # names whose values the reference figure fixes


def _curve(name, kind, start, stop, n=CURVE_POINTS):
    return (_AxisDef(name, kind, start, stop, n),)


def _surface(a, b):
    return tuple(_AxisDef(*spec, SURFACE_POINTS) for spec in (a, b))


PRESETS: dict[str, PresetDef] = {
    p.id: p
    for p in [
        PresetDef("1a", IS, {"B": 1.0}, _curve("R", "open_start", 0.0, 2.0),
                  ("T", (0.25, 0.5, 1.0, 2.0)), stated=("B",)),
        PresetDef("1b", IS, {"T": 1.0}, _curve("R", "open_start", 0.0, 2.0),
                  ("B", (0.5, 1.0, 2.0, 4.0)), stated=("T",)),
        PresetDef("2a", IS, {"R": 0.5}, _curve("B", "open_start", 0.0, 6.0),
                  ("T", (0.05, 0.15, 0.25)), stated=("R", "T")),
        PresetDef("2b", IS, {"R": 1.5}, _curve("B", "open_start", 0.0, 1.5),
                  ("T", (0.05, 0.15, 0.25)), stated=("R", "T")),
        PresetDef("3a", IS, {"R": 0.5}, _curve("T", "open_start", 0.0, 4.0),
                  ("B", (0.5, 2.0, 4.0)), stated=("R", "B")),
        PresetDef("3b", IS, {"R": 1.5}, _curve("T", "open_start", 0.0, 0.5),
                  ("B", (0.05, 0.15, 0.35)), stated=("R", "B")),
        PresetDef("4", IS, {"R": 0.5},
                  _surface(("T", "open_start", 0.0, 4.0), ("B", "open_start", 0.0, 6.0)), stated=("R",)),
        PresetDef("5a", TRIG, {"B": 1.0}, _curve("R", "open_both", 0.0, PI, TRIG_CURVE_POINTS),
                  ("T", (0.001, 0.25, 0.5, 1.0)), stated=("B", "R")),
        PresetDef("5b", TRIG, {"T": 1.0}, _curve("R", "open_both", 0.0, PI, TRIG_CURVE_POINTS),
                  ("B", (0.5, 1.0, 2.0, 4.0)), stated=("T", "R")),
        PresetDef("6", TRIG, {"B": 1.0},
                  _surface(("T", "open_start", 0.0, 1.0), ("R", "open_both", 0.0, PI)), stated=("B", "R")),
        PresetDef("7", TRIG, {"T": 0.001},
                  _surface(("B", "open_start", 0.0, 2.0), ("R", "open_both", 0.0, PI)), stated=("T", "R")),
        PresetDef("8", TRIG, {"R": PI / 2},
                  _surface(("T", "open_start", 0.0, 1.0), ("B", "open_start", 0.0, 2.0)), stated=("R",)),
        PresetDef("9a", HYP, {"B": 1.0}, _curve("R", "open_start", 0.0, PI),
                  ("T", (0.001, 0.25, 0.5, 1.0)), stated=("B", "R")),
        PresetDef("9b", HYP, {"T": 1.0}, _curve("R", "open_start", 0.0, PI),
                  ("B", (0.5, 1.0, 2.0, 4.0)), stated=("T", "R")),
        PresetDef("10", HYP, {"B": 1.5},
                  _surface(("T", "open_start", 0.0, 1.0), ("R", "linear", -PI, PI)), stated=("B", "R")),
        PresetDef("11", HYP, {"T": 0.1},
                  _surface(("B", "open_start", 0.0, 4.0), ("R", "linear", -PI, PI)), stated=("T", "R")),
    ]
}

PRESET_IDS = tuple(PRESETS)


def _lookup(preset_id: str) -> PresetDef:
    try:
        return PRESETS[preset_id]
    except KeyError:
        raise ValueError(f"unknown figure preset {preset_id!r}; valid ids: {', '.join(PRESET_IDS)}") from None


def figure_preset(preset_id: str, mode: Mode = Mode.CANONICAL,
                  family: Sequence[float] | None = None) -> SweepSpec:
    """Resolved sweep for one figure; ``family`` overrides the curve-family values."""
    p = _lookup(preset_id)
    axes = []
    if p.family is not None:
        name, values = p.family
        axes.append(Axis.explicit(name, family if family is not None else values))
    elif family is not None:
        raise ValueError(f"preset {preset_id} is a surface and has no curve family")
    axes.extend(a.build() for a in p.axes)
    return SweepSpec(Coupling(p.kind), mode, tuple(axes), dict(p.fixed))


def preset_metadata(preset_id: str, spec: SweepSpec | None = None) -> dict:
    """Provenance of every fixed value and axis in the preset."""
    p = _lookup(preset_id)
    spec = spec or figure_preset(preset_id)
    family_name = p.family[0] if p.family else None
    overridden = p.family is not None and spec.values_of(family_name) != p.family[1]

    def provenance(name):
        if name == family_name and overridden:
            return "override"
        return "stated" if name in p.stated else "default"

    return {
        "preset": p.id,
        "coupling": p.kind.value,
        "fixed": {k: {"value": v, "provenance": provenance(k)} for k, v in spec.fixed.items()},
        "axes": [
            {"name": a.name, "values": a.descriptor, "count": len(a), "provenance": provenance(a.name)}
            for a in spec.axes
        ],
        "rows": spec.size,
    }
