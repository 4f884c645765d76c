"""Sweeps, critical points, plateaus, figure presets and cross-mode audits."""

from .plateau import Plateau, detect_plateau
from .presets import PRESET_IDS, figure_preset, preset_metadata
from .sampling import SplitMix64
from .sweep import Axis, Status, SweepRecord, SweepSpec, evaluate_point, sweep
from .threshold import CriticalPoint, find_threshold
from .validation import SampleBox, ValidationReport, validate_modes

__all__ = [
    "Axis", "CriticalPoint", "PRESET_IDS", "Plateau", "SampleBox", "SplitMix64", "Status",
    "SweepRecord", "SweepSpec", "ValidationReport", "detect_plateau", "evaluate_point",
    "figure_preset", "find_threshold", "preset_metadata", "sweep", "validate_modes",
]
