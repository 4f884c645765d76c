"""Thermal negativity of the two-site (1/2, 1) mixed-spin XY model with SCM couplings."""

from .closed_form import log_partition, negativity_closed, pt_elements, spectrum
from .couplings import Coupling, CouplingKind, coupling_strength, domain_check
from .errors import ContractError, ConvergenceError, DomainError, EvaluationOverflow, NoThreshold
from .results import Mode, NegativityResult, PtElements

__version__ = "0.1.0"

__all__ = [
    "ContractError", "ConvergenceError", "Coupling", "CouplingKind", "DomainError",
    "EvaluationOverflow", "Mode", "NegativityResult", "NoThreshold", "PtElements",
    "coupling_strength", "domain_check", "log_partition", "negativity_closed",
    "pt_elements", "spectrum",
]
