"""Value types shared by the analytic, published and matrix engines."""

from __future__ import annotations

import enum
from dataclasses import dataclass

# Block-layout basis {|-1/2,-1>, |1/2,0>, |-1/2,1>, |1/2,-1>, |-1/2,0>, |1/2,1>} expressed
# as indices into the product basis |s_z> (x) |S_z>, s_z in (+1/2, -1/2), S_z in (1, 0, -1).
PAPER_ORDER = (5, 1, 3, 2, 4, 0)


class Mode(str, enum.Enum):
    CANONICAL = "canonical"
    PUBLISHED = "published"
    ORACLE = "oracle"


@dataclass(frozen=True)
class PtElements:
    """Independent entries of the partially transposed Gibbs state, block layout.

    The two 2x2 blocks are (a11, a22; a12) and (a55, a66; a56); a33 and a44
    sit alone on the diagonal.
    """

    a11: float
    a22: float
    a33: float
    a44: float
    a55: float
    a66: float
    a12: float
    a56: float
    log_z: float

    @property
    def trace(self) -> float:
        return self.a11 + self.a22 + self.a33 + self.a44 + self.a55 + self.a66


@dataclass(frozen=True)
class NegativityResult:
    negativity: float
    neg_block_12: float
    neg_block_56: float
    mode: Mode
