"""Exact counting of lattice paths that avoid periodic staircase boundaries.

Closed forms live in :mod:`staircase.formulas`, brute-force ground truth in
:mod:`staircase.oracle`, constructive maps in :mod:`staircase.bijections`.
"""

from .formulas import FORMULAS, PreconditionError
from .path_core import (
    Corner,
    GenericStaircase,
    LatticePath,
    Point,
    StaircaseA,
    StaircaseB,
    StrictRightOfLine,
    format_path,
    parse_binary,
    parse_path,
)

__all__ = [
    "FORMULAS",
    "Corner",
    "GenericStaircase",
    "LatticePath",
    "Point",
    "PreconditionError",
    "StaircaseA",
    "StaircaseB",
    "StrictRightOfLine",
    "format_path",
    "parse_binary",
    "parse_path",
]
__version__ = "0.1.0"
