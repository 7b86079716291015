"""Hall algebras of cyclic and Kronecker quivers over finite fields.

Exact products in generic (rational in q) and specialized (fixed q) modes,
with verification suites driven by :mod:`hallwright.cli`.
"""

from .hall import CyclicContext, HallElement
from .report import Report

__version__ = "0.1.0"

__all__ = ["CyclicContext", "HallElement", "Report", "__version__"]
