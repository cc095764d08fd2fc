"""Finite-valued logics, signed proof engines and MV-algebras, all with exact arithmetic.

Subpackages: ``core`` (formulas, matrices, semantics), ``logics`` (built-in
matrices and axioms), ``signed`` (signs and normal forms), ``tableau``,
``deduction`` (sequents and Hilbert proofs), ``resolution``, ``mv`` and ``cli``.
"""

from .core import Atom, App, Matrix, decide, evaluate, format_formula, parse_formula
from .errors import MVLogicError
from .logics import builtin

__version__ = "0.1.0"

__all__ = ["App", "Atom", "MVLogicError", "Matrix", "builtin", "decide", "evaluate", "format_formula", "parse_formula"]
