"""Exact q-characters for quantum affine superalgebras of type A(M|N)."""

from .cartan import EpsilonSeq
from .fm import FMResult, run
from .lweights import Monomial, QChar, Spec, parse_monomial

__all__ = ["EpsilonSeq", "FMResult", "Monomial", "QChar", "Spec", "parse_monomial", "run"]
__version__ = "0.1.0"
