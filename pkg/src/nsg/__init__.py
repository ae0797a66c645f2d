"""Exact invariants of numerical semigroup rings.

Trace of the canonical module, its colength, ``g(H) - n(H)``, far-flung
Gorenstein detection, bounds on the birational Gorenstein colength, and an
exhaustive genus-tree scanner.
"""
from .semigroup import (
    ContainmentError,
    NumericalSemigroup,
    SemigroupError,
    from_gap_set,
    from_generators,
)
from .ideal import RelativeIdeal, canonical_ideal, ideal_from_generators
from .trace import InvariantReport, analyze, colength, g_minus_n, is_far_flung, trace_ideal
from .kernels import BACKEND

__all__ = [
    "BACKEND",
    "ContainmentError",
    "InvariantReport",
    "NumericalSemigroup",
    "RelativeIdeal",
    "SemigroupError",
    "analyze",
    "canonical_ideal",
    "colength",
    "from_gap_set",
    "from_generators",
    "g_minus_n",
    "ideal_from_generators",
    "is_far_flung",
    "trace_ideal",
]
