"""Trace of the canonical module and the invariants built on it."""
from __future__ import annotations

from dataclasses import dataclass

from .ideal import (
    RelativeIdeal,
    canonical_ideal,
    conductor_ideal,
    length_between,
    principal,
)
from .semigroup import NumericalSemigroup


def trace_ideal(H: NumericalSemigroup) -> RelativeIdeal:
    """``(H : Ω) + Ω``, i.e. the set form of ``(R:C)C``."""
    R = principal(H)
    omega = canonical_ideal(H)
    return R.colon(omega).product(omega)


def colength(H: NumericalSemigroup) -> int:
    return length_between(trace_ideal(H), principal(H))


def g_minus_n(H: NumericalSemigroup) -> int:
    """``genus - sporadic_count``, double-checked as ``|Ω ∖ H|``."""
    direct = H.genus - H.sporadic_count
    via_omega = length_between(principal(H), canonical_ideal(H))
    if direct != via_omega:
        raise RuntimeError(
            f"g - n = {direct} but |Omega \\ H| = {via_omega} for {H!r}"
        )
    return direct


def is_far_flung(H: NumericalSemigroup) -> bool:
    return trace_ideal(H) == conductor_ideal(H)


def check_duality(H: NumericalSemigroup, I: RelativeIdeal, J: RelativeIdeal) -> bool:
    """``|J ∖ I| == |(Ω:I) ∖ (Ω:J)|`` for nested ideals ``I ⊆ J``."""
    omega = canonical_ideal(H)
    lhs = length_between(I, J)
    rhs = length_between(omega.colon(J), omega.colon(I))
    return lhs == rhs


@dataclass(frozen=True)
class InvariantReport:
    semigroup: NumericalSemigroup
    trace_set: RelativeIdeal
    trace_generators: tuple
    colength: int
    g_minus_n: int
    cm_type: int
    pf: tuple
    gorenstein: bool
    far_flung: bool
    question_a_satisfied: bool

    def to_dict(self) -> dict:
        H = self.semigroup
        return {
            "minimal_generators": list(H.minimal_generators),
            "genus": H.genus,
            "frobenius": H.frobenius,
            "conductor": H.conductor,
            "sporadic_count": H.sporadic_count,
            "pf": list(self.pf),
            "cm_type": self.cm_type,
            "trace_generators": list(self.trace_generators),
            "trace_stable_from": self.trace_set.stable_from,
            "colength": self.colength,
            "g_minus_n": self.g_minus_n,
            "gorenstein": self.gorenstein,
            "far_flung": self.far_flung,
            "question_a_satisfied": self.question_a_satisfied,
        }


def analyze(H: NumericalSemigroup) -> InvariantReport:
    T = trace_ideal(H)
    R = principal(H)
    col = length_between(T, R)
    gn = g_minus_n(H)
    pf = H.pseudo_frobenius()
    cond = conductor_ideal(H)
    if not (cond <= T):
        raise RuntimeError(f"trace of {H!r} misses part of the conductor ideal")
    gorenstein = T == R
    far_flung = T == cond
    if gorenstein != (len(pf) == 1) or gorenstein != H.is_symmetric():
        raise RuntimeError(f"Gorenstein tests disagree for {H!r}")
    return InvariantReport(
        semigroup=H,
        trace_set=T,
        trace_generators=tuple(T.minimal_generators()),
        colength=col,
        g_minus_n=gn,
        cm_type=len(pf),
        pf=tuple(pf),
        gorenstein=gorenstein,
        far_flung=far_flung,
        question_a_satisfied=col <= gn,
    )
