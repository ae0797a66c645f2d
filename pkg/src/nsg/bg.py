"""Bounds on the birational Gorenstein colength ``bg`` of ``K[[H]]``.

Upper bounds come from explicit symmetric subsemigroups ``H' ⊆ H`` (each
gives a Gorenstein subring of colength ``|H ∖ H'|``). The lower bound is
``colength <= 2 bg - 1`` for non-Gorenstein rings. Far-flung semigroups
have ``bg = n(H)`` exactly.

Only monomial subrings are searched, so outside the certified cases the
result is an interval and never a claimed exact value.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from . import kernels
from .ideal import length_between, principal
from .semigroup import ContainmentError, NumericalSemigroup, SemigroupError
from .trace import analyze

GORENSTEIN_ZERO = "gorenstein_zero"
FAR_FLUNG = "far_flung_prop43"
SANDWICH = "cor33_meets_witness"
BOUNDS_ONLY = "bounds_only"

DEFAULT_NODE_LIMIT = 2_000_000


def relative_colength(H: NumericalSemigroup, sub: NumericalSemigroup) -> int:
    """``|H ∖ sub|`` for a subsemigroup ``sub ⊆ H``."""
    w = sub.first_element_outside(H)
    if w is not None:
        raise ContainmentError(f"{w} is in {sub!r} but not in {H!r}", w)
    return sub.genus - H.genus


def standard_symmetric_subsemigroup(H: NumericalSemigroup) -> NumericalSemigroup:
    """``{0} ∪ [c, 2c-2] ∪ [2c, ∞)``, symmetric of colength ``n(H)`` in H.

    Built from its gap set ``[1, c-1] ∪ {2c-1}``. The elements of H just
    above the conductor do not generate it in general: for ``<5, 6, 13, 14>``
    the elements ``10, 11`` give the much smaller ``<10, 11>``.
    """
    c = H.conductor
    if c == 0:
        return H
    gaps = list(range(1, c)) + [2 * c - 1]
    return NumericalSemigroup.from_gap_set(gaps)


def _block_in(H: NumericalSemigroup, lo: int, hi: int) -> bool:
    # [lo, hi] ⊆ H
    c = H.conductor
    if lo >= c:
        return True
    top = min(hi, c - 1)
    want = (1 << (top - lo + 1)) - 1
    return (H.mask >> lo) & want == want


def interval_candidates(H: NumericalSemigroup) -> list[NumericalSemigroup]:
    """Symmetric ``<a, a+1, ..., b>`` inside H with ``a <= b < 2a``, ``a <= 2c``.

    Sorted by colength in H, then by generators.
    """
    c = H.conductor
    if c == 0:
        return [H]
    found = []
    for a in range(2, 2 * c + 1):
        if a not in H:
            continue
        for b in range(a + 1, 2 * a):
            # <a..b> is the union of the blocks [ka, kb]; they overlap from k0 on
            k0 = -(-(a - 1) // (b - a))
            frob = k0 * a - 1
            if frob + 1 < c:
                # frob only shrinks as b grows
                break
            if not all(_block_in(H, k * a, k * b) for k in range(1, k0)):
                # the candidate only grows with b
                break
            genus = sum(k * a - (k - 1) * b - 1 for k in range(1, k0 + 1))
            if 2 * genus == frob + 1:
                found.append((genus, a, b))
    found.sort()
    return [NumericalSemigroup.interval(a, b) for _, a, b in found]


@dataclass
class SearchResult:
    minimum: Optional[int]
    witness: Optional[NumericalSemigroup]
    exhaustive: bool
    nodes: int
    witnesses: list = field(default_factory=list)


def search_symmetric_subsemigroups(
    H: NumericalSemigroup,
    d_max: Optional[int] = None,
    node_limit: int = DEFAULT_NODE_LIMIT,
) -> SearchResult:
    """Least colength of a symmetric subsemigroup of H, up to ``d_max``.

    Walks the semigroup tree from ℕ with branch and bound. When the walk
    finishes under ``node_limit`` the minimum is exact over all symmetric
    subsemigroups of colength at most ``d_max``. Co-minimal witnesses are
    returned in ``witnesses``; ``witness`` is the one with the
    lexicographically smallest gap set.
    """
    if d_max is None:
        d_max = H.sporadic_count
    if d_max < 0:
        raise ValueError("d_max must be nonnegative")
    best, raw, nodes, complete = kernels.search_symmetric(
        H.membership_window, H.conductor, H.genus, d_max, node_limit
    )
    subs = [NumericalSemigroup.from_window(c, w) for w, c in raw]
    subs.sort(key=lambda s: s.gaps())
    if best < 0:
        return SearchResult(None, None, complete, nodes, [])
    return SearchResult(best, subs[0], complete, nodes, subs)


@dataclass
class BgBounds:
    lower: int
    upper: Optional[int]  # None stands for +infinity
    exact: Optional[int]
    certificate: str
    witness: Optional[NumericalSemigroup]
    search_exhaustive: bool
    search_nodes: int = 0
    witnesses: list = field(default_factory=list)

    def to_dict(self, all_witnesses: bool = False) -> dict:
        out = {
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "certificate": self.certificate,
            "witness": list(self.witness.minimal_generators) if self.witness else None,
            "search_exhaustive": self.search_exhaustive,
            "search_nodes": self.search_nodes,
        }
        if all_witnesses:
            out["witnesses"] = [list(w.minimal_generators) for w in self.witnesses]
        return out


def validate_candidate(H: NumericalSemigroup, cand: NumericalSemigroup) -> int:
    """Colength of a user-supplied symmetric subsemigroup; raises if invalid."""
    if not cand.is_symmetric():
        raise SemigroupError(f"candidate {cand!r} is not symmetric")
    return relative_colength(H, cand)


def bg_bounds(
    H: NumericalSemigroup,
    enable_search: bool = True,
    d_max: Optional[int] = None,
    node_limit: int = DEFAULT_NODE_LIMIT,
    candidates: tuple = (),
) -> BgBounds:
    for cand in candidates:
        validate_candidate(H, cand)
    report = analyze(H)
    if report.gorenstein:
        return BgBounds(0, 0, 0, GORENSTEIN_ZERO, H, False, witnesses=[H])
    n = H.sporadic_count
    std = standard_symmetric_subsemigroup(H)
    if report.far_flung:
        return BgBounds(n, n, n, FAR_FLUNG, std, False, witnesses=[std])

    lower = math.ceil((report.colength + 1) / 2)
    pool = [std] + interval_candidates(H)
    pool.extend(candidates)
    lengths = [relative_colength(H, s) for s in pool]
    best_d = min(lengths)
    tied = [s for s, d in zip(pool, lengths) if d == best_d]
    exhaustive = False
    nodes = 0
    if enable_search and lower < best_d:
        budget = best_d if d_max is None else min(d_max, best_d)
        res = search_symmetric_subsemigroups(H, budget, node_limit)
        nodes = res.nodes
        exhaustive = res.exhaustive and budget == best_d
        if res.minimum is not None:
            if res.minimum < best_d:
                best_d, tied = res.minimum, list(res.witnesses)
            elif res.minimum == best_d:
                tied += res.witnesses
    uniq = sorted(set(tied), key=lambda s: s.gaps())
    upper = best_d
    if lower > upper:
        raise RuntimeError(f"lower bound {lower} exceeds witness {upper} for {H!r}")
    exact = upper if lower == upper else None
    cert = SANDWICH if exact is not None else BOUNDS_ONLY
    return BgBounds(lower, upper, exact, cert, uniq[0], exhaustive, nodes, uniq)


@dataclass
class LengthIdentityCheck:
    ok: bool
    colength: int
    sub_colength: int
    trace_excess: int
    dual_length: int
    conductor_in_trace: bool


def check_length_identity(H: NumericalSemigroup, sub: NumericalSemigroup) -> LengthIdentityCheck:
    """Length identity for a Gorenstein monomial subring ``S = K[[sub]]``.

    With ``T`` the trace set of H and ``K' = {z : z + H ⊆ sub}`` (the set
    form of ``S:R``) this checks ``K' ⊆ T``,
    ``|H ∖ T| = 2 |H ∖ sub| - |T ∖ K'|`` and ``|sub ∖ K'| = |H ∖ sub|``.
    """
    if not sub.is_symmetric():
        raise SemigroupError(f"{sub!r} is not symmetric")
    d = relative_colength(H, sub)
    T = analyze(H).trace_set
    R = principal(H)
    # S:R is stable under both semigroups; compute over sub, view over H
    kprime = principal(sub).colon(principal(H).rebase(sub)).rebase(H)
    inside = kprime <= T
    col = length_between(T, R)
    gap = length_between(kprime, T) if inside else -1
    dual = length_between(kprime.rebase(sub), principal(sub))
    ok = inside and col == 2 * d - gap and dual == d
    return LengthIdentityCheck(ok, col, d, gap, dual, inside)
