"""Relative ideals of a numerical semigroup.

A relative ideal is a set ``E`` of integers, bounded below, with
``E + H ⊆ E``. It models a monomial fractional ideal of ``K[[H]]``. The
normal form is ``(min_element, stable_from, bits)`` where bit ``i`` of
``bits`` says whether ``min_element + i`` belongs to ``E`` for
``min_element <= x < stable_from``, and ``[stable_from, ∞) ⊆ E``.
"""
from __future__ import annotations

from typing import Iterable

from .semigroup import ContainmentError, NumericalSemigroup


class ParentMismatch(ValueError):
    pass


def _ones(n: int) -> int:
    return (1 << n) - 1 if n > 0 else 0


class RelativeIdeal:
    __slots__ = ("parent", "min_element", "stable_from", "_bits")

    def __init__(self, parent: NumericalSemigroup, lo: int, bits: int, tail: int):
        """Build from ``bits`` over ``[lo, tail)`` plus ``[tail, ∞)``; normalizes."""
        self.parent = parent
        width = tail - lo
        bits &= _ones(width)
        # shrink tail while the position just below it is set
        while width > 0 and (bits >> (width - 1)) & 1:
            width -= 1
        bits &= _ones(width)
        if bits == 0:
            lo = lo + width
            width = 0
        else:
            low = (bits & -bits).bit_length() - 1
            bits >>= low
            lo += low
            width -= low
        self.min_element = lo
        self.stable_from = lo + width
        self._bits = bits

    # -- membership ---------------------------------------------------

    def __contains__(self, x: int) -> bool:
        if x >= self.stable_from:
            return True
        if x < self.min_element:
            return False
        return bool((self._bits >> (x - self.min_element)) & 1)

    def mask(self, lo: int, hi: int) -> int:
        """Bitmask of ``E ∩ [lo, hi)`` with bit 0 at ``lo``."""
        if hi <= lo:
            return 0
        mu, sigma = self.min_element, self.stable_from
        out = 0
        if sigma > lo:
            win = self._bits
            shift = mu - lo
            win = win << shift if shift >= 0 else win >> -shift
            out = win
        start = max(sigma, lo)
        if start < hi:
            out |= _ones(hi - start) << (start - lo)
        return out & _ones(hi - lo)

    def elements_below(self, bound: int) -> list[int]:
        return [x for x in range(self.min_element, bound) if x in self]

    def window(self) -> list[int]:
        """Elements in ``[min_element, stable_from)``."""
        return self.elements_below(self.stable_from)

    # -- algebra ------------------------------------------------------

    def _check(self, other: "RelativeIdeal"):
        if self.parent != other.parent:
            raise ParentMismatch(
                f"ideals over different semigroups: {self.parent!r} vs {other.parent!r}"
            )

    def union_sum(self, other: "RelativeIdeal") -> "RelativeIdeal":
        self._check(other)
        lo = min(self.min_element, other.min_element)
        hi = max(self.stable_from, other.stable_from)
        return RelativeIdeal(self.parent, lo, self.mask(lo, hi) | other.mask(lo, hi), hi)

    def intersection(self, other: "RelativeIdeal") -> "RelativeIdeal":
        self._check(other)
        lo = max(self.min_element, other.min_element)
        hi = max(self.stable_from, other.stable_from, lo)
        return RelativeIdeal(self.parent, lo, self.mask(lo, hi) & other.mask(lo, hi), hi)

    def product(self, other: "RelativeIdeal") -> "RelativeIdeal":
        self._check(other)
        mu_i, mu_j = self.min_element, other.min_element
        lo = mu_i + mu_j
        tail = min(self.stable_from + mu_j, mu_i + other.stable_from)
        width = tail - lo
        if width <= 0:
            return RelativeIdeal(self.parent, lo, 0, lo)
        jmask = other.mask(mu_j, mu_j + width)
        out = 0
        imask = self.mask(mu_i, mu_i + width)
        while imask:
            low = imask & -imask
            out |= jmask << (low.bit_length() - 1)
            imask ^= low
        return RelativeIdeal(self.parent, lo, out, tail)

    def shift(self, k: int) -> "RelativeIdeal":
        return RelativeIdeal(self.parent, self.min_element + k, self._bits, self.stable_from + k)

    def colon(self, other: "RelativeIdeal") -> "RelativeIdeal":
        """``{z : z + other ⊆ self}``."""
        self._check(other)
        gens = other.minimal_generators()
        out = self.shift(-gens[0])
        for g in gens[1:]:
            out = out.intersection(self.shift(-g))
        return out

    def minimal_generators(self) -> list[int]:
        """``E ∖ (E + (H ∖ {0}))``, ascending."""
        H = self.parent
        hgens = H.minimal_generators
        lo = self.min_element
        hi = self.stable_from + hgens[0]
        own = self.mask(lo, hi)
        covered = 0
        for h in hgens:
            covered |= own << h
        gens_mask = own & ~covered & _ones(hi - lo)
        out = []
        while gens_mask:
            low = gens_mask & -gens_mask
            out.append(lo + low.bit_length() - 1)
            gens_mask ^= low
        return out

    # -- comparisons --------------------------------------------------

    def first_element_outside(self, other: "RelativeIdeal") -> int | None:
        lo = self.min_element
        hi = max(self.stable_from, other.stable_from, lo)
        diff = self.mask(lo, hi) & ~other.mask(lo, hi)
        if diff == 0:
            return None
        return lo + (diff & -diff).bit_length() - 1

    def issubset(self, other: "RelativeIdeal") -> bool:
        return self.first_element_outside(other) is None

    def __le__(self, other):
        return self.issubset(other)

    def __eq__(self, other):
        if not isinstance(other, RelativeIdeal):
            return NotImplemented
        return (
            self.parent == other.parent
            and self.min_element == other.min_element
            and self.stable_from == other.stable_from
            and self._bits == other._bits
        )

    def __hash__(self):
        return hash((self.parent, self.min_element, self.stable_from, self._bits))

    def __repr__(self):
        return (
            f"RelativeIdeal({self.window()} ∪ [{self.stable_from},∞) over {self.parent!r})"
        )

    def rebase(self, parent: NumericalSemigroup) -> "RelativeIdeal":
        """Same set, viewed as an ideal over ``parent`` (must be stable)."""
        out = RelativeIdeal(parent, self.min_element, self._bits, self.stable_from)
        for x in out.window():
            for h in parent.minimal_generators:
                if x + h not in out:
                    raise ValueError(f"set is not stable under {parent!r}: {x} + {h}")
        return out


def ideal_from_generators(H: NumericalSemigroup, gens: Iterable[int]) -> RelativeIdeal:
    gens = sorted(set(int(g) for g in gens))
    if not gens:
        raise ValueError("empty generator list")
    lo = gens[0]
    tail = min(g + H.conductor for g in gens)
    hmask = H.mask
    bits = 0
    for g in gens:
        if g < tail:
            bits |= hmask << (g - lo)
            # the semigroup's own tail begins at g + c
            start = g + H.conductor
            if start < tail:
                bits |= _ones(tail - start) << (start - lo)
    return RelativeIdeal(H, lo, bits, tail)


def principal(H: NumericalSemigroup, k: int = 0) -> RelativeIdeal:
    return ideal_from_generators(H, [k])


def whole_line(H: NumericalSemigroup, k: int = 0) -> RelativeIdeal:
    """``[k, ∞)``; for k = 0 this is the integral closure ℕ."""
    return RelativeIdeal(H, k, 0, k)


def conductor_ideal(H: NumericalSemigroup) -> RelativeIdeal:
    return whole_line(H, H.conductor)


def canonical_ideal(H: NumericalSemigroup) -> RelativeIdeal:
    """``{x : F - x ∉ H}``, cross-checked against its PF presentation."""
    c = H.conductor
    F = c - 1
    bits = 0
    for x in range(c):
        if (F - x) not in H:
            bits |= 1 << x
    omega = RelativeIdeal(H, 0, bits, c)
    via_pf = ideal_from_generators(H, [F - a for a in H.pseudo_frobenius()])
    if omega != via_pf:
        raise RuntimeError(f"canonical ideal constructions disagree for {H!r}")
    return omega


def union_sum(I: RelativeIdeal, J: RelativeIdeal) -> RelativeIdeal:
    return I.union_sum(J)


def product(I: RelativeIdeal, J: RelativeIdeal) -> RelativeIdeal:
    return I.product(J)


def shift(I: RelativeIdeal, k: int) -> RelativeIdeal:
    return I.shift(k)


def colon(I: RelativeIdeal, J: RelativeIdeal) -> RelativeIdeal:
    return I.colon(J)


def length_between(inner: RelativeIdeal, outer: RelativeIdeal) -> int:
    """``|outer ∖ inner|``; requires ``inner ⊆ outer``."""
    inner._check(outer)
    w = inner.first_element_outside(outer)
    if w is not None:
        raise ContainmentError(f"{w} lies in the inner ideal but not the outer one", w)
    lo = min(inner.min_element, outer.min_element)
    hi = max(inner.stable_from, outer.stable_from, lo)
    diff = outer.mask(lo, hi) & ~inner.mask(lo, hi)
    return bin(diff).count("1")


def minimal_ideal_generators(I: RelativeIdeal) -> list[int]:
    return I.minimal_generators()
