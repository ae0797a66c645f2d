"""Numerical semigroups: construction and basic invariants.

A numerical semigroup is stored by its conductor ``c`` and a bitmask of its
elements in ``[0, c)``; everything at or above the conductor belongs to it.
"""
from __future__ import annotations

import heapq
from functools import reduce
from math import gcd
from typing import Iterable


class SemigroupError(ValueError):
    """Invalid semigroup input (not cofinite, not closed, empty...)."""


class ContainmentError(ValueError):
    """A required inclusion fails; ``witness`` is an element showing it."""

    def __init__(self, message: str, witness: int):
        super().__init__(message)
        self.witness = witness


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _apery(gens: list[int]) -> list[int]:
    # Dijkstra over residues modulo the smallest generator
    m = gens[0]
    dist = [None] * m
    dist[0] = 0
    heap = [(0, 0)]
    while heap:
        d, r = heapq.heappop(heap)
        if d != dist[r]:
            continue
        for g in gens[1:]:
            nd, nr = d + g, (r + g) % m
            if dist[nr] is None or nd < dist[nr]:
                dist[nr] = nd
                heapq.heappush(heap, (nd, nr))
    return dist


class NumericalSemigroup:
    """Cofinite additive submonoid of the nonnegative integers.

    Instances are immutable and hashable. Build them with
    :meth:`from_generators` or :meth:`from_gap_set`.
    """

    __slots__ = ("conductor", "_mask", "genus", "minimal_generators")

    def __init__(self, conductor: int, mask: int, gens: tuple | None = None):
        # mask: bit x set iff x in H, for 0 <= x < conductor; assumed valid
        self.conductor = conductor
        self._mask = mask
        self.genus = conductor - _popcount(mask)
        if gens is None:
            gens = self._compute_minimal_generators()
        self.minimal_generators = gens

    # -- construction -------------------------------------------------

    @classmethod
    def from_generators(cls, gens: Iterable[int]) -> "NumericalSemigroup":
        gens = sorted(set(int(g) for g in gens))
        if not gens:
            raise SemigroupError("empty generator list")
        if gens[0] < 1:
            raise SemigroupError(f"generators must be positive, got {gens[0]}")
        if reduce(gcd, gens) != 1:
            raise SemigroupError(
                f"gcd of generators is {reduce(gcd, gens)}, semigroup is not cofinite"
            )
        m = gens[0]
        apery = _apery(gens)
        frob = max(apery) - m
        c = frob + 1
        mask = 0
        for r, w in enumerate(apery):
            # residue class r joins H from its Apery element on
            for x in range(w, c, m):
                mask |= 1 << x
        return cls(c, mask)

    @classmethod
    def interval(cls, a: int, b: int) -> "NumericalSemigroup":
        """``<a, a+1, ..., b>`` for ``a < b < 2a`` (or ``a = b = 1``)."""
        if a == 1:
            return cls(0, 0)
        if not a < b < 2 * a:
            raise SemigroupError(f"interval <{a}..{b}> needs a < b < 2a")
        # the blocks [ka, kb] overlap from k0 on
        k0 = -(-(a - 1) // (b - a))
        c = k0 * a
        mask = 0
        for k in range(k0):
            mask |= ((1 << (k * b - k * a + 1)) - 1) << (k * a)
        return cls(c, mask & ((1 << c) - 1), tuple(range(a, b + 1)))

    @classmethod
    def from_gap_set(cls, gaps: Iterable[int]) -> "NumericalSemigroup":
        gaps = set(int(x) for x in gaps)
        if not gaps:
            return cls(0, 0)
        if min(gaps) < 1:
            raise SemigroupError(f"gaps must be positive integers, got {min(gaps)}")
        c = max(gaps) + 1
        members = [x for x in range(c) if x not in gaps]
        for i, a in enumerate(members):
            for b in members[i:]:
                if a + b in gaps:
                    raise SemigroupError(
                        f"complement of gap set is not closed: {a} + {b} = {a + b} is a gap"
                    )
        mask = 0
        for x in members:
            mask |= 1 << x
        return cls(c, mask)

    @classmethod
    def from_window(cls, conductor: int, window: bytes | bytearray) -> "NumericalSemigroup":
        """Rebuild from a 0/1 membership window of length ``conductor``."""
        mask = 0
        for x in range(conductor):
            if window[x]:
                mask |= 1 << x
        return cls(conductor, mask)

    # -- basic invariants ---------------------------------------------

    @property
    def frobenius(self) -> int:
        return self.conductor - 1

    @property
    def sporadic_count(self) -> int:
        return self.conductor - self.genus

    @property
    def multiplicity(self) -> int:
        return self.minimal_generators[0]

    @property
    def mask(self) -> int:
        return self._mask

    @property
    def membership_window(self) -> bytes:
        return bytes((self._mask >> x) & 1 for x in range(self.conductor))

    def __contains__(self, x: int) -> bool:
        if x < 0:
            return False
        if x >= self.conductor:
            return True
        return bool((self._mask >> x) & 1)

    def contains(self, x: int) -> bool:
        return x in self

    def gaps(self) -> list[int]:
        return [x for x in range(self.conductor) if not (self._mask >> x) & 1]

    def elements_below(self, bound: int) -> list[int]:
        return [x for x in range(max(bound, 0)) if x in self]

    def small_elements(self) -> list[int]:
        """Elements of H below the conductor (0 included)."""
        return self.elements_below(self.conductor)

    def _compute_minimal_generators(self) -> tuple[int, ...]:
        c = self.conductor
        if c == 0:
            return (1,)
        above0 = self._mask >> 1
        # multiplicity: least nonzero element
        m = (above0 & -above0).bit_length() if above0 else c + 1
        top = c + m
        nonzero = self.mask_below(top) & ~1
        sums = 0
        rest = nonzero
        while rest:
            low = rest & -rest
            sums |= nonzero << (low.bit_length() - 1)
            rest ^= low
        gens = nonzero & ~sums
        out = []
        while gens:
            low = gens & -gens
            out.append(low.bit_length() - 1)
            gens ^= low
        return tuple(out)

    def mask_below(self, top: int) -> int:
        """Bitmask of ``H ∩ [0, top)``."""
        c = self.conductor
        if top <= c:
            return self._mask & ((1 << max(top, 0)) - 1)
        return self._mask | (((1 << top) - 1) ^ ((1 << c) - 1))

    def pseudo_frobenius(self) -> list[int]:
        """Gaps ``a`` with ``a + h`` in H for every nonzero h in H."""
        if self.conductor == 0:
            return [-1]
        gens = self.minimal_generators
        return [a for a in self.gaps() if all((a + h) in self for h in gens)]

    @property
    def cm_type(self) -> int:
        return len(self.pseudo_frobenius())

    def is_symmetric(self) -> bool:
        return 2 * self.genus == self.conductor

    def apery_set(self, m: int) -> list[int]:
        if m < 1 or m not in self:
            raise SemigroupError(f"{m} is not a nonzero element of the semigroup")
        out = [None] * m
        left = m
        x = 0
        while left:
            r = x % m
            if out[r] is None and x in self:
                out[r] = x
                left -= 1
            x += 1
        return out

    def is_subsemigroup_of(self, other: "NumericalSemigroup") -> bool:
        return self.first_element_outside(other) is None

    def first_element_outside(self, other: "NumericalSemigroup") -> int | None:
        """Least element of ``self`` not in ``other``, or None if contained."""
        top = max(self.conductor, other.conductor)
        diff = self.mask_below(top) & ~other.mask_below(top)
        if not diff:
            return None
        return (diff & -diff).bit_length() - 1

    # -- value semantics ----------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.conductor == other.conductor and self._mask == other._mask

    def __hash__(self):
        return hash((self.conductor, self._mask))

    def __repr__(self):
        return "<" + ", ".join(map(str, self.minimal_generators)) + ">"

    def __reduce__(self):
        return (NumericalSemigroup, (self.conductor, self._mask))


def from_generators(gens: Iterable[int]) -> NumericalSemigroup:
    return NumericalSemigroup.from_generators(gens)


def from_gap_set(gaps: Iterable[int]) -> NumericalSemigroup:
    return NumericalSemigroup.from_gap_set(gaps)


def pseudo_frobenius(H: NumericalSemigroup) -> list[int]:
    return H.pseudo_frobenius()


def cm_type(H: NumericalSemigroup) -> int:
    return H.cm_type


def is_symmetric(H: NumericalSemigroup) -> bool:
    return H.is_symmetric()


def apery_set(H: NumericalSemigroup, m: int) -> list[int]:
    return H.apery_set(m)


NATURALS = NumericalSemigroup(0, 0)
