"""Naive finite-set oracle for numerical semigroups and their monomial ideals.

Everything here works on explicit Python sets over a bounded window and is
deliberately independent of the ``nsg`` package.
"""
from math import gcd
from functools import reduce


def elements(gens, limit):
    """Elements of <gens> in [0, limit], by repeated closure."""
    assert reduce(gcd, gens) == 1
    have = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                s = a + g
                if s <= limit and s not in have:
                    have.add(s)
                    nxt.append(s)
        frontier = nxt
    return have


def frobenius_bound(gens):
    m, M = min(gens), max(gens)
    return max((m - 1) * (M - 1), 1)


class Sg:
    def __init__(self, gens):
        self.limit = 4 * (frobenius_bound(gens) + 2)
        self.E = elements(gens, self.limit)
        gaps = [x for x in range(self.limit + 1) if x not in self.E]
        self.gaps = set(gaps)
        self.F = max(gaps) if gaps else -1
        self.c = self.F + 1
        self.g = len(gaps)
        self.n = len([h for h in self.E if h < self.F])

    def has(self, x):
        if x < 0:
            return False
        if x > self.limit:
            return True
        return x in self.E

    def pf(self):
        if self.F < 0:
            return [-1]
        nonzero = [h for h in self.E if 0 < h]
        return sorted(a for a in self.gaps
                      if all(self.has(a + h) for h in nonzero))

    def min_gens(self):
        nz = sorted(h for h in self.E if h > 0)
        out = []
        for x in nz:
            if x > self.c + min(nz) + 1:
                break
            if not any(self.has(a) and self.has(x - a) for a in range(1, x)):
                out.append(x)
        return out


def omega(S, lo, hi):
    return {x for x in range(lo, hi) if not S.has(S.F - x)}


def ideal(S, gens, lo, hi):
    return {x for x in range(lo, hi) if any(S.has(x - a) for a in gens)}


def colon(I, J, lo, hi, zlo, zhi):
    """{z in [zlo,zhi) : z + J ⊆ I} with I, J sets known on [lo, hi)."""
    out = set()
    for z in range(zlo, zhi):
        if all((z + j) in I for j in J if lo <= z + j < hi):
            out.add(z)
    return out


def trace(S):
    """Trace set restricted to [0, 2c+2] via (H : Omega) + Omega."""
    hi = 4 * (S.c + 4)
    H = {x for x in range(-hi, hi) if S.has(x)}
    Om = omega(S, -hi, hi)
    # z + Omega ⊆ H: Omega's elements up to c + max gen decide it
    Om_small = {x for x in Om if x <= S.c + 1}
    K = set()
    for z in range(-S.c - 2, S.c + 2):
        if all(S.has(z + x) for x in Om_small):
            K.add(z)
    K |= set(range(S.c + 2, hi))
    T = {k + x for k in K for x in Om if k + x < 2 * S.c + 3}
    return T
