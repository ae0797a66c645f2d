import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nsg.semigroup import (
    NATURALS,
    NumericalSemigroup,
    SemigroupError,
    apery_set,
    cm_type,
    from_gap_set,
    from_generators,
    is_symmetric,
    pseudo_frobenius,
)
from oracle import Sg


def test_naturals():
    H = from_generators([1])
    assert H == NATURALS
    assert (H.frobenius, H.conductor, H.genus, H.sporadic_count) == (-1, 0, 0, 0)
    assert pseudo_frobenius(H) == [-1]
    assert cm_type(H) == 1 and is_symmetric(H)
    assert apery_set(H, 1) == [0]


def test_type_five_example():
    H = from_generators([13, 14, 15, 16, 17, 18, 21, 23])
    assert H.genus == 17
    assert H.sporadic_count == 9
    assert pseudo_frobenius(H) == [19, 20, 22, 24, 25]
    assert cm_type(H) == 5


def test_small_cases():
    H = from_generators([3, 4, 5])
    assert (H.frobenius, H.genus) == (2, 2)
    assert H.minimal_generators == (3, 4, 5)
    assert not H.contains(2)
    assert H.contains(100)
    assert H.apery_set(3) == [0, 4, 5]
    assert from_generators([2, 3]).apery_set(2) == [0, 3]
    assert pseudo_frobenius(from_generators([2, 3])) == [1]
    assert pseudo_frobenius(from_generators([5, 6, 13, 14])) == [7, 8, 9]


def test_generator_reduction():
    H = from_generators([6, 3, 4, 5, 8, 9, 4])
    assert H.minimal_generators == (3, 4, 5)


def test_membership_gaps():
    H = from_generators([10, 11, 12, 13, 14, 17])
    assert not H.contains(19)
    assert H.gaps() == [1, 2, 3, 4, 5, 6, 7, 8, 9, 15, 16, 18, 19]
    assert not H.contains(-3)


def test_symmetry_and_type():
    assert is_symmetric(from_generators(range(10, 15)))
    H = from_generators(range(10, 15))
    assert (H.genus, H.frobenius) == (15, 29)
    H = from_generators([10, 11, 12, 13, 14, 17])
    assert pseudo_frobenius(H) == [15, 16, 18, 19]
    assert cm_type(H) == 4 and not is_symmetric(H)


def test_rejections():
    with pytest.raises(SemigroupError):
        from_generators([])
    with pytest.raises(SemigroupError):
        from_generators([4, 6, 10])
    with pytest.raises(SemigroupError):
        from_generators([0, 3])
    with pytest.raises(SemigroupError, match="1 \\+ 1 = 2"):
        from_gap_set({2})
    with pytest.raises(SemigroupError):
        from_gap_set({0, 1})
    with pytest.raises(SemigroupError):
        NATURALS.apery_set(0)
    with pytest.raises(SemigroupError):
        from_generators([3, 4, 5]).apery_set(2)


def test_gap_set_constructor():
    assert from_gap_set(set()) == NATURALS
    assert from_gap_set({1, 2}) == from_generators([3, 4, 5])
    # {1, 3} is a genuine gap set
    assert from_gap_set({1, 3}) == from_generators([2, 5])


def test_interval_constructor():
    assert NumericalSemigroup.interval(10, 14) == from_generators(range(10, 15))
    assert NumericalSemigroup.interval(1, 1) == NATURALS
    with pytest.raises(SemigroupError):
        NumericalSemigroup.interval(5, 10)


def test_oracle_equivalence_exhaustive_small():
    """Every semigroup with conductor <= 40 reached from small generator sets."""
    import itertools

    seen = set()
    for k in (2, 3):
        for gens in itertools.combinations(range(2, 16), k):
            try:
                H = from_generators(gens)
            except SemigroupError:
                continue
            if H.conductor > 40 or H in seen:
                continue
            seen.add(H)
            S = Sg(list(gens))
            bound = 4 * (H.frobenius + 2)
            assert H.gaps() == sorted(S.gaps)
            assert [x for x in range(bound) if x in H] == [x for x in range(bound) if S.has(x)]
            assert H.pseudo_frobenius() == S.pf()
            assert list(H.minimal_generators) == S.min_gens()
    assert len(seen) > 100


@settings(max_examples=150, deadline=None)
@given(st.lists(st.integers(2, 25), min_size=1, max_size=5))
def test_invariants_random(gens):
    from math import gcd
    from functools import reduce

    if reduce(gcd, gens) != 1:
        with pytest.raises(SemigroupError):
            from_generators(gens)
        return
    H = from_generators(gens)
    assert H.genus + H.sporadic_count == H.frobenius + 1
    assert max(H.pseudo_frobenius()) == H.frobenius
    assert (H.cm_type == 1) == H.is_symmetric()
    assert from_gap_set(H.gaps()) == H
    assert from_generators(H.minimal_generators) == H
    assert 0 in H and H.frobenius not in H
    small = H.small_elements()
    for a in small:
        for b in small:
            assert (a + b) in H
    for g in H.minimal_generators:
        assert not any(a in H and (g - a) in H for a in range(1, g))
    m = H.multiplicity
    ap = H.apery_set(m)
    assert all(w in H and (w - m) not in H for w in ap)
    assert max(ap) - m == H.frobenius


def test_pickle_roundtrip():
    import pickle

    H = from_generators([5, 6, 13, 14])
    G = pickle.loads(pickle.dumps(H))
    assert G == H and hash(G) == hash(H) and G.minimal_generators == H.minimal_generators
