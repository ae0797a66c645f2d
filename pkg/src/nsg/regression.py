"""Reference worked examples, checked end to end.

Each fixture is a name, an expected value and a thunk producing the actual
value. ``run_all`` evaluates every fixture and reports exact matches.
"""
from __future__ import annotations

from .bg import (
    bg_bounds,
    check_length_identity,
    interval_candidates,
    relative_colength,
    search_symmetric_subsemigroups,
    standard_symmetric_subsemigroup,
)
from .explorer import ScanFilters, question_a_frontier, scan
from .ideal import canonical_ideal, ideal_from_generators, length_between, principal
from .semigroup import NumericalSemigroup
from .trace import analyze, check_duality, colength, g_minus_n, is_far_flung, trace_ideal

FF5 = (13, 14, 15, 16, 17, 18, 21, 23)  # far-flung, type 5
EX_BG2 = (10, 11, 12, 13, 14, 17)
FF3 = (5, 6, 13, 14)
INTERVAL_10_14 = tuple(range(10, 15))


def sg(gens) -> NumericalSemigroup:
    return NumericalSemigroup.from_generators(gens)


def family_generators(ell: int) -> list[int]:
    """Generators of the family with colength ``2ell+3`` and bg ``ell+2``."""
    if ell < 0:
        raise ValueError("ell must be nonnegative")
    return list(range(6 * ell + 10, 9 * ell + 15)) + [
        9 * ell + 17 + 3 * s for s in range(3 * ell + 1)
    ]


def family_candidate(ell: int) -> list[int]:
    return list(range(6 * ell + 10, 9 * ell + 15))


def family_report(ell: int) -> dict:
    H = sg(family_generators(ell))
    cand = sg(family_candidate(ell))
    rep = analyze(H)
    b = bg_bounds(H, enable_search=False, candidates=(cand,))
    ok = rep.colength == 2 * ell + 3 and b.exact == ell + 2
    return {
        "ell": ell,
        "invariants": rep.to_dict(),
        "bg": b.to_dict(),
        "candidate": list(cand.minimal_generators),
        "candidate_colength": relative_colength(H, cand),
        "expected_colength": 2 * ell + 3,
        "expected_bg": ell + 2,
        "ok": ok,
    }


def _trace_gens(gens):
    return trace_ideal(sg(gens)).minimal_generators()


def _ideal_set(H, gens, bound):
    I = ideal_from_generators(H, gens)
    return [x for x in range(bound) if x in H and x not in I], I.stable_from


def _search_min(gens, d):
    r = search_symmetric_subsemigroups(sg(gens), d)
    return r.minimum, r.exhaustive


def _search_has(gens, d, sub):
    r = search_symmetric_subsemigroups(sg(gens), d)
    return sg(sub) in r.witnesses


def _three_subrings():
    H = sg(FF3)
    out = []
    for gens in [(5, 6), (6, 10, 11, 14, 15), tuple(range(10, 19))]:
        S = sg(gens)
        out.append((S.is_symmetric(), S.is_subsemigroup_of(H), relative_colength(H, S)))
    return out


def _bg(gens):
    b = bg_bounds(sg(gens))
    return b.lower, b.upper, b.exact, b.certificate


def _scan_has_ff5():
    recs = []
    scan(17, ScanFilters(only_violations=True), collect=recs)
    return any(r.minimal_generators == list(FF5) and r.cm_type == 5 for r in recs)


def _frontier_ff5():
    f = question_a_frontier(17)
    return any(
        v["minimal_generators"] == list(FF5) for v in f["minimal_violations"]["5"]
    )


def _duality_spots():
    out = []
    H = sg(EX_BG2)
    out.append(check_duality(H, trace_ideal(H), principal(H)))
    H2 = sg(FF3)
    out.append(check_duality(H2, principal(H2), canonical_ideal(H2)))
    return out


def _omega_length(gens):
    H = sg(gens)
    return length_between(principal(H), canonical_ideal(H))


def _identity(gens, sub):
    r = check_length_identity(sg(gens), sg(sub))
    return r.ok, r.trace_excess


def fixtures():
    """List of ``(name, expected, thunk)``."""
    fx = [
        ("genus and n of <13..18,21,23>", (17, 9), lambda: (sg(FF5).genus, sg(FF5).sporadic_count)),
        ("<10..14> is symmetric", True, lambda: sg(INTERVAL_10_14).is_symmetric()),
        ("ideal (10,11,13,14,29) misses {0,12,17} of <10..14,17>", ([0, 12, 17], 20),
         lambda: _ideal_set(sg(EX_BG2), [10, 11, 13, 14, 29], 40)),
        ("trace generators of <10..14,17>", [10, 11, 13, 14, 29], lambda: _trace_gens(EX_BG2)),
        ("trace of <13..18,21,23> is [26,inf)", (26, 26),
         lambda: (lambda T: (T.min_element, T.stable_from))(trace_ideal(sg(FF5)))),
        ("colength <10..14,17>", 3, lambda: colength(sg(EX_BG2))),
        ("colength <13..18,21,23>", 9, lambda: colength(sg(FF5))),
        ("colength <5,6,13,14>", 3, lambda: colength(sg(FF3))),
        ("g-n <13..18,21,23>", 8, lambda: g_minus_n(sg(FF5))),
        ("g-n <5,6,13,14>", 4, lambda: g_minus_n(sg(FF3))),
        ("|Omega \\ H| for <5,6,13,14>", 4, lambda: _omega_length(FF3)),
        ("far-flung <13..18,21,23>", True, lambda: is_far_flung(sg(FF5))),
        ("far-flung <5,6,13,14>", True, lambda: is_far_flung(sg(FF3))),
        ("analyze <13..18,21,23>", (9, 8, False, True, 5),
         lambda: (lambda r: (r.colength, r.g_minus_n, r.question_a_satisfied, r.far_flung, r.cm_type))(analyze(sg(FF5)))),
        ("relative colength <10..14> in <10..14,17>", 2, lambda: relative_colength(sg(EX_BG2), sg(INTERVAL_10_14))),
        ("relative colength <5,6> in <5,6,13,14>", 3, lambda: relative_colength(sg(FF3), sg((5, 6)))),
        ("standard symmetric subsemigroup of <5,6,13,14>", (tuple(range(10, 19)), 3),
         lambda: (lambda S: (S.minimal_generators, relative_colength(sg(FF3), S)))(standard_symmetric_subsemigroup(sg(FF3)))),
        ("three Gorenstein subrings of <5,6,13,14> at colength 3", [(True, True, 3)] * 3, _three_subrings),
        ("interval candidates of <10..14,17> include <10..14>", True,
         lambda: sg(INTERVAL_10_14) in interval_candidates(sg(EX_BG2))),
        ("interval candidates of family(1) include <16..23> at colength 3", True,
         lambda: any(S == sg(range(16, 24)) and relative_colength(sg(family_generators(1)), S) == 3
                     for S in interval_candidates(sg(family_generators(1))))),
        ("search <10..14,17>, budget 2", (2, True), lambda: _search_min(EX_BG2, 2)),
        ("search <10..14,17> finds <10..14>", True, lambda: _search_has(EX_BG2, 2, INTERVAL_10_14)),
        ("search <5,6,13,14>, budget 3", (3, True), lambda: _search_min(FF3, 3)),
        ("search <5,6,13,14> finds <5,6>", True, lambda: _search_has(FF3, 3, (5, 6))),
        ("bg <10..14,17>", (2, 2, 2, "cor33_meets_witness"), lambda: _bg(EX_BG2)),
        ("bg <13..18,21,23>", (9, 9, 9, "far_flung_prop43"), lambda: _bg(FF5)),
        ("bg <5,6,13,14>", (3, 3, 3, "far_flung_prop43"), lambda: _bg(FF3)),
        ("bg family(2)", (4, 4, 4), lambda: _bg(family_generators(2))[:3]),
        ("duality spot checks", [True, True], _duality_spots),
        ("length identity <10..14,17> over <10..14>", (True, 1), lambda: _identity(EX_BG2, INTERVAL_10_14)),
        ("length identity <5,6,13,14> over <5,6>", (True, 3), lambda: _identity(FF3, (5, 6))),
    ]
    for ell in range(5):
        fx.append((
            f"family({ell}): colength, bg",
            (2 * ell + 3, ell + 2),
            lambda ell=ell: (lambda r: (r["invariants"]["colength"], r["bg"]["exact"]))(family_report(ell)),
        ))
    fx.append(("scan to genus 17 finds the type-5 violation", True, _scan_has_ff5))
    fx.append(("frontier to genus 17, type-5 bucket", True, _frontier_ff5))
    return fx


def run_all() -> list[dict]:
    rows = []
    for name, expected, thunk in fixtures():
        try:
            got = thunk()
        except Exception as exc:  # report and keep going
            got = f"error: {exc!r}"
        rows.append({"fixture": name, "expected": expected, "got": got, "ok": got == expected})
    return rows
