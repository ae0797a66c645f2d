import io
import json

from nsg.explorer import (
    ScanFilters,
    ScanInvariantError,
    ScanRecord,
    question_a_frontier,
    records_from_lines,
    reverify,
    scan,
    tree_children,
    trim_to_checkpoint,
)
from nsg.semigroup import NATURALS, from_gap_set, from_generators
from conftest import brute_force_gap_sets

FF5 = [13, 14, 15, 16, 17, 18, 21, 23]


def test_tree_children():
    assert tree_children(NATURALS) == [from_generators([2, 3])]
    kids = tree_children(from_generators([2, 3]))
    assert set(kids) == {from_generators([3, 4, 5]), from_generators([2, 5])}
    for H in kids:
        assert H.genus == 2


def test_counts_against_brute_force():
    s = scan(8)
    brute = [len(brute_force_gap_sets(g)) for g in range(9)]
    assert brute == [1, 1, 2, 4, 7, 12, 23, 39, 67]
    assert [s.counts_by_genus[g] for g in range(9)] == brute
    assert s.total == 156


def test_enumeration_is_the_brute_force_set():
    recs = []
    scan(7, collect=recs)
    got = {tuple(from_generators(r.minimal_generators).gaps()) for r in recs}
    want = {gaps for g in range(8) for gaps in brute_force_gap_sets(g)}
    assert got == want and len(recs) == len(want)


def test_genus_zero():
    recs = []
    s = scan(0, collect=recs)
    assert s.total == 1 and len(recs) == 1
    assert recs[0].minimal_generators == [1]
    assert s.violations_by_type == {}


def test_canonical_order_and_thread_invariance():
    a, b = [], []
    s1 = scan(10, collect=a, threads=1)
    s2 = scan(10, collect=b, threads=3)
    assert a == b
    assert s1.counts_by_genus == s2.counts_by_genus
    keys = [(r.genus, tuple(from_generators(r.minimal_generators).gaps())) for r in a]
    assert keys == sorted(keys)


def test_filters_and_records():
    recs = []
    scan(9, ScanFilters(type_eq=2), collect=recs)
    assert recs and all(r.cm_type == 2 for r in recs)
    recs = []
    scan(9, ScanFilters(far_flung_only=True), collect=recs)
    assert all(r.far_flung for r in recs)
    for r in recs[:20]:
        reverify(r)


def test_type_five_violation_found():
    recs = []
    s = scan(17, ScanFilters(only_violations=True), collect=recs)
    assert any(r.minimal_generators == FF5 and r.cm_type == 5 for r in recs)
    assert s.violations_by_type.get(5, 0) >= 1
    for t in (1, 2, 3):
        assert t not in s.violations_by_type
    for r in recs:
        reverify(r)


def test_frontier():
    f = question_a_frontier(10)
    assert all(f["minimal_violations"][str(t)] == [] for t in (1, 2, 3))
    f = question_a_frontier(0)
    assert all(v == [] for v in f["minimal_violations"].values())


def test_sink_and_checkpoint(tmp_path):
    out = tmp_path / "scan.jsonl"
    ckpt = str(tmp_path / "scan.ckpt")
    with open(out, "w") as sink:
        s = scan(6, sink=sink, checkpoint=ckpt)
    lines = out.read_text().splitlines()
    assert len(lines) == s.total == 1 + 1 + 2 + 4 + 7 + 12 + 23
    assert json.load(open(ckpt)) == {"completed_genus": 6}
    recs = records_from_lines(lines)
    assert recs[0] == ScanRecord([1], 0, -1, 1, 0, 0, 0, True, True)
    assert out.read_bytes().endswith(b"\n") and b"\r" not in out.read_bytes()
    # resume to a larger genus: only the new levels are appended
    with open(out, "a") as sink:
        s = scan(8, sink=sink, checkpoint=ckpt)
    recs = records_from_lines(out.read_text().splitlines())
    assert len(recs) == 156
    assert s.emitted == 39 + 67


def test_trim_to_checkpoint(tmp_path):
    out = tmp_path / "scan.jsonl"
    buf = io.StringIO()
    scan(5, sink=buf)
    out.write_text(buf.getvalue())
    trim_to_checkpoint(str(out), 3)
    assert len(out.read_text().splitlines()) == 1 + 1 + 2 + 4


def test_reverify_catches_tampering():
    rec = ScanRecord(FF5, 17, 25, 5, 8, 8, 9, True, True)
    try:
        reverify(rec)
    except ScanInvariantError:
        pass
    else:
        raise AssertionError("tampered record passed")


def test_gap_set_roundtrip_over_scan():
    recs = []
    scan(9, collect=recs)
    for r in recs:
        H = from_generators(r.minimal_generators)
        assert from_gap_set(H.gaps()) == H
