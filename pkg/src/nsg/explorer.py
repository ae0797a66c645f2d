"""Exhaustive scans of the semigroup tree, ordered by genus.

Every numerical semigroup of genus g+1 arises exactly once by removing a
minimal generator larger than the Frobenius number from a semigroup of
genus g. The scan walks this tree with the compiled kernel, tallies the
trace invariants of every node, and streams records as JSON lines.
"""
from __future__ import annotations

import json
import logging
import os
import time
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import IO, Iterable, Optional

from . import kernels
from .semigroup import NumericalSemigroup
from .trace import analyze

log = logging.getLogger(__name__)

# genus at which the tree is cut into independent subtrees for workers
SPLIT_GENUS = 7


class ScanInvariantError(AssertionError):
    """A proven bound failed during a scan; this indicates a bug."""


@dataclass
class ScanRecord:
    minimal_generators: list
    genus: int
    frobenius: int
    cm_type: int
    colength: int
    g_minus_n: int
    sporadic_count: int
    far_flung: bool
    question_a_satisfied: bool

    def to_json(self) -> str:
        return json.dumps(asdict(self), separators=(",", ":"))


@dataclass
class ScanFilters:
    type_eq: Optional[int] = None
    only_violations: bool = False
    far_flung_only: bool = False

    def accepts(self, rec: ScanRecord) -> bool:
        if self.type_eq is not None and rec.cm_type != self.type_eq:
            return False
        if self.only_violations and rec.question_a_satisfied:
            return False
        if self.far_flung_only and not rec.far_flung:
            return False
        return True


@dataclass
class ScanSummary:
    genus_max: int
    counts_by_genus: dict = field(default_factory=dict)
    violations_by_type: dict = field(default_factory=dict)
    minimal_violations: dict = field(default_factory=dict)
    emitted: int = 0
    elapsed_s: float = 0.0
    backend: str = kernels.BACKEND
    threads: int = 1

    @property
    def total(self) -> int:
        return sum(self.counts_by_genus.values())

    def to_dict(self) -> dict:
        return {
            "genus_max": self.genus_max,
            "total": self.total,
            "counts_by_genus": {str(k): v for k, v in sorted(self.counts_by_genus.items())},
            "violations_by_type": {
                str(k): v for k, v in sorted(self.violations_by_type.items())
            },
            "minimal_violations": {
                str(k): v for k, v in sorted(self.minimal_violations.items())
            },
            "emitted": self.emitted,
            "elapsed_s": round(self.elapsed_s, 3),
            "backend": self.backend,
            "threads": self.threads,
        }


def tree_children(N: NumericalSemigroup) -> list[NumericalSemigroup]:
    """Semigroups ``N ∖ {x}`` for minimal generators ``x > F(N)``."""
    out = []
    for x in N.minimal_generators:
        if x > N.frobenius:
            c = x + 1
            mask = N.mask | (((1 << x) - 1) ^ ((1 << N.conductor) - 1))
            out.append(NumericalSemigroup(c, mask))
    return out


def _gaps_of(window: bytes, c: int) -> tuple:
    return tuple(x for x in range(c) if not window[x])


def _walk(args):
    window, c, genus, genus_max = args
    return kernels.scan_subtree(window, c, genus, genus_max)


def _raw_nodes(genus_max: int, threads: int) -> list:
    if threads <= 1 or genus_max <= SPLIT_GENUS:
        return kernels.scan_subtree(b"", 0, 0, genus_max)
    head = kernels.scan_subtree(b"", 0, 0, SPLIT_GENUS)
    roots = [n for n in head if n[2] == SPLIT_GENUS]
    out = [n for n in head if n[2] < SPLIT_GENUS]
    jobs = [(w, c, g, genus_max) for w, c, g, *_ in roots]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        for part in pool.map(_walk, jobs, chunksize=max(1, len(jobs) // (4 * threads))):
            out.extend(part)
    return out


def _record(node) -> ScanRecord:
    window, c, genus, gens, cm_type, col = node
    n = c - genus
    gn = genus - n
    return ScanRecord(
        minimal_generators=list(gens),
        genus=genus,
        frobenius=c - 1,
        cm_type=cm_type,
        colength=col,
        g_minus_n=gn,
        sporadic_count=n,
        far_flung=col == n,
        question_a_satisfied=col <= gn,
    )


def reverify(rec: ScanRecord) -> None:
    """Recompute a record from its generators with the ideal algebra."""
    H = NumericalSemigroup.from_generators(rec.minimal_generators)
    r = analyze(H)
    got = (H.genus, H.frobenius, r.cm_type, r.colength, r.g_minus_n,
           H.sporadic_count, r.far_flung, r.question_a_satisfied)
    want = (rec.genus, rec.frobenius, rec.cm_type, rec.colength, rec.g_minus_n,
            rec.sporadic_count, rec.far_flung, rec.question_a_satisfied)
    if got != want:
        raise ScanInvariantError(f"record for {H!r} does not re-verify: {want} vs {got}")


def read_checkpoint(path: Optional[str]) -> int:
    if not path or not os.path.exists(path):
        return -1
    with open(path, encoding="utf-8") as f:
        return int(json.load(f)["completed_genus"])


def trim_to_checkpoint(path: str, completed_genus: int) -> None:
    """Drop records of levels written after the last checkpoint."""
    with open(path, encoding="utf-8") as f:
        keep = [ln for ln in f if ln.strip() and json.loads(ln)["genus"] <= completed_genus]
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.writelines(keep)


def _write_checkpoint(path: str, genus: int) -> None:
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as f:
        json.dump({"completed_genus": genus}, f)
    os.replace(tmp, path)


def scan(
    genus_max: int,
    filters: Optional[ScanFilters] = None,
    sink: Optional[IO[str]] = None,
    threads: int = 1,
    checkpoint: Optional[str] = None,
    collect: Optional[list] = None,
) -> ScanSummary:
    """Visit every semigroup of genus <= ``genus_max`` once.

    Matching records go to ``sink`` (one JSON object per line) and/or the
    ``collect`` list, genus level by genus level in canonical order (genus,
    then gap set). With ``checkpoint`` the last fully written genus is
    recorded after each level, and levels already recorded are skipped.
    """
    if genus_max < 0:
        raise ValueError("genus_max must be nonnegative")
    filters = filters or ScanFilters()
    t0 = time.perf_counter()
    done = read_checkpoint(checkpoint)
    nodes = _raw_nodes(genus_max, threads)
    by_genus = defaultdict(list)
    for node in nodes:
        by_genus[node[2]].append(node)

    summary = ScanSummary(genus_max=genus_max, threads=threads)
    viol = Counter()
    for g in range(genus_max + 1):
        level = sorted(by_genus.get(g, ()), key=lambda n: _gaps_of(n[0], n[1]))
        summary.counts_by_genus[g] = len(level)
        for node in level:
            rec = _record(node)
            if rec.colength > rec.sporadic_count:
                raise ScanInvariantError(f"colength exceeds n(H) for {rec.minimal_generators}")
            if not rec.question_a_satisfied:
                if rec.cm_type <= 3:
                    raise ScanInvariantError(
                        f"type {rec.cm_type} semigroup {rec.minimal_generators} "
                        f"has colength {rec.colength} > g - n = {rec.g_minus_n}"
                    )
                reverify(rec)
                viol[rec.cm_type] += 1
                bucket = summary.minimal_violations.setdefault(rec.cm_type, [])
                if not bucket or bucket[0]["genus"] == rec.genus:
                    bucket.append({"genus": rec.genus, "minimal_generators": rec.minimal_generators})
            if g > done and filters.accepts(rec):
                summary.emitted += 1
                if sink is not None:
                    sink.write(rec.to_json() + "\n")
                if collect is not None:
                    collect.append(rec)
        if g > done:
            if sink is not None:
                sink.flush()
            if checkpoint:
                _write_checkpoint(checkpoint, g)
        log.debug("genus %d: %d semigroups", g, len(level))
    summary.violations_by_type = dict(viol)
    summary.elapsed_s = time.perf_counter() - t0
    return summary


def question_a_frontier(genus_max: int, threads: int = 1) -> dict:
    """Minimal-genus violations of ``colength <= g - n`` per CM type.

    An empty bucket only reports that none were found up to ``genus_max``.
    """
    summary = scan(genus_max, ScanFilters(only_violations=True), threads=threads)
    types = range(1, max([5, *summary.violations_by_type]) + 1)
    return {
        "genus_max": genus_max,
        "violations_by_type": {str(t): summary.violations_by_type.get(t, 0) for t in types},
        "minimal_violations": {
            str(t): summary.minimal_violations.get(t, []) for t in types
        },
    }


def records_from_lines(lines: Iterable[str]) -> list[ScanRecord]:
    return [ScanRecord(**json.loads(line)) for line in lines if line.strip()]
