"""Brute-force verification harness.

Counts come from exhaustive scans with the definition-level membership
kernels; the closed-form constructors are only ever the thing being checked.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from steinhaus import graph, kernels, subspace
from steinhaus.gf2core import BinSeq
from steinhaus.subspace import IndexSet, SymClass
from steinhaus.triangle import Triangle

MAX_SEQ = 22
MAX_GRAPH = 12
MAX_GENSET = 4


@dataclass
class Report:
    lines: list[str] = field(default_factory=list)
    failures: int = 0

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def check(self, ok: bool, label: str, expected, got) -> None:
        self.lines.append(f"{'PASS' if ok else 'FAIL'} {label} expected={expected} got={got}")
        self.failures += not ok

    def note(self, line: str) -> None:
        self.lines.append(line)

    def extend(self, other: "Report") -> "Report":
        self.lines += other.lines
        self.failures += other.failures
        return self

    def __str__(self) -> str:
        return "\n".join(self.lines)


def brute_members(cls: SymClass, n: int) -> list[BinSeq]:
    if not 0 <= n <= MAX_SEQ:
        raise ValueError(f"brute-force scans are capped at n={MAX_SEQ}")
    return [BinSeq(n, s) for s in kernels.scan_members(n, cls.kernel_code)]


def verify_dims(n_max: int = 14, classes=tuple(SymClass)) -> Report:
    if n_max > MAX_SEQ:
        raise ValueError(f"brute-force scans are capped at n={MAX_SEQ}")
    rep = Report()
    for cls in classes:
        for n in range(0, n_max + 1):
            got = len(kernels.scan_members(n, cls.kernel_code))
            rep.check(got == 2 ** subspace.dim(cls, n), f"cls={cls.value} n={n}",
                      2 ** subspace.dim(cls, n), got)
    return rep


def verify_basis(cls: SymClass, n: int) -> Report:
    rep = Report()
    b = subspace.basis(cls, n)
    members = set(kernels.scan_members(n, cls.kernel_code))
    vecs = [t.first_row.bits for t in b.elements]
    rank = kernels.gf2_rank(vecs)
    inside = all(v in members for v in vecs)
    span = {0}
    for v in vecs:
        span |= {s ^ v for s in span}
    ok = rank == len(vecs) and inside and span == members
    rep.check(ok, f"cls={cls.value} n={n}", len(members), len(span) if inside else "non-member")
    return rep


def verify_bases(n_max: int = 14, classes=tuple(SymClass)) -> Report:
    rep = Report()
    for cls in classes:
        for n in range(0, n_max + 1):
            rep.extend(verify_basis(cls, n))
    return rep


def verify_graph_iso(n_max: int = MAX_GRAPH) -> Report:
    """Evenness against dihedral symmetry of ``theta``, the ``psi`` roundtrip,
    and the even-graph basis spanning the scanned set, order by order."""
    if n_max > MAX_GRAPH:
        raise ValueError(f"graph scans are capped at order {MAX_GRAPH}")
    rep = Report()
    for n in range(1, n_max + 1):
        even, _ = kernels.scan_graph_parity(n)
        even_set = set(even)
        bad = 0
        dst0 = set()
        for s in range(1 << (n - 1)):
            g = graph.SteinhausGraph(BinSeq(n - 1, s))
            t = graph.theta(g)
            dihedral = kernels.member(t.first_row.bits, t.size, kernels.DSYM)
            if (s in even_set) != dihedral:
                bad += 1
            if s in even_set:
                dst0.add(t.first_row.bits)
                if graph.psi(t) != g:
                    bad += 1
        scanned = set(kernels.scan_members(2 * n - 1, kernels.DSYM0)) if 2 * n - 1 <= MAX_SEQ else dst0
        span = {0}
        for g in graph.basis_esg(n).graphs:
            span |= {x ^ g.seq.bits for x in span}
        ok = bad == 0 and dst0 == scanned and span == even_set
        rep.check(ok, f"cls=ESG n={n}", len(even_set), len(span) if bad == 0 else f"{bad} mismatches")
    return rep


def _injective(g: IndexSet) -> bool:
    n = g.n
    seen = set()
    for s in range(1 << n):
        key = g.project(Triangle(BinSeq(n, s))).bits
        if key in seen:
            return False
        seen.add(key)
    return True


def count_generating_sets(n: int) -> int:
    """Size-``n`` subsets of the index set passing the determinant test;
    each verdict is cross-checked by brute-force injectivity."""
    if not 0 <= n <= MAX_GENSET:
        raise ValueError(f"generating-set counts are capped at n={MAX_GENSET}")
    cells = [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
    count = 0
    for combo in itertools.combinations(cells, n):
        g = IndexSet(n, combo)
        det = subspace.is_generating_index_set_full(g)
        if det != _injective(g):
            raise AssertionError(f"determinant test and injectivity disagree on {combo}")
        count += det
    return count


def verify_gensets(n_max: int = MAX_GENSET) -> Report:
    rep = Report()
    for n in range(1, n_max + 1):
        rep.note(f"n={n}: {count_generating_sets(n)}")
    return rep


__all__ = [
    "Report", "brute_members", "verify_dims", "verify_basis", "verify_bases",
    "verify_graph_iso", "count_generating_sets", "verify_gensets",
    "MAX_SEQ", "MAX_GRAPH", "MAX_GENSET",
]
