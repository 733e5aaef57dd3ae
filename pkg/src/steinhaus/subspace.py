"""Symmetric subspaces of Steinhaus triangles: membership, dimensions,
generating index sets, closed-form bases and coordinates."""

from __future__ import annotations

import enum
import itertools
import json
from dataclasses import dataclass
from typing import Sequence

from steinhaus import kernels
from steinhaus.gf2core import BinSeq, binom_mod2, bseq, eseq, sigma2
from steinhaus.triangle import Triangle, reflect, rho, rotate, u_triangle

ENUM_MAX_DIM = 24


class SymClass(enum.Enum):
    FULL = "FULL"
    H = "H"
    R = "R"
    D = "D"
    D0 = "D0"

    @classmethod
    def parse(cls, text: str) -> "SymClass":
        key = text.strip().upper()
        aliases = {"ST": "FULL", "HST": "H", "RST": "R", "DST": "D", "DST0": "D0"}
        return cls(aliases.get(key, key))

    @property
    def kernel_code(self) -> int:
        return {"FULL": 0, "H": 1, "R": 2, "D": 3, "D0": 4}[self.value]


@dataclass(frozen=True)
class IndexSet:
    n: int
    positions: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pos = tuple((int(i), int(j)) for i, j in self.positions)
        object.__setattr__(self, "positions", pos)
        for i, j in pos:
            if not 1 <= i <= j <= self.n:
                raise ValueError(f"position ({i}, {j}) not in the index set of size {self.n}")
        if len(set(pos)) != len(pos):
            raise ValueError("duplicate positions")

    def __len__(self) -> int:
        return len(self.positions)

    def project(self, t: Triangle) -> BinSeq:
        return BinSeq.from_bits(t.entry_materialized(i, j) for i, j in self.positions)


@dataclass(frozen=True)
class Basis:
    cls: SymClass
    n: int
    elements: tuple[Triangle, ...]
    index_set: IndexSet
    # construction index of each element, e.g. (0, 2, 4, 6) for an even-size D basis
    labels: tuple[int, ...] = ()

    def __len__(self) -> int:
        return len(self.elements)

    def to_dict(self) -> dict:
        return {
            "class": self.cls.value,
            "n": self.n,
            "elements": [str(t.first_row) for t in self.elements],
            "index_set": [list(p) for p in self.index_set.positions],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "Basis":
        klass = SymClass(d["class"])
        n = int(d["n"])
        elems = tuple(Triangle.from_str(e) for e in d["elements"])
        if any(t.size != n for t in elems):
            raise ValueError("element size does not match n")
        return cls(klass, n, elems, IndexSet(n, tuple(tuple(p) for p in d["index_set"])))


def is_member(cls: SymClass, t: Triangle) -> bool:
    if cls is SymClass.FULL:
        return True
    hsym = reflect(t) == t
    if cls is SymClass.H:
        return hsym
    rsym = rotate(t) == t
    if cls is SymClass.R:
        return rsym
    if cls is SymClass.D:
        return hsym and rsym
    return hsym and rsym and sigma2(t.first_row) == 0


def _all_zero(t: Triangle, positions) -> bool:
    return all(t.entry_materialized(i, j) == 0 for i, j in positions)


def _row_middles(n: int):
    return [(n - 2 * i, n - i) for i in range(n // 2)]


def check_hsym_via_middles(t: Triangle) -> bool:
    """Horizontal symmetry read off the middle entries of odd-length rows."""
    return _all_zero(t, _row_middles(t.size))


def check_dihsym_via_middles(t: Triangle) -> bool:
    """Dihedral symmetry: two of the three families of middle entries vanish."""
    n = t.size
    families = [
        _row_middles(n),
        [(i, 2 * i - 1) for i in range(1, n // 2 + 1)],
        [(i, n - i + 1) for i in range(1, n // 2 + 1)],
    ]
    return sum(_all_zero(t, f) for f in families) >= 2


def dim(cls: SymClass, n: int) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    if cls is SymClass.FULL:
        return n
    if cls is SymClass.H:
        return (n + 1) // 2
    if cls is SymClass.R:
        return n // 3 + (n % 3 == 1)
    if cls is SymClass.D:
        return (n + 3) // 6 + (n % 6 == 1)
    return n // 6 + (n % 6 == 4)


def canonical_index_set(cls: SymClass, n: int, js: dict[int, int] | None = None) -> IndexSet:
    """Generating index set of the subspace.

    For R, D and D0 the column of row ``i`` defaults to ``n - n//3``; ``js``
    overrides it per row (validity is then up to :func:`is_generating_index_set`).
    """
    d = dim(cls, n)
    if cls is SymClass.FULL:
        return IndexSet(n, tuple((1, j) for j in range(1, n + 1)))
    if cls is SymClass.H:
        return IndexSet(n, tuple((1, j) for j in range(1, d + 1)))
    if cls is SymClass.R:
        rows = list(range(1, d + 1))
    elif cls is SymClass.D:
        if n % 2 == 0:
            rows = [2 * i + 1 for i in range(d)]
        else:
            rows = [1] + [2 * i for i in range(1, d)] if d else []
    elif n % 2 == 0:
        rows = [2 * i + 1 for i in range(d)]
    else:
        rows = [2 * i for i in range(1, d + 1)]
    col = n - n // 3
    js = js or {}
    return IndexSet(n, tuple((i, js.get(i, col)) for i in rows))


def is_generating_index_set_full(g: IndexSet) -> bool:
    """Determinant test: the matrix ``(C(i_k - 1, j_k - l))_{k,l}`` is invertible mod 2."""
    n = g.n
    if len(g) != n:
        raise ValueError(f"a generating index set of ST({n}) has exactly {n} positions")
    rows = []
    for i, j in g.positions:
        v = 0
        for l in range(1, n + 1):
            v |= binom_mod2(i - 1, j - l) << (l - 1)
        rows.append(v)
    return kernels.gf2_rank(rows) == n


def is_generating_index_set(cls: SymClass, g: IndexSet) -> bool:
    """Projection onto ``g`` is an isomorphism from the subspace (checked on a basis)."""
    b = basis(cls, g.n)
    if len(g) != len(b):
        return False
    return kernels.gf2_rank([g.project(t).bits for t in b.elements]) == len(b)


def _rho_b(n: int, k: int, l: int) -> Triangle:
    return rho(Triangle(bseq(n, k, l)))


def basis(cls: SymClass, n: int, l: Sequence[int] | None = None) -> Basis:
    """Closed-form basis; ``l`` sets the free row offsets of the R basis (default 0)."""
    d = dim(cls, n)
    if cls is SymClass.FULL:
        elems = [Triangle(eseq(n, k)) for k in range(1, n + 1)]
        labels = list(range(1, n + 1))
    elif cls is SymClass.H:
        labels = list(range(1, d + 1))
        elems = [Triangle(bseq(n, n - 2 * k, -k)) for k in range(1, n // 2 + 1)]
        if n % 2:
            elems.append(Triangle(BinSeq.ones(n)))
    elif cls is SymClass.R:
        offsets = list(l) if l is not None else [0] * d
        if len(offsets) != d:
            raise ValueError(f"R basis of size {n} takes {d} offsets, got {len(offsets)}")
        labels = list(range(d))
        elems = [_rho_b(n, k, offsets[k]) for k in range(d)]
    else:
        if n % 2 == 0:
            labels = [2 * k for k in range(d)]
        elif cls is SymClass.D:
            labels = [0] + [2 * k + 1 for k in range(d - 1)] if d else []
        else:
            labels = [2 * k + 1 for k in range(d)]
        elems = []
        for k in labels:
            if k == 0 and n % 2:
                elems.append(u_triangle(n))
            else:
                elems.append(_rho_b(n, k, (k - n) // 2))
    return Basis(cls, n, tuple(elems), canonical_index_set(cls, n), tuple(labels))


def solve(vectors: Sequence[int], target: int) -> int | None:
    """Coefficient mask ``x`` (bit k for vector k) with XOR of selected vectors
    equal to ``target``; ``None`` when ``target`` is outside the span."""
    pivots: dict[int, tuple[int, int]] = {}
    for k, v in enumerate(vectors):
        combo = 1 << k
        while v:
            top = v.bit_length() - 1
            if top not in pivots:
                pivots[top] = (v, combo)
                break
            pv, pc = pivots[top]
            v ^= pv
            combo ^= pc
    x = 0
    while target:
        top = target.bit_length() - 1
        if top not in pivots:
            return None
        pv, pc = pivots[top]
        target ^= pv
        x ^= pc
    return x


def coordinates(b: Basis, t: Triangle) -> BinSeq | None:
    if t.size != b.n:
        raise ValueError("triangle size does not match the basis")
    x = solve([e.first_row.bits for e in b.elements], t.first_row.bits)
    if x is None:
        return None
    return BinSeq(len(b.elements), x)


def span_element(b: Basis, coords: BinSeq) -> Triangle:
    bits = 0
    for k, e in enumerate(b.elements, start=1):
        if coords.bit(k):
            bits ^= e.first_row.bits
    return Triangle(BinSeq(b.n, bits))


def enumerate_span(b: Basis) -> list[tuple[BinSeq, Triangle]]:
    d = len(b.elements)
    if d > ENUM_MAX_DIM:
        raise ValueError(f"dimension {d} exceeds the enumeration guard {ENUM_MAX_DIM}")
    out = []
    for combo in itertools.product((0, 1), repeat=d):
        c = BinSeq.from_bits(combo)
        out.append((c, span_element(b, c)))
    return out


def enumerate_subspace(cls: SymClass, n: int) -> list[Triangle]:
    """All members, ordered lexicographically by coordinate vector."""
    if dim(cls, n) > ENUM_MAX_DIM:
        raise ValueError(f"dimension {dim(cls, n)} exceeds the enumeration guard {ENUM_MAX_DIM}")
    return [t for _, t in enumerate_span(basis(cls, n))]


__all__ = [
    "SymClass", "IndexSet", "Basis", "is_member", "check_hsym_via_middles",
    "check_dihsym_via_middles", "dim", "canonical_index_set",
    "is_generating_index_set_full", "is_generating_index_set", "basis", "solve",
    "coordinates", "span_element", "enumerate_span", "enumerate_subspace",
]
