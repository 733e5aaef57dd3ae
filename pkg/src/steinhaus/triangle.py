"""Binary Steinhaus triangles and the dihedral action on them.

A triangle of size ``n`` has entries ``a[i][j]`` for ``1 <= i <= j <= n``;
row ``i`` is the ``(i-1)``-th derived sequence of the first row.  The first
row is the canonical representation, so equality and hashing use it alone.
"""

from __future__ import annotations

import json
from functools import cached_property

from steinhaus import kernels
from steinhaus.gf2core import BinSeq, binom_mod2, reverse_bits


class Triangle:
    __slots__ = ("_first", "__dict__")

    def __init__(self, first_row: BinSeq):
        self._first = first_row

    @classmethod
    def from_str(cls, text: str) -> "Triangle":
        return cls(BinSeq.from_str(text))

    @classmethod
    def zero(cls, n: int) -> "Triangle":
        return cls(BinSeq.zeros(n))

    @property
    def size(self) -> int:
        return len(self._first)

    @property
    def first_row(self) -> BinSeq:
        return self._first

    @cached_property
    def _rows(self) -> tuple[int, ...]:
        return tuple(kernels.derive_rows(self._first.bits, self.size))

    def row(self, i: int) -> BinSeq:
        """Row ``i`` as a sequence indexed by ``j = i..n`` (shifted to 1..n-i+1)."""
        n = self.size
        if not 1 <= i <= n:
            raise IndexError(f"row {i} outside 1..{n}")
        return BinSeq(n - i + 1, self._rows[i - 1])

    def rows(self) -> list[BinSeq]:
        return [self.row(i) for i in range(1, self.size + 1)]

    def _check(self, i: int, j: int) -> None:
        if not 1 <= i <= j <= self.size:
            raise IndexError(f"({i}, {j}) outside the index set of size {self.size}")

    def entry(self, i: int, j: int) -> int:
        """Entry ``a[i][j]`` from the first row, via the binomial expansion."""
        self._check(i, j)
        bits = self._first.bits
        acc = 0
        # only k with C(i-1, j-k) odd contribute, k in j-i+1..j
        for k in range(max(1, j - i + 1), j + 1):
            if binom_mod2(i - 1, j - k) and (bits >> (k - 1)) & 1:
                acc ^= 1
        return acc

    def entry_materialized(self, i: int, j: int) -> int:
        self._check(i, j)
        return (self._rows[i - 1] >> (j - i)) & 1

    def right_side(self) -> BinSeq:
        """``(a[j][n])`` for ``j = 1..n``."""
        n = self.size
        bits = 0
        for j in range(1, n + 1):
            bits |= ((self._rows[j - 1] >> (n - j)) & 1) << (j - 1)
        return BinSeq(n, bits)

    def left_side(self) -> BinSeq:
        """``(a[j][j])`` for ``j = 1..n``."""
        bits = 0
        for j in range(1, self.size + 1):
            bits |= (self._rows[j - 1] & 1) << (j - 1)
        return BinSeq(self.size, bits)

    def count_ones(self) -> int:
        return sum(bin(r).count("1") for r in self._rows)

    def is_balanced(self) -> bool:
        n = self.size
        total = n * (n + 1) // 2
        return 2 * self.count_ones() == total

    def __add__(self, other: "Triangle") -> "Triangle":
        if not isinstance(other, Triangle):
            return NotImplemented
        if other.size != self.size:
            raise ValueError("cannot add triangles of different sizes")
        return Triangle(self._first + other._first)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Triangle):
            return NotImplemented
        return self._first == other._first

    def __hash__(self) -> int:
        return hash(self._first)

    def __repr__(self) -> str:
        return f"Triangle('{self._first}')"

    def render(self, indent: bool = True) -> str:
        """One line per row, bits space-separated; ``indent`` shifts row ``i``
        right by ``i - 1`` so the rows sit like the drawn triangle."""
        lines = []
        for i in range(1, self.size + 1):
            body = " ".join(str(b) for b in self.row(i))
            lines.append(" " * (i - 1) * indent + body)
        return "\n".join(lines)

    def to_dict(self, with_rows: bool = False) -> dict:
        d: dict = {"n": self.size, "first_row": str(self._first)}
        if with_rows:
            d["rows"] = [str(r) for r in self.rows()]
        return d

    def to_json(self, with_rows: bool = False) -> str:
        return json.dumps(self.to_dict(with_rows))

    @classmethod
    def from_dict(cls, d: dict) -> "Triangle":
        t = cls(BinSeq.from_str(d["first_row"]))
        if t.size != d["n"]:
            raise ValueError("size does not match first row")
        if "rows" in d and [str(r) for r in t.rows()] != list(d["rows"]):
            raise ValueError("rows inconsistent with first row")
        return t


def from_first_row(s: BinSeq) -> Triangle:
    return Triangle(s)


def entry(t: Triangle, i: int, j: int) -> int:
    return t.entry(i, j)


def entry_from_right_side(t: Triangle, i: int, j: int) -> int:
    t._check(i, j)
    n, side = t.size, t.right_side()
    acc = 0
    for k in range(i, n + 1):
        acc ^= binom_mod2(n - j, k - i) & side.bit(k)
    return acc


def entry_from_left_side(t: Triangle, i: int, j: int) -> int:
    t._check(i, j)
    side = t.left_side()
    acc = 0
    for k in range(i, j + 1):
        acc ^= binom_mod2(j - i, k - i) & side.bit(k)
    return acc


def rotate(t: Triangle) -> Triangle:
    """The 120-degree rotation; its first row is the right side of ``t``."""
    return Triangle(t.right_side())


def reflect(t: Triangle) -> Triangle:
    """Horizontal reflection: every row reversed."""
    return Triangle(t.first_row.reversed())


def add(t1: Triangle, t2: Triangle) -> Triangle:
    return t1 + t2


def rho(t: Triangle) -> Triangle:
    """``r^2 + r + id``; always lands in the rotationally symmetric subspace."""
    r1 = rotate(t)
    return t + r1 + rotate(r1)


def u_triangle(n: int) -> Triangle:
    return rho(Triangle(BinSeq.ones(n)))


def h_op(t: Triangle) -> Triangle:
    """Strip the first row and both slanted sides (size ``n - 3``)."""
    n = t.size
    if n < 3:
        raise ValueError("H needs a triangle of size at least 3")
    # first row of H(t) is a[2][3..n-1], i.e. row 2 minus its two ends
    r2 = t._rows[1]
    return Triangle(BinSeq(n - 3, (r2 >> 1) & ((1 << (n - 3)) - 1)))


def h_op_k(t: Triangle, k: int) -> Triangle:
    if k < 0 or 3 * k > t.size:
        raise ValueError(f"H^{k} undefined on a triangle of size {t.size}")
    for _ in range(k):
        t = h_op(t)
    return t


def count_ones(t: Triangle) -> int:
    return t.count_ones()


def is_balanced(t: Triangle) -> bool:
    return t.is_balanced()


def diagonals_symmetric(t: Triangle) -> bool:
    """True iff every diagonal ``(a[j][j+d])_j`` is a palindrome."""
    n = t.size
    rows = t._rows
    for d in range(n):
        length = n - d
        diag = 0
        for j in range(1, length + 1):
            diag |= ((rows[j - 1] >> d) & 1) << (j - 1)
        if diag != reverse_bits(diag, length):
            return False
    return True
