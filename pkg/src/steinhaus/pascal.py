"""Generalized Pascal triangles and their correspondence with odd-size
Steinhaus triangles."""

from __future__ import annotations

import json
from functools import cached_property
from typing import Sequence

from steinhaus import kernels
from steinhaus.gf2core import BinSeq, binom_mod2
from steinhaus.subspace import SymClass, basis
from steinhaus.triangle import Triangle


class PascalTriangle:
    """``Δ(L, R)``: row ``i`` has ``i`` entries, ``a[i][1] = L[i]``, ``a[i][i] = R[i]``
    and every interior entry is the sum of the two above it."""

    __slots__ = ("_left", "_right", "__dict__")

    def __init__(self, left: BinSeq, right: BinSeq):
        if len(left) != len(right):
            raise ValueError("sides must have the same length")
        if len(left) < 1:
            raise ValueError("a Pascal triangle has size at least 1")
        if left.bit(1) != right.bit(1):
            raise ValueError("sides disagree on the apex")
        self._left = left
        self._right = right

    @classmethod
    def from_str(cls, left: str, right: str) -> "PascalTriangle":
        return cls(BinSeq.from_str(left), BinSeq.from_str(right))

    @property
    def size(self) -> int:
        return len(self._left)

    @property
    def left(self) -> BinSeq:
        return self._left

    @property
    def right(self) -> BinSeq:
        return self._right

    @cached_property
    def _rows(self) -> tuple[int, ...]:
        # row i packs a[i][j] at bit j-1
        rows = [self._left.bit(1)]
        for i in range(2, self.size + 1):
            r = rows[-1]
            r = (r ^ (r << 1)) & ((1 << (i - 1)) - 1) & ~1
            r |= self._left.bit(i) | (self._right.bit(i) << (i - 1))
            rows.append(r)
        return tuple(rows)

    def entry(self, i: int, j: int) -> int:
        if not 1 <= j <= i <= self.size:
            raise IndexError(f"({i}, {j}) outside the Pascal triangle of size {self.size}")
        return (self._rows[i - 1] >> (j - 1)) & 1

    def row(self, i: int) -> BinSeq:
        if not 1 <= i <= self.size:
            raise IndexError(f"row {i} outside 1..{self.size}")
        return BinSeq(i, self._rows[i - 1])

    def last_row(self) -> BinSeq:
        return self.row(self.size)

    def __add__(self, other: "PascalTriangle") -> "PascalTriangle":
        if not isinstance(other, PascalTriangle):
            return NotImplemented
        return PascalTriangle(self._left + other._left, self._right + other._right)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PascalTriangle):
            return NotImplemented
        return self._left == other._left and self._right == other._right

    def __hash__(self) -> int:
        return hash((self._left, self._right))

    def __repr__(self) -> str:
        return f"PascalTriangle('{self._left}', '{self._right}')"

    def render(self, indent: bool = True) -> str:
        n = self.size
        lines = []
        for i in range(1, n + 1):
            body = " ".join(str(b) for b in self.row(i))
            lines.append(" " * (n - i) * indent + body)
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {"n": self.size, "left": str(self._left), "right": str(self._right)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "PascalTriangle":
        p = cls.from_str(d["left"], d["right"])
        if p.size != d["n"]:
            raise ValueError("size does not match sides")
        return p


def from_sides(left: BinSeq, right: BinSeq) -> PascalTriangle:
    return PascalTriangle(left, right)


def gamma(t: Triangle) -> PascalTriangle:
    """Cut the Pascal triangle ``(a[i][n-1+j])`` out of a size ``2n - 1`` triangle."""
    size = t.size
    if size % 2 == 0:
        raise ValueError("gamma needs a triangle of odd size")
    n = (size + 1) // 2
    left = BinSeq.from_bits(t.entry_materialized(i, n) for i in range(1, n + 1))
    right = BinSeq.from_bits(t.entry_materialized(i, n - 1 + i) for i in range(1, n + 1))
    return PascalTriangle(left, right)


def gamma_inv(p: PascalTriangle) -> Triangle:
    n = p.size
    first = [0] * (2 * n - 1)
    for j in range(1, n + 1):
        acc_l = acc_r = 0
        for k in range(n - j + 1):
            if binom_mod2(n - j, k):
                acc_l ^= p.left.bit(k + 1)
                acc_r ^= p.right.bit(k + 1)
        first[j - 1] = acc_l
        first[2 * n - j - 1] = acc_r
    return Triangle(BinSeq.from_bits(first))


def rotate_p(p: PascalTriangle) -> PascalTriangle:
    """Entry ``(i, j)`` of the image is ``a[n+j-i][n+1-i]``."""
    return PascalTriangle(p.right.reversed(), p.last_row().reversed())


def reflect_p(p: PascalTriangle) -> PascalTriangle:
    return PascalTriangle(p.right, p.left)


def is_member_pt(cls: SymClass, p: PascalTriangle) -> bool:
    if cls is SymClass.H:
        return reflect_p(p) == p
    if cls is SymClass.R:
        return rotate_p(p) == p
    if cls is SymClass.D:
        return reflect_p(p) == p and rotate_p(p) == p
    raise ValueError(f"no Pascal-triangle class {cls.value}")


def dim_pt(cls: SymClass, n: int) -> int:
    if n < 1:
        raise ValueError("size must be positive")
    if cls is SymClass.H:
        return n
    if cls is SymClass.R:
        return 2 * ((n - 1) // 3) + 1
    if cls is SymClass.D:
        return -(-n // 3)
    raise ValueError(f"no Pascal-triangle class {cls.value}")


def basis_pt(cls: SymClass, n: int, l: Sequence[int] | None = None) -> list[PascalTriangle]:
    """Images under ``gamma`` of the Steinhaus bases of size ``2n - 1``."""
    if cls not in (SymClass.H, SymClass.R, SymClass.D):
        raise ValueError(f"no Pascal-triangle class {cls.value}")
    if n < 1:
        raise ValueError("size must be positive")
    return [gamma(t) for t in basis(cls, 2 * n - 1, l).elements]


def side_vector(p: PascalTriangle) -> int:
    """``L`` followed by ``R[2..n]``, packed; the apex is counted once."""
    n = p.size
    return p.left.bits | ((p.right.bits >> 1) << n)


def independent(ps: Sequence[PascalTriangle]) -> bool:
    return kernels.gf2_rank([side_vector(p) for p in ps]) == len(ps)


__all__ = [
    "PascalTriangle", "from_sides", "gamma", "gamma_inv", "rotate_p", "reflect_p",
    "is_member_pt", "dim_pt", "basis_pt", "side_vector", "independent",
]
