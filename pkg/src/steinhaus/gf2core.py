"""Binary sequences over GF(2), derivation/antiderivation, binomials mod 2.

A :class:`BinSeq` stores its terms packed in a Python ``int``: term ``j``
(1-based, leftmost when printed) lives in bit ``j - 1``.  Derivation is then
a shift and an XOR.
"""

from __future__ import annotations

from typing import Iterable, Iterator

MAX_LENGTH = 1 << 16


class BinSeq:
    """Immutable finite 0/1 sequence, indexed 1..len in the public API."""

    __slots__ = ("_n", "_bits")

    def __init__(self, length: int, bits: int = 0):
        if length < 0:
            raise ValueError("length must be non-negative")
        if length > MAX_LENGTH:
            raise ValueError(f"sequence longer than {MAX_LENGTH} bits")
        if bits < 0 or bits >> length:
            raise ValueError("bits do not fit in the given length")
        self._n = length
        self._bits = bits

    @classmethod
    def from_str(cls, text: str) -> "BinSeq":
        text = text.strip()
        if any(c not in "01" for c in text):
            raise ValueError(f"not a bitstring: {text!r}")
        bits = 0
        for j, c in enumerate(text):
            if c == "1":
                bits |= 1 << j
        return cls(len(text), bits)

    @classmethod
    def from_bits(cls, values: Iterable[int]) -> "BinSeq":
        bits = 0
        n = 0
        for n, v in enumerate(values, start=1):
            if v not in (0, 1):
                raise ValueError(f"not a bit: {v!r}")
            bits |= v << (n - 1)
        return cls(n, bits)

    @classmethod
    def zeros(cls, n: int) -> "BinSeq":
        return cls(n, 0)

    @classmethod
    def ones(cls, n: int) -> "BinSeq":
        return cls(n, (1 << n) - 1)

    @property
    def bits(self) -> int:
        return self._bits

    def __len__(self) -> int:
        return self._n

    def bit(self, j: int) -> int:
        """Term ``j`` with 1-based indexing."""
        if not 1 <= j <= self._n:
            raise IndexError(f"index {j} outside 1..{self._n}")
        return (self._bits >> (j - 1)) & 1

    def __iter__(self) -> Iterator[int]:
        b = self._bits
        for _ in range(self._n):
            yield b & 1
            b >>= 1

    def to_list(self) -> list[int]:
        return list(self)

    def __add__(self, other: "BinSeq") -> "BinSeq":
        if not isinstance(other, BinSeq):
            return NotImplemented
        if other._n != self._n:
            raise ValueError("addition needs sequences of equal length")
        return BinSeq(self._n, self._bits ^ other._bits)

    def reversed(self) -> "BinSeq":
        return BinSeq(self._n, reverse_bits(self._bits, self._n))

    def weight(self) -> int:
        return bin(self._bits).count("1")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BinSeq):
            return NotImplemented
        return self._n == other._n and self._bits == other._bits

    def __hash__(self) -> int:
        return hash((self._n, self._bits))

    def __str__(self) -> str:
        return "".join("1" if b else "0" for b in self)

    def __repr__(self) -> str:
        return f"BinSeq('{self}')"


def reverse_bits(bits: int, n: int) -> int:
    if n == 0:
        return 0
    return int(format(bits, f"0{n}b")[::-1], 2)


def seq(text: str) -> BinSeq:
    """Shorthand for :meth:`BinSeq.from_str`."""
    return BinSeq.from_str(text)


def derive(s: BinSeq) -> BinSeq:
    n = len(s)
    if n <= 1:
        return BinSeq(0)
    return BinSeq(n - 1, (s.bits ^ (s.bits >> 1)) & ((1 << (n - 1)) - 1))


def derive_k(s: BinSeq, k: int) -> BinSeq:
    if k < 0:
        raise ValueError("k must be non-negative")
    n = len(s)
    if k >= n:
        return BinSeq(0)
    b = s.bits
    for _ in range(k):
        b ^= b >> 1
    m = n - k
    return BinSeq(m, b & ((1 << m) - 1))


def antiderive(s: BinSeq, i: int, x: int) -> BinSeq:
    """The length-(n+1) sequence whose ``i``-th term is ``x`` and whose
    derived sequence is ``s``."""
    n = len(s)
    if not 1 <= i <= n + 1:
        raise IndexError(f"antiderivation index {i} outside 1..{n + 1}")
    if x not in (0, 1):
        raise ValueError("x must be 0 or 1")
    # prefix parities: p_j = a_1 + ... + a_{j-1}
    b = s.bits
    prefix = 0
    acc = 0
    for j in range(1, n + 1):
        acc ^= (b >> (j - 1)) & 1
        prefix |= acc << j
    offset = x ^ ((prefix >> (i - 1)) & 1)
    if offset:
        prefix ^= (1 << (n + 1)) - 1
    return BinSeq(n + 1, prefix)


def sigma2(s: BinSeq) -> int:
    return s.weight() & 1


def is_symmetric(s: BinSeq) -> bool:
    return s.bits == reverse_bits(s.bits, len(s))


def is_antisymmetric(s: BinSeq) -> bool:
    n = len(s)
    return s.bits ^ reverse_bits(s.bits, n) == (1 << n) - 1


def concat(s1: BinSeq, *rest: BinSeq) -> BinSeq:
    n, bits = len(s1), s1.bits
    for s in rest:
        bits |= s.bits << n
        n += len(s)
    return BinSeq(n, bits)


def interlace_reverse(s: BinSeq) -> BinSeq:
    n = len(s)
    out = 0
    for j in range(1, n + 1):
        out |= s.bit(j) << (2 * j - 2)
        out |= s.bit(n - j + 1) << (2 * j - 1)
    return BinSeq(2 * n, out)


def binom_mod2(a: int, b: int) -> int:
    """Binomial coefficient mod 2 extended to all integers.

    Zero for ``b < 0``; for ``a < 0`` the reflection
    ``C(a, b) = (-1)^b C(b - a - 1, b)`` brings it back to ``a >= 0``,
    where Lucas' theorem reduces to a bitwise subset test.
    """
    if b < 0:
        return 0
    if a < 0:
        a = b - a - 1
    if b > a:
        return 0
    return 1 if (b & (a - b)) == 0 else 0


def bseq(n: int, k: int, l: int) -> BinSeq:
    """Length-``n`` window of column ``k`` of the mod-2 Pascal matrix, from row ``l``."""
    bits = 0
    for j in range(1, n + 1):
        bits |= binom_mod2(l + j - 1, k) << (j - 1)
    return BinSeq(n, bits)


def eseq(n: int, k: int) -> BinSeq:
    if not 1 <= k <= n:
        raise IndexError(f"unit position {k} outside 1..{n}")
    return BinSeq(n, 1 << (k - 1))


__all__ = [
    "BinSeq", "MAX_LENGTH", "seq", "reverse_bits", "derive", "derive_k",
    "antiderive", "sigma2", "is_symmetric", "is_antisymmetric", "concat",
    "interlace_reverse", "binom_mod2", "bseq", "eseq",
]
