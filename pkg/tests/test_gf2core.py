from math import comb

import pytest
from hypothesis import given, strategies as st

from steinhaus.gf2core import (
    BinSeq, MAX_LENGTH, antiderive, binom_mod2, bseq, concat, derive, derive_k, eseq,
    interlace_reverse, is_antisymmetric, is_symmetric, seq, sigma2,
)


def all_seqs(max_len):
    for n in range(max_len + 1):
        for b in range(1 << n):
            yield BinSeq(n, b)


seqs = st.integers(0, 40).flatmap(
    lambda n: st.integers(0, (1 << n) - 1).map(lambda b: BinSeq(n, b)))


class TestBinSeq:
    def test_roundtrip_text(self):
        assert str(seq("0010100")) == "0010100"
        assert seq("0010100").bit(3) == 1

    def test_empty(self):
        assert len(seq("")) == 0 and str(seq("")) == ""

    def test_add_is_xor(self):
        assert seq("1100") + seq("1010") == seq("0110")

    def test_add_length_mismatch(self):
        with pytest.raises(ValueError):
            seq("10") + seq("1")

    def test_rejects_bad_text(self):
        with pytest.raises(ValueError):
            seq("012")

    def test_bit_out_of_range(self):
        with pytest.raises(IndexError):
            seq("01").bit(3)

    def test_length_cap(self):
        BinSeq(MAX_LENGTH)
        with pytest.raises(ValueError):
            BinSeq(MAX_LENGTH + 1)

    def test_from_bits(self):
        assert BinSeq.from_bits([0, 1, 1]) == seq("011")


@pytest.mark.parametrize("s, expected", [("0100", "110"), ("0010100", "011110"), ("", "")])
def test_derive(s, expected):
    assert derive(seq(s)) == seq(expected)


def test_derive_k():
    assert derive_k(seq("1111"), 3) == seq("0")
    assert derive_k(seq("0010100"), 0) == seq("0010100")
    assert derive_k(bseq(10, 3, 0), 3) == BinSeq.ones(7)


@pytest.mark.parametrize("s, i, x, expected", [
    ("0100", 1, 0, "00111"),
    ("0100", 1, 1, "11000"),
    ("", 1, 1, "1"),
])
def test_antiderive(s, i, x, expected):
    assert antiderive(seq(s), i, x) == seq(expected)


def test_antiderive_index_range():
    with pytest.raises(IndexError):
        antiderive(seq("01"), 4, 0)


def test_sigma2():
    assert [sigma2(seq(s)) for s in ("0010100", "1", "")] == [0, 1, 0]


def test_symmetry_predicates():
    assert is_symmetric(seq("010010010"))
    assert not is_symmetric(seq("0100"))
    assert is_symmetric(seq(""))
    # the displayed condition, applied literally, accepts even lengths too
    assert is_antisymmetric(seq("10"))
    assert not is_antisymmetric(seq("101"))
    assert is_antisymmetric(seq("1100"))


def test_concat():
    assert concat(seq("0"), seq("11")) == seq("011")
    assert concat(seq(""), seq("1")) == seq("1")
    assert concat(seq("0"), antiderive(seq("0100"), 1, 0), seq("0")) == seq("0001110")


@pytest.mark.parametrize("s, expected", [("101000", "100010010001"), ("1", "11"), ("10", "1001")])
def test_interlace_reverse(s, expected):
    assert interlace_reverse(seq(s)) == seq(expected)


def test_binom_mod2_examples():
    assert all(binom_mod2(-1, k) == 1 for k in range(20))
    assert binom_mod2(5, 0) == 1
    assert binom_mod2(5, 2) == 0
    assert binom_mod2(3, -1) == 0


def test_binom_mod2_against_factorials():
    for a in range(31):
        for b in range(31):
            assert binom_mod2(a, b) == (comb(a, b) & 1 if b <= a else 0)


def test_binom_mod2_pascal_identity():
    for a in range(-64, 65):
        for b in range(-64, 65):
            assert binom_mod2(a, b) == binom_mod2(a - 1, b - 1) ^ binom_mod2(a - 1, b)


def test_bseq_and_eseq():
    assert bseq(5, 1, 0) == seq("01010")
    assert eseq(4, 2) == seq("0100")
    with pytest.raises(IndexError):
        eseq(4, 5)


def test_calculus_identities_exhaustive():
    for s in all_seqs(12):
        n = len(s)
        d = derive(s)
        for i in range(1, n + 2):
            a0, a1 = antiderive(s, i, 0), antiderive(s, i, 1)
            assert derive(a0) == s and derive(a1) == s
            assert a0 + a1 == BinSeq.ones(n + 1)
        for i in range(1, n + 1):
            for x in (0, 1):
                shift = BinSeq.ones(n) if s.bit(i) ^ x else BinSeq.zeros(n)
                assert antiderive(d, i, x) == s + shift
        sym_d = is_symmetric(d)
        assert is_symmetric(s) == (sym_d and sigma2(d) == 0)
        if n:
            assert is_antisymmetric(s) == (sym_d and sigma2(d) == 1)


def test_derive_linear():
    for n in range(11):
        for a in range(1 << n):
            for b in range(0, 1 << n, 7):
                s1, s2 = BinSeq(n, a), BinSeq(n, b)
                assert derive(s1 + s2) == derive(s1) + derive(s2)


def test_interlace_reverse_symmetric_even_weight():
    for s in all_seqs(12):
        r = interlace_reverse(s)
        assert is_symmetric(r) and sigma2(r) == 0


@given(seqs)
def test_reverse_involution(s):
    assert s.reversed().reversed() == s
    assert s.weight() == s.reversed().weight()
