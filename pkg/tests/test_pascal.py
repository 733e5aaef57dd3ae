import json
import random

import pytest

from steinhaus.gf2core import BinSeq, seq
from steinhaus.pascal import (
    PascalTriangle, basis_pt, dim_pt, from_sides, gamma, gamma_inv, independent,
    is_member_pt, reflect_p, rotate_p,
)
from steinhaus.subspace import SymClass, is_member
from steinhaus.triangle import Triangle, reflect, rotate, u_triangle

H, R, D = SymClass.H, SymClass.R, SymClass.D

PASCAL_11100_11001 = """\
    1
   1 1
  1 0 0
 0 1 0 0
0 1 1 0 1"""


def p(left, right):
    return PascalTriangle.from_str(left, right)


def all_pascal(n):
    for l in range(1 << n):
        for r in range(1 << (n - 1)):
            left = BinSeq(n, l)
            yield PascalTriangle(left, BinSeq(n, (r << 1) | (l & 1)))


def sides(ps):
    return [(str(q.left), str(q.right)) for q in ps]


def test_from_sides():
    assert p("11100", "11001").render() == PASCAL_11100_11001
    assert p("0", "0").render() == "0"
    assert from_sides(seq("10000"), seq("10000")) == gamma(Triangle(BinSeq.ones(9)))


def test_from_sides_validation():
    with pytest.raises(ValueError):
        p("10", "1")
    with pytest.raises(ValueError):
        p("10", "01")
    with pytest.raises(ValueError):
        p("", "")


def test_local_rule():
    for q in all_pascal(6):
        for i in range(2, 7):
            assert q.entry(i, 1) == q.left.bit(i) and q.entry(i, i) == q.right.bit(i)
            for j in range(2, i):
                assert q.entry(i, j) == q.entry(i - 1, j - 1) ^ q.entry(i - 1, j)


def test_gamma_examples():
    assert gamma(Triangle.from_str("110010100")) == p("11100", "11001")
    assert gamma(Triangle.zero(9)) == p("00000", "00000")
    assert gamma(u_triangle(21)) == p("10000000001", "10000000001")
    with pytest.raises(ValueError):
        gamma(Triangle.zero(4))


def test_gamma_is_a_cut():
    t = Triangle.from_str("0110100111010")
    q = gamma(t)
    n = q.size
    for i in range(1, n + 1):
        for j in range(1, i + 1):
            assert q.entry(i, j) == t.entry_materialized(i, n - 1 + j)


def test_gamma_roundtrip_exhaustive():
    for n in range(1, 6):
        for b in range(1 << (2 * n - 1)):
            t = Triangle(BinSeq(2 * n - 1, b))
            assert gamma_inv(gamma(t)) == t
        for q in all_pascal(n):
            assert gamma(gamma_inv(q)) == q


def test_intertwining_exhaustive():
    for n in range(1, 6):
        for b in range(1 << (2 * n - 1)):
            t = Triangle(BinSeq(2 * n - 1, b))
            assert gamma(rotate(t)) == rotate_p(gamma(t))
            assert gamma(reflect(t)) == reflect_p(gamma(t))


def test_intertwining_random():
    rng = random.Random(7)
    for _ in range(200):
        size = 2 * rng.randint(1, 64) - 1
        t = Triangle(BinSeq(size, rng.getrandbits(size)))
        assert gamma(rotate(t)) == rotate_p(gamma(t))
        assert gamma(reflect(t)) == reflect_p(gamma(t))


def test_rotate_p_matches_entry_formula():
    for q in all_pascal(5):
        n = q.size
        r = rotate_p(q)
        for i in range(1, n + 1):
            for j in range(1, i + 1):
                assert r.entry(i, j) == q.entry(n + j - i, n + 1 - i)


def test_dihedral_relations():
    for n in range(1, 6):
        for q in all_pascal(n):
            assert rotate_p(rotate_p(rotate_p(q))) == q
            assert reflect_p(reflect_p(q)) == q
            assert reflect_p(rotate_p(reflect_p(rotate_p(q)))) == q


def test_fixed_points_size5():
    assert is_member_pt(H, gamma(Triangle.from_str("110111011")))
    assert is_member_pt(R, gamma(Triangle.from_str("001110100")))
    assert is_member_pt(D, gamma(Triangle.from_str("011010110")))


def test_gamma_preserves_classes():
    for n in range(1, 8):
        size = 2 * n - 1
        for b in range(1 << size):
            t = Triangle(BinSeq(size, b))
            q = gamma(t)
            for cls in (H, R, D):
                assert is_member(cls, t) == is_member_pt(cls, q)


def test_dims():
    assert dim_pt(R, 7) == 5 and dim_pt(H, 4) == 4 and dim_pt(D, 11) == 4
    for cls in (SymClass.FULL, SymClass.D0):
        with pytest.raises(ValueError):
            dim_pt(cls, 4)


def test_golden_bases():
    assert sides(basis_pt(R, 7)) == [
        ("1000001", "1000001"), ("0100010", "0100010"), ("1110101", "1010111"),
        ("0000010", "0100000"), ("1011001", "1001101")]
    assert sides(basis_pt(H, 4)) == [
        ("0001", "0001"), ("0011", "0011"), ("0100", "0100"), ("1000", "1000")]
    assert sides(basis_pt(D, 11)) == [
        ("10000000001", "10000000001"), ("01000000010", "01000000010"),
        ("00110001100", "00110001100"), ("00010001000", "00010001000")]


def test_bases_structural():
    for cls in (H, R, D):
        for n in range(1, 65):
            b = basis_pt(cls, n)
            assert len(b) == dim_pt(cls, n) and independent(b)
            assert all(is_member_pt(cls, q) for q in b)


def test_bases_span_members():
    for cls in (H, R, D):
        for n in range(1, 7):
            span = {p("0" * n, "0" * n)}
            for q in basis_pt(cls, n):
                span |= {x + q for x in span}
            assert span == {q for q in all_pascal(n) if is_member_pt(cls, q)}


def test_json():
    q = p("11100", "11001")
    assert json.loads(q.to_json()) == {"n": 5, "left": "11100", "right": "11001"}
    assert PascalTriangle.from_dict(q.to_dict()) == q
