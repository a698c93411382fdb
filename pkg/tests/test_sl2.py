import random

import pytest

from interpforge import sl2
from interpforge.sl2 import Mat2, IDENTITY, GEN0, GEN1


def all_strings(max_len, min_len=1):
    out = []
    for n in range(min_len, max_len + 1):
        for k in range(2 ** n):
            out.append(format(k, "0%db" % n))
    return out


def test_generators():
    assert sl2.encode("0") == Mat2(1, 0, 1, 1)
    assert sl2.encode("1") == Mat2(1, 1, 0, 1)
    assert sl2.encode("") == IDENTITY


def test_mat_mul_hand_checked():
    assert sl2.mat_mul(GEN0, GEN1) == Mat2(1, 1, 1, 2)
    assert sl2.mat_mul(GEN0, GEN0) == Mat2(1, 0, 2, 1)
    m = Mat2(3, 5, 4, 7)
    assert sl2.mat_mul(m, IDENTITY) == m
    assert sl2.mat_mul(IDENTITY, m) == m


def test_det():
    assert sl2.det(IDENTITY) == 1
    assert sl2.det(Mat2(1, 1, 1, 2)) == 1
    assert sl2.det(Mat2(1, 1, 1, 1)) == 0
    assert sl2.det(Mat2(0, 1, 1, 0)) == -1


def test_encode_01():
    assert sl2.encode("01") == Mat2(1, 1, 1, 2)


def test_strip_last():
    assert sl2.strip_last(Mat2(1, 1, 1, 2)) == (Mat2(1, 0, 1, 1), "1")
    assert sl2.strip_last(Mat2(2, 1, 1, 1)) == (Mat2(1, 1, 0, 1), "0")
    with pytest.raises(sl2.CodecError):
        sl2.strip_last(IDENTITY)
    with pytest.raises(sl2.CodecError):
        sl2.strip_last(Mat2(1, 1, 1, 1))


def test_strip_last_decreases_and_preserves_det():
    for m in sl2.enumerate_unimodular(50):
        if m == IDENTITY:
            continue
        rest, bit = sl2.strip_last(m)
        assert sl2.det(rest) == 1
        assert sum(rest.entries()) < sum(m.entries())
        assert sl2.mat_mul(rest, GEN0 if bit == "0" else GEN1) == m


def test_decode():
    assert sl2.decode(Mat2(1, 1, 1, 2)) == "01"
    assert sl2.decode(IDENTITY) == ""
    with pytest.raises(sl2.CodecError):
        sl2.decode(Mat2(1, 1, 1, 1))


def test_roundtrip_short():
    for alpha in all_strings(8, min_len=0):
        assert sl2.decode(sl2.encode(alpha)) == alpha


def test_homomorphism_short():
    for alpha in all_strings(4, min_len=0):
        for beta in all_strings(4, min_len=0):
            assert sl2.encode(alpha + beta) == sl2.mat_mul(sl2.encode(alpha),
                                                           sl2.encode(beta))


def test_det_multiplicative_random():
    rng = random.Random(5)
    for _ in range(500):
        x = Mat2(*(rng.randrange(1000) for _ in range(4)))
        y = Mat2(*(rng.randrange(1000) for _ in range(4)))
        assert sl2.det(sl2.mat_mul(x, y)) == sl2.det(x) * sl2.det(y)


def test_enumerate_unimodular_bound1():
    out = sl2.enumerate_unimodular(1)
    assert IDENTITY in out and GEN0 in out and GEN1 in out
    assert all(sl2.det(m) == 1 for m in out)
    assert all(max(m.entries()) <= 1 for m in out)
    # brute force over all 16 candidate 0/1 matrices
    brute = [Mat2(a, b, c, d)
             for a in (0, 1) for b in (0, 1) for c in (0, 1) for d in (0, 1)
             if a * d - b * c == 1]
    assert out == brute


def test_enumerate_unimodular_images_decode():
    for m in sl2.enumerate_unimodular(12):
        assert sl2.encode(sl2.decode(m)) == m


def test_is_atom():
    assert sl2.is_atom(GEN0, 5)
    assert sl2.is_atom(GEN1, 5)
    assert not sl2.is_atom(sl2.encode("01"), 3)
    assert sl2.is_atom(IDENTITY, 3)


def test_mat_prefix_examples():
    assert sl2.mat_prefix(sl2.encode("0"), sl2.encode("01"))
    assert not sl2.mat_prefix(sl2.encode("1"), sl2.encode("01"))
    assert sl2.mat_prefix(sl2.encode("01"), sl2.encode("01"))
    with pytest.raises(sl2.CodecError):
        sl2.mat_prefix(IDENTITY, GEN0)


def _mat_prefix_box_search(x, y):
    if x == y:
        return True
    bound = sl2.max_entry(y)
    if sl2.max_entry(x) > bound:
        return False
    for c in sl2.enumerate_unimodular(bound):
        if c != IDENTITY and sl2.mat_mul(x, c) == y:
            return True
    return False


def test_mat_prefix_matches_box_search():
    mats = [sl2.encode(a) for a in all_strings(4)]
    for x in mats:
        for y in mats:
            assert sl2.mat_prefix(x, y) == _mat_prefix_box_search(x, y)


def test_mat_prefix_matches_string_prefix():
    for beta in all_strings(5):
        prefs = {beta[:k] for k in range(1, len(beta) + 1)}
        for alpha in all_strings(5):
            assert sl2.mat_prefix(sl2.encode(alpha), sl2.encode(beta)) == \
                (alpha in prefs)


def test_parse_matrix():
    assert sl2.parse_matrix("1,0;1,1") == GEN0
    assert sl2.parse_matrix(" 2,1 ; 1,1 ") == Mat2(2, 1, 1, 1)
    with pytest.raises(sl2.CodecError):
        sl2.parse_matrix("1,0,1;1")
    with pytest.raises(sl2.CodecError):
        sl2.parse_matrix("1,-2;0,1")


def test_branch_analysis_exhaustive():
    # every non-identity det-1 matrix falls into exactly one strip branch
    for m in sl2.enumerate_unimodular(40):
        if m == IDENTITY:
            continue
        a, b, c, d = m.entries()
        ge = a >= b and c >= d
        le = a <= b and c <= d
        assert ge != le
