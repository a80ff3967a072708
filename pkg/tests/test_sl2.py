import random

import pytest

from qtchar.algebra import Monomial
from qtchar.errors import NotDominant
from qtchar.sl2 import (
    Segment,
    classic_L,
    decompose_segments,
    et_sl2,
    ft_segment,
    ft_sl2,
    is_irregular,
    sl2_algebra,
)
from qtchar.tpoly import ONE, TPoly


def mono(*levels):
    d = {}
    for l in levels:
        d[(1, l)] = d.get((1, l), 0) + 1
    return Monomial(d)


def test_segment_shape():
    s = Segment(2, 3)
    assert s.top == 6
    assert list(s.levels()) == [2, 4, 6]
    assert s.monomial() == mono(2, 4, 6)
    with pytest.raises(ValueError):
        Segment(0, 0)


def test_decompose_simple():
    assert decompose_segments(mono(0, 2, 4)) == [Segment(0, 3)]
    assert decompose_segments(mono(0, 4)) == [Segment(0, 1), Segment(4, 1)]
    assert decompose_segments(mono(0, 0, 2)) == [Segment(0, 2), Segment(0, 1)]


def test_decompose_merges_special_position():
    # {0,2} and {2,4} sit in special position: union {0,2,4}, meet {2}
    assert decompose_segments(mono(0, 2, 2, 4)) == [Segment(0, 3), Segment(2, 1)]


def test_decompose_rejects_negative_exponent(sl2):
    with pytest.raises(NotDominant):
        decompose_segments(Monomial({(1, 0): -1}))
    with pytest.raises(ValueError):
        decompose_segments(Monomial({(2, 0): 1}))


def test_irregularity():
    assert not is_irregular(mono(0, 2))
    assert not is_irregular(mono(0, 4))
    # Segment {0} sits inside {0,2} both in place and shifted by 2
    assert is_irregular(mono(0, 0, 2))
    assert not is_irregular(mono(0, 0))


def test_classic_L_single_y():
    assert classic_L(mono(0)) == {
        mono(0): 1,
        Monomial({(1, 2): -1}): 1,
    }


def test_classic_L_segment_size():
    for k in range(4):
        L = classic_L(Segment(0, k + 1).monomial())
        assert sum(L.values()) == k + 2
        assert all(c == 1 for c in L.values())


def test_ft_segment_matches_classic_at_t1(sl2):
    for start, count in [(0, 1), (0, 2), (2, 3), (-4, 4)]:
        seg = Segment(start, count)
        f = ft_segment(sl2, seg)
        assert f.coeff(seg.monomial()) == ONE
        assert f.dominant_part() == {seg.monomial(): ONE}
        assert f.at_one() == classic_L(seg.monomial())


def test_et_leading_coefficient_is_one(sl2):
    for m in [mono(0, 2), mono(0, 0), mono(0, 4, 6)]:
        assert et_sl2(sl2, m).coeff(m) == ONE


def test_ft_sl2_unique_dominant_and_t1(sl2):
    rng = random.Random(8)
    done = 0
    while done < 12:
        m = mono(*(rng.choice(range(0, 12, 2)) for _ in range(rng.randrange(1, 4))))
        if is_irregular(m):
            continue
        done += 1
        f = ft_sl2(sl2, m)
        assert f.dominant_part() == {m: ONE}
        assert f.at_one() == classic_L(m)


def test_ft_sl2_irregular_t1_drops_a_summand(sl2):
    # Y0^2 Y2 is irregular; triangular subtraction overshoots at t = 1
    # by exactly the classical character of Y0
    m = mono(0, 0, 2)
    got = ft_sl2(sl2, m).at_one()
    want = classic_L(m)
    diff = {}
    for k in set(got) | set(want):
        c = got.get(k, 0) - want.get(k, 0)
        if c:
            diff[k] = c
    assert diff == {k: -v for k, v in classic_L(mono(0)).items()}


def test_ft_sl2_segment_example(sl2):
    # {0,2} is one segment, so its character has the classical 3 terms
    f = ft_sl2(sl2, mono(0, 2))
    assert len(f) == 3
    assert f.coeff(mono(0, 2)) == ONE


def test_sl2_algebra_is_shared():
    assert sl2_algebra() is sl2_algebra()
    assert sl2_algebra().cartan.n == 1
