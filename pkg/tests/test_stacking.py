import pytest

from kfseq.golden import ALPHA, ONE, ZERO, alpha_pow
from kfseq.iet import orbit
from kfseq.partition import counts, kakutani_levels
from kfseq.stacking import (
    Column,
    ColumnPair,
    advance,
    certify_against_T,
    columns,
    initial_columns,
)

a = alpha_pow


def test_initial_columns():
    c = initial_columns()
    assert c.L.intervals == ((ZERO, ALPHA),)
    assert c.S.intervals == ((ALPHA, ONE),)
    assert c.L.width == a(1) and c.L.height == counts(1).long == 1


def test_columns_c2():
    c = advance(initial_columns())
    assert c.L.intervals == ((ZERO, a(2)), (ALPHA, ONE))
    assert c.S.intervals == ((a(2), ALPHA),)


def test_columns_c3():
    c = columns(3)
    assert c.L.intervals == ((ZERO, a(3)), (ALPHA, ALPHA + a(3)), (a(2), ALPHA))
    assert c.S.intervals == ((a(3), a(2)), (ALPHA + a(3), ONE))


def test_columns_c4():
    c = columns(4)
    assert c.L.bottom == (ZERO, a(4))
    assert c.L.top == (ALPHA + a(3), ONE)
    assert c.S.intervals == (
        (a(4), a(3)),
        (ALPHA + a(4), ALPHA + a(3)),
        (a(2) + a(4), ALPHA),
    )


def test_column_invariants_and_partition_agreement():
    c = initial_columns()
    for p in kakutani_levels(20):
        if p.level == 0:
            continue
        if p.level > 1:
            c = advance(c)
        c.check_invariants()
        assert sorted(c.intervals()) == p.intervals
        assert c.L.bottom == (ZERO, a(p.level))
        assert (c.L.height, c.S.height) == counts(p.level)[:2]


def test_bottom_of_s():
    # b(S_{n+1}) = [alpha^(n+1), alpha^n)
    for n in range(1, 15):
        assert columns(n + 1).S.bottom == (a(n + 1), a(n))


def test_certify_small_levels():
    rep = certify_against_T(columns(2))
    assert rep.ok and rep.checked == 2
    rep = certify_against_T(columns(3))
    assert rep.ok and rep.checked == 4


def test_certify_up_to_twenty():
    c = initial_columns()
    for n in range(1, 21):
        if n > 1:
            c = advance(c)
        assert certify_against_T(c).ok, n


def test_certify_reports_corruption():
    c = columns(3)
    swapped = ColumnPair(c.n, Column((c.L.intervals[1], c.L.intervals[0]) + c.L.intervals[2:]), c.S)
    rep = certify_against_T(swapped)
    assert not rep.ok
    assert (rep.column, rep.index) == ("L", 0)


def test_columns_read_as_orbit():
    for n in range(1, 16):
        c = columns(n + 1)
        lefts = c.L.lefts() + c.S.lefts()
        assert lefts == list(orbit(ZERO, counts(n + 1).total))


def test_columns_level_must_be_positive():
    with pytest.raises(ValueError):
        columns(0)
