import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from kfseq.config import DomainError
from kfseq.golden import ALPHA, ONE, ZERO, GoldenNumber, GoldenRational, alpha_pow
from kfseq.iet import (
    alpha_exponent,
    apply_T,
    apply_T_inverse,
    branch_params,
    branch_table,
    image_measure,
    literal_endpoints,
    locate_branch,
    orbit,
    split_by_branch,
)
from kfseq.partition import kakutani_levels

a = alpha_pow


def random_unit_point(rng: random.Random, size: int = 10**9) -> GoldenNumber:
    x = GoldenNumber(rng.randint(-size, size), rng.randint(-size, size))
    return x - math.floor(x)


def test_branch_examples():
    b1, b2, b3 = branch_params(1), branch_params(2), branch_params(3)
    assert (b1.left, b1.right, b1.c) == (ZERO, a(2), ALPHA)
    assert (b2.left, b2.right, b2.c) == (ALPHA, ALPHA + a(3), a(2) - ALPHA)
    assert (b3.left, b3.right, b3.c) == (a(2), a(2) + a(4), a(3) - a(2))


def test_closed_forms_match_partial_sums():
    for k in range(1, 81):
        b = branch_params(k)
        assert (b.left, b.right) == literal_endpoints(k)


def test_branch_lengths_and_images():
    for b in branch_table(60):
        assert b.length == a(b.k + 1)
        assert b.image == (a(b.k), a(b.k) + a(b.k + 1))


def test_branch_domains_and_images_disjoint():
    table = branch_table(40)
    for i, p in enumerate(table):
        for q in table[i + 1 :]:
            assert p.right <= q.left or q.right <= p.left
            (pa, pb), (qa, qb) = p.image, q.image
            assert pb <= qa or qb <= pa


def test_finite_union_length():
    for K in (1, 2, 7, 40):
        assert sum((b.length for b in branch_table(K)), ZERO) == ONE - a(K)


@pytest.mark.parametrize("x, k", [(ZERO, 1), (ALPHA, 2), (a(2), 3)])
def test_locate_examples(x, k):
    assert locate_branch(x) == k


def test_locate_brute_force():
    rng = random.Random(7)
    table = branch_table(70)
    for _ in range(2000):
        x = random_unit_point(rng)
        hits = [b.k for b in table if b.left <= x < b.right]
        if hits:
            assert locate_branch(x) == hits[0]


def test_locate_near_accumulation_points():
    for k in range(1, 200):
        b = branch_params(k)
        assert locate_branch(b.left) == k
        assert locate_branch(b.right - a(k + 60)) == k


@pytest.mark.parametrize("x", [-ALPHA, ONE, GoldenNumber(2, 0), GoldenRational(-1, 0, 2)])
def test_domain_errors(x):
    with pytest.raises(DomainError):
        locate_branch(x)
    with pytest.raises(DomainError):
        apply_T(x)


@pytest.mark.parametrize("x, y", [(ZERO, ALPHA), (ALPHA, a(2)), (a(2), a(3))])
def test_apply_T_examples(x, y):
    assert apply_T(x) == y
    assert apply_T_inverse(y) == x


def test_inverse_of_zero_undefined():
    with pytest.raises(DomainError):
        apply_T_inverse(ZERO)


def test_orbit_of_zero_first_eight():
    expected = [ZERO, ALPHA, a(2), a(3), ALPHA + a(3), a(4), ALPHA + a(4), a(2) + a(4)]
    assert list(orbit(ZERO, 8)) == expected


def test_orbit_edge_cases():
    assert list(orbit(ZERO, 0)) == []
    assert [x.coefficients for x in orbit(ZERO, 2)] == [(0, 0), (0, 1)]
    with pytest.raises(DomainError):
        list(orbit(ONE, 3))


def test_round_trip_random():
    rng = random.Random(2024)
    for _ in range(2000):
        x = random_unit_point(rng)
        y = apply_T(x)
        assert 0 <= y < 1
        assert apply_T_inverse(y) == x
        assert apply_T(apply_T_inverse(x)) == x if x != 0 else True


@given(st.fractions(min_value=0, max_value=1).filter(lambda q: q < 1))
def test_rational_points_round_trip(q):
    x = GoldenRational(q.numerator, 0, q.denominator)
    assert apply_T_inverse(apply_T(x)) == x


def test_alpha_exponent_brute_force():
    rng = random.Random(3)
    for _ in range(500):
        y = random_unit_point(rng)
        if y == 0:
            continue
        j = alpha_exponent(y)
        assert y <= a(j) and y > a(j + 1)


def test_measure_preservation_by_branch_decomposition():
    for p in kakutani_levels(15):
        for u, v in p.intervals:
            pieces, tails = split_by_branch(u, v)
            covered = sum((hi - lo for _, lo, hi in pieces), ZERO) + sum((a(k) for k in tails), ZERO)
            assert covered == v - u
            ks = [k for k, _, _ in pieces]
            assert len(set(ks)) == len(ks) and not set(ks) & set(tails)
            assert image_measure(u, v) == v - u


def test_split_whole_interval():
    pieces, tails = split_by_branch(ZERO, ONE)
    assert [k for k, _, _ in pieces] == [1, 2]
    assert tails == [3, 4]
