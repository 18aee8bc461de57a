"""Root data for B(0,n): positive systems, rho, coroots, basis changes."""

import random

import pytest
from fractions import Fraction

from ospuir.root_system import (
    build_root_system,
    coroot,
    delta_to_simple,
    inner,
    is_positive,
    pairing,
    simple_to_delta,
)


def test_counts_n2():
    rs = build_root_system(2)
    assert len(rs.positive_even) == 4
    assert len(rs.positive_odd) == 2
    assert len(rs.restricted_positive) == 4


def test_counts_n3():
    rs = build_root_system(3)
    # delta_i +- delta_j (3 pairs each) plus 2*delta_i
    assert len(rs.positive_even) == 9
    assert len(rs.positive_odd) == 3
    # restricted system is the B_3 positive system
    assert len(rs.restricted_positive) == 9
    assert len(rs.simple) == 3


def test_root_coordinate_invariants():
    for n in (2, 3, 4):
        rs = build_root_system(n)
        seen = set()
        for root in rs.positive_even + rs.positive_odd:
            assert root.coords not in seen
            seen.add(root.coords)
            nonzero = [c for c in root.coords if c]
            assert all(c == int(c) and -2 <= c <= 2 for c in root.coords)
            assert 1 <= len(nonzero) <= 2
            neg = tuple(-c for c in root.coords)
            assert neg not in seen
        for root in rs.positive_odd:
            assert sorted(abs(c) for c in root.coords if c) == [1]
            assert root.parity == "odd"


def test_rho_n3():
    rs = build_root_system(3)
    assert rs.rho == (Fraction(5, 2), Fraction(3, 2), Fraction(1, 2))


def test_rho_on_simple_roots_is_one():
    for n in (2, 3, 4, 5):
        rs = build_root_system(n)
        for alpha in rs.simple:
            assert pairing(rs.rho, alpha.coords) == 1


def test_rho_is_half_sum_difference():
    # rho = (1/2) sum of even positives - (1/2) sum of odd positives
    for n in (2, 3, 4):
        rs = build_root_system(n)
        acc = [Fraction(0)] * n
        for root in rs.positive_even:
            acc = [x + Fraction(c, 2) for x, c in zip(acc, root.coords)]
        for root in rs.positive_odd:
            acc = [x - Fraction(c, 2) for x, c in zip(acc, root.coords)]
        assert tuple(acc) == rs.rho


def test_inner_is_dot_product():
    assert inner((1, 2), (3, 4)) == 11
    assert inner((Fraction(1, 2), 0, 1), (2, 5, 3)) == 4


def test_inner_rank_mismatch():
    with pytest.raises(ValueError):
        inner((1, 2), (1, 2, 3))


def test_coroot_long_and_odd():
    assert coroot((1, -1, 0)) == (1, -1, 0)
    assert coroot((0, 0, 1)) == (0, 0, 2)
    assert coroot((2, 0, 0)) == (1, 0, 0)


def test_coroot_zero_rejected():
    with pytest.raises(ValueError):
        coroot((0, 0, 0))


def test_delta_to_simple_examples():
    assert delta_to_simple((0, 0, 1)) == (0, 0, 1)
    assert delta_to_simple((1, 1, 0)) == (1, 2, 2)
    assert delta_to_simple((0, 0, 0)) == (0, 0, 0)


def test_basis_roundtrip():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.choice((2, 3, 4, 5))
        v = tuple(Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(n))
        assert simple_to_delta(delta_to_simple(v)) == v
        assert delta_to_simple(simple_to_delta(v)) == v


def test_is_positive_on_positive_lists():
    for n in (2, 3, 4):
        rs = build_root_system(n)
        for root in rs.positive_even + rs.positive_odd:
            assert is_positive(root.coords)
            assert not is_positive(tuple(-c for c in root.coords))


def test_pairing_linearity():
    rng = random.Random(11)
    beta = (1, 1, 0)
    for _ in range(20):
        u = tuple(Fraction(rng.randint(-5, 5)) for _ in range(3))
        v = tuple(Fraction(rng.randint(-5, 5)) for _ in range(3))
        s = tuple(x + y for x, y in zip(u, v))
        assert pairing(s, beta) == pairing(u, beta) + pairing(v, beta)
