from fractions import Fraction
from itertools import product

import brute
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orthorep.field import PrimeField, RationalField, make_field


def small_matrices(lo=-4, hi=4, max_side=4):
    return st.integers(1, max_side).flatmap(
        lambda r: st.integers(1, max_side).flatmap(
            lambda c: st.lists(st.lists(st.integers(lo, hi), min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


def span_size(rows, p):
    """Size of the row space over F_p by enumerating every combination."""
    rows = [np.array(r) % p for r in rows]
    seen = set()
    for coeffs in product(range(p), repeat=len(rows)):
        v = sum((c * r for c, r in zip(coeffs, rows)), np.zeros_like(rows[0])) % p
        seen.add(tuple(v))
    return len(seen)


@settings(max_examples=60, deadline=None)
@given(small_matrices(max_side=3))
def test_rank_over_f5_matches_enumerated_span(rows):
    f = PrimeField(5)
    size = span_size(rows, 5)
    assert 5 ** f.rank(f.array(rows)) == size


@settings(max_examples=60, deadline=None)
@given(small_matrices())
def test_rank_over_q_matches_sympy(rows):
    f = RationalField()
    assert f.rank(f.array(rows)) == brute.rank(rows, 0)


@settings(max_examples=60, deadline=None)
@given(small_matrices())
def test_nullspace_and_rref(rows):
    f = PrimeField(7)
    m = f.array(rows)
    basis, free = f.nullspace(m)
    assert basis.shape[1] == m.shape[1] - f.rank(m)
    assert f.is_zero(f.matmul(m, basis))
    if free:
        assert np.array_equal(basis[free], f.eye(len(free)))
    r, piv = f.rref(m)
    r2, piv2 = f.rref(r)
    assert piv == piv2 and np.array_equal(r, r2)


@settings(max_examples=40, deadline=None)
@given(small_matrices(), st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_solve_returns_a_solution_when_one_exists(rows, x):
    f = RationalField()
    m = f.array(rows)
    x = f.array(x[: m.shape[1]])
    b = f.matmul(m, x)
    sol = f.solve(m, b)
    assert sol is not None
    assert np.array_equal(f.matmul(m, sol), b)


def test_solve_detects_inconsistency():
    f = PrimeField(101)
    assert f.solve(f.array([[1, 1], [2, 2]]), f.array([1, 0])) is None


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(st.integers(-5, 5), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_charpoly_annihilates_matrix(rows):
    for f in (PrimeField(101), RationalField()):
        m = f.array(rows)
        coeffs = f.charpoly(m)
        n = m.shape[0]
        assert len(coeffs) == n + 1 and coeffs[0] == 1
        acc = f.zeros((n, n))
        for c in coeffs:
            acc = f.reduce(f.matmul(acc, m) + f.eye(n) * f.scalar(c))
        assert f.is_zero(acc)


def test_inverse_round_trip():
    f = PrimeField(13)
    m = f.array([[2, 1], [5, 3]])
    inv = f.inverse(m)
    assert np.array_equal(f.matmul(m, inv), f.eye(2))
    assert f.inverse(f.array([[1, 2], [2, 4]])) is None


def test_parse_and_format():
    f = PrimeField(101)
    assert f.parse("3/4") == 3 * pow(4, -1, 101) % 101
    assert f.format(f.scalar(-1)) == "100"
    q = RationalField()
    assert q.parse("3/4") == Fraction(3, 4)
    assert q.format(Fraction(-6, 8)) == "-3/4"


def test_make_field_descriptors():
    assert make_field(None).descriptor == "Fp:101"
    assert make_field("Fp:7").descriptor == "Fp:7"
    assert make_field(11).descriptor == "Fp:11"
    assert make_field("Q").descriptor == "Q"
    with pytest.raises(ValueError):
        make_field("Fp:12")
    with pytest.raises(ValueError):
        make_field("reals")
