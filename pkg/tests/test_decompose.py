import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orthorep.decompose import (
    AddSet,
    add_equal,
    canonical,
    decompose,
    end_algebra,
    is_indecomposable,
    is_isomorphic,
    radical_of_end,
    summand_count,
)
from orthorep.errors import InvalidModule
from orthorep.module import (
    Module,
    direct_sum_module,
    projective,
    regular_module,
    simple,
    zero_module,
)
from orthorep.nakayama import all_indecomposables, bridge
from orthorep.relative import in_add, in_add_by_decomposition


def scramble(X: Module, seed: int) -> Module:
    """The same module in a random basis, so no construction history survives."""
    f = X.field
    rng = np.random.default_rng(seed)
    gs = []
    for d in X.dims:
        while True:
            g = f.random_matrix(rng, (d, d))
            if f.is_invertible(g):
                break
        gs.append(g)
    maps = []
    for a, (s, t) in enumerate(X.algebra.quiver.arrows):
        maps.append(f.matmul(f.matmul(gs[t], X.maps[a]), f.inverse(gs[s])))
    return Module(X.algebra, X.dims, maps)


def test_decompose_examples(a37):
    B, _ = a37
    A = B.algebra
    P0 = projective(A, 0)
    parts = decompose(scramble(direct_sum_module([P0, P0]), 1))
    assert len(parts) == 1 and parts[0][1] == 2 and is_isomorphic(parts[0][0], P0)
    assert summand_count(regular_module(A)) == 3
    pair = decompose(scramble(direct_sum_module([B((0, 1)), B((2, 6))]), 2))
    assert sorted(m for _, m in pair) == [1, 1]
    assert {id(R) for R, _ in pair} == {id(canonical(B((0, 1)))), id(canonical(B((2, 6))))}


def test_summand_count_of_zero_is_an_error(a37):
    B, _ = a37
    with pytest.raises(InvalidModule):
        summand_count(zero_module(B.algebra))


labels37 = st.sampled_from(all_indecomposables((3, 2)))


@settings(max_examples=25, deadline=None)
@given(st.lists(labels37, min_size=1, max_size=4), st.integers(0, 1000))
def test_decomposition_recovers_summands(xs, seed):
    B = bridge((3, 2))
    mods = [B(x) for x in xs]
    X = scramble(direct_sum_module(mods), seed)
    parts = decompose(X)
    assert tuple(sum(m * R.dims[v] for R, m in parts) for v in range(3)) == X.dims
    want = {}
    for x in xs:
        want[id(canonical(B(x)))] = want.get(id(canonical(B(x))), 0) + 1
    assert {id(R): m for R, m in parts} == want
    assert is_isomorphic(direct_sum_module([R for R, m in parts for _ in range(m)]), X)


@settings(max_examples=20, deadline=None)
@given(st.lists(st.sampled_from(all_indecomposables((2, 2))), min_size=1, max_size=3), st.sampled_from(all_indecomposables((2, 2))))
def test_in_add_agrees_with_decomposition(xs, y):
    B = bridge((2, 2))
    M = AddSet.of(*[B(x) for x in xs])
    Y = B(y)
    assert in_add(Y, M) == in_add_by_decomposition(Y, M) == (y in xs)


def test_rational_field_decomposition():
    B = bridge((2, 2), "Q")
    X = scramble(direct_sum_module([B((0, 1)), B((1, 3)), B((1, 3))]), 5)
    parts = decompose(X)
    assert sorted(m for _, m in parts) == [1, 2]


def test_end_algebra_and_radical(a37):
    B, _ = a37
    X = B((0, 4))
    table = end_algebra(X)
    d = table.shape[0]
    assert d == 2  # L(0,4) has endomorphisms 1 and the map with image L(0,1)
    rows, _ = radical_of_end(X)
    assert rows.shape[0] == 1
    assert is_indecomposable(X)
    assert not is_indecomposable(direct_sum_module([X, X]))


def test_is_isomorphic_examples(a37):
    B, _ = a37
    A = B.algebra
    X = B((0, 3))
    assert is_isomorphic(X, scramble(X, 3))
    assert not is_isomorphic(simple(A, 0), simple(A, 1))
    assert not is_isomorphic(B((0, 3)), B((1, 3)))


def test_add_sets(a37):
    B, _ = a37
    A = B.algebra
    M = AddSet.of(regular_module(A), B((0, 1)))
    doubled = AddSet.of(direct_sum_module([M.module(), M.module()]))
    assert add_equal(M, doubled)
    assert len(M) == 4
    assert M.contains(scramble(B((0, 1)), 9))
    assert not M.contains(B((0, 2)))
    assert in_add(projective(A, 0), AddSet.of(regular_module(A)))
    assert not in_add(simple(A, 0), AddSet.of(regular_module(A)))
