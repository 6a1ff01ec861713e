import itertools

import pytest
from conftest import with_regular

from orthorep.decompose import AddSet, add_equal, is_isomorphic
from orthorep.errors import ApproximationDegenerate, PreconditionFailed
from orthorep.homological import ext_dim
from orthorep.module import (
    direct_sum_module,
    projective,
    regular_module,
    simple,
)
from orthorep.relative import Finite, is_add_split_sequence
from orthorep.tilting import (
    Fail,
    OneTiltingBimodule,
    Partial,
    PartialOneTilting,
    Tilting,
    complete_almost_tilting,
    exchange_sequence,
    is_partial_tilting,
    is_tilting,
    mutate_left,
    mutate_right,
    mutation_preserves_orthosymmetry,
    theorem_derived_check,
)


def test_progenerators_are_tilting(a37, a2):
    B, _ = a37
    assert is_tilting(regular_module(B.algebra)).verdict == Tilting(0)
    assert is_tilting(regular_module(a2)).verdict == Tilting(0)
    assert is_tilting(direct_sum_module([projective(a2, 0), projective(a2, 1), projective(a2, 1)])).verdict == Tilting(0)


def test_a2_tilting_examples(a2):
    P0, S0, P1 = projective(a2, 0), simple(a2, 0), projective(a2, 1)
    report = is_tilting(direct_sum_module([P0, S0]))
    assert report.verdict == Tilting(1)
    assert report.pd == Finite(1)
    assert len(report.coresolution) == 2
    bad = is_tilting(direct_sum_module([S0, P1]))
    assert isinstance(bad.verdict, Fail) and "Ext^1" in bad.verdict.reason
    assert is_partial_tilting(S0).verdict == Partial(1)
    assert isinstance(is_tilting(S0).verdict, Fail)


def test_a2_tilting_brute_force(a2):
    # Over a hereditary algebra with two simples a basic module is tilting
    # exactly when it has two summands and no self-extensions.
    indecs = [projective(a2, 1), projective(a2, 0), simple(a2, 0)]
    for r in (1, 2, 3):
        for mods in itertools.combinations(indecs, r):
            T = direct_sum_module(list(mods))
            brute = r == 2 and all(ext_dim(U, V, 1) == 0 for U in mods for V in mods)
            assert isinstance(is_tilting(T).verdict, Tilting) == brute


def test_selfinjective_nonprojective_is_not_tilting(a37):
    B, _ = a37
    report = is_tilting(B((0, 1)))
    assert isinstance(report.verdict, Fail)


def test_complete_almost_tilting(a2):
    P0, P1, S0 = projective(a2, 0), projective(a2, 1), simple(a2, 0)
    done = complete_almost_tilting(P1, P0, S0, 1)
    assert done.verdict == Tilting(1)
    assert len(done.terms) == 1 and is_isomorphic(done.terms[0], P0)
    assert done.maps[0].is_surjective()
    assert complete_almost_tilting(P1, P0, P1, 0).verdict == Tilting(0)
    with pytest.raises(PreconditionFailed):
        complete_almost_tilting(P1, P0, P0, 1)


def test_complete_almost_tilting_needs_rigidity(a37):
    B, _ = a37
    A = B.algebra
    P, Q = projective(A, 0), direct_sum_module([projective(A, 1), projective(A, 2)])
    assert isinstance(complete_almost_tilting(P, Q, B((0, 3)), 1).verdict, Fail)


def test_mutations_exchange_m1_and_m2(a37, m1, m2):
    B, _ = a37
    o01 = AddSet.of(B((0, 1)), B((2, 6)))
    o11 = AddSet.of(B((1, 1)), B((0, 6)))
    forward = mutate_right(m1, o01)
    assert forward.output == m2
    assert len(forward.output) == len(m1)
    assert all(is_add_split_sequence((s.f, s.g), m1.without(o01)) for s in forward.split_sequences)
    back = mutate_right(m2, o11)
    assert back.output == m1
    left = mutate_left(m2, o11)
    assert add_equal(left.output, m1)
    with pytest.raises(ApproximationDegenerate):
        mutate_right(m1, AddSet.of())
    with pytest.raises(PreconditionFailed):
        mutate_right(m1, AddSet.of(B((1, 1))))


def test_derived_check(a37, m1, m2):
    B, cat = a37
    assert isinstance(theorem_derived_check(m1, m1, 1, cat), OneTiltingBimodule)
    assert isinstance(theorem_derived_check(m1, m2, 1, cat, maximal="both"), OneTiltingBimodule)
    assert isinstance(theorem_derived_check(m1, m2, 1, cat), OneTiltingBimodule)
    smaller = with_regular(B, (0, 2), (0, 5))
    assert theorem_derived_check(m1, smaller, 1, cat) == PartialOneTilting()
    with pytest.raises(PreconditionFailed, match="maximal"):
        theorem_derived_check(smaller, m1, 1, cat)


def test_mutation_preserves_orthosymmetry(a37, m1):
    B, _ = a37
    o01 = AddSet.of(B((0, 1)), B((2, 6)))
    assert mutation_preserves_orthosymmetry(m1, o01, 1)
    with pytest.raises(PreconditionFailed):
        mutation_preserves_orthosymmetry(m1, AddSet.of(B((0, 1))), 1)
    assert mutation_preserves_orthosymmetry(with_regular(B, (0, 1)), AddSet.of(B((0, 1))), 4)


def test_exchange_sequence(a37, m1):
    B, cat = a37
    o01 = AddSet.of(B((0, 1)), B((2, 6)))
    seq = exchange_sequence(m1, o01, cat)
    assert all(seq.checks.values()), seq.checks
    N = m1.without(o01)
    for T in seq.terms[1:3]:
        assert all(N.contains(R) for R in AddSet.of(T))
    with pytest.raises(PreconditionFailed):
        exchange_sequence(m1, AddSet.of(projective(B.algebra, 0)), cat)
