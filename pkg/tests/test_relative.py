import pytest
from conftest import with_regular
from hypothesis import given, settings
from hypothesis import strategies as st

from orthorep.ar import m_minus
from orthorep.decompose import AddSet, is_isomorphic
from orthorep.errors import NotExact, NotGenerator, PreconditionFailed
from orthorep.homological import ext_dim, projective_dimension, syzygy
from orthorep.module import (
    direct_sum,
    identity,
    kernel,
    projective,
    projective_cover,
    regular_module,
    row_map,
    simple,
    zero_module,
)
from orthorep.nakayama import all_indecomposables, bridge
from orthorep.relative import (
    Finite,
    InfiniteCertified,
    UnknownAtCutoff,
    cotorsion_witness,
    in_add,
    is_add_split_sequence,
    is_left_approximation,
    is_right_approximation,
    left_approx,
    m_coresdim,
    m_resdim,
    rel_syzygy,
    right_approx,
    stable_hom_dim,
    stable_hom_dim_via_compositions,
    unit_counit_sequences,
    verdict_json,
)


def _drop_one_component(approx):
    """Every map obtained by dropping one component of a right approximation."""
    comps = approx.components
    for k in range(len(comps)):
        trial = comps[:k] + comps[k + 1 :]
        if not trial:
            yield None
            continue
        obj, _, _ = direct_sum([S for S, _ in trial])
        yield row_map([h for _, h in trial], obj, approx.map.target)


def test_right_approx_of_simple_is_projective_cover(a37):
    B, _ = a37
    A = B.algebra
    ap = right_approx(AddSet.of(regular_module(A)), simple(A, 0))
    assert is_isomorphic(ap.object, projective(A, 0))
    assert is_isomorphic(ap.complement, B((1, 6)))
    assert ap.map.is_surjective()


def test_right_approx_of_member_splits(a37, m1):
    B, _ = a37
    X = B((0, 5))
    ap = right_approx(m1, X)
    assert in_add(ap.object, m1)
    assert is_isomorphic(ap.object, X)
    assert ap.complement.dim == 0
    assert is_right_approximation(ap.map, m1)


def test_zero_approximation(a37, m1):
    B, _ = a37
    Z = zero_module(B.algebra)
    assert right_approx(m1, Z).object.dim == 0
    assert left_approx(m1, Z).object.dim == 0


def test_left_approx_of_simple_is_injective_envelope(a37):
    B, _ = a37
    A = B.algebra
    ap = left_approx(AddSet.of(regular_module(A)), simple(A, 2))
    assert is_isomorphic(ap.object, projective(A, 2))  # I_2 = P_2 on a symmetric algebra
    assert ap.map.is_injective()
    assert is_left_approximation(ap.map, AddSet.of(regular_module(A)))


labels37 = st.sampled_from(all_indecomposables((3, 2)))


@settings(max_examples=25, deadline=None)
@given(labels37)
def test_approximations_are_minimal(x):
    B = bridge((3, 2))
    M = with_regular(B, (0, 1), (2, 6), (0, 2), (0, 5))
    X = B(x)
    ap = right_approx(M, X)
    assert is_right_approximation(ap.map, M)
    for g in _drop_one_component(ap):
        assert g is None or not is_right_approximation(g, M)
    lp = left_approx(M, X)
    assert is_left_approximation(lp.map, M)


def test_rel_syzygy(a37, m1):
    B, _ = a37
    A = B.algebra
    projs = AddSet.of(regular_module(A))
    for x in [(0, 1), (1, 3), (2, 5)]:
        assert is_isomorphic(rel_syzygy(projs, B(x), 1), syzygy(B(x)))
    assert rel_syzygy(m1, B((0, 5)), 2).dim == 0
    assert rel_syzygy(m1, B((0, 3)), 0).dim == B((0, 3)).dim
    with pytest.raises(NotGenerator):
        rel_syzygy(AddSet.of(B((0, 1))), B((0, 3)), 1)


def test_resolution_dimensions(a37, a2, m1):
    B, _ = a37
    A = B.algebra
    projs = AddSet.of(regular_module(A))
    assert m_resdim(projs, projective(A, 0)) == Finite(0)
    assert isinstance(m_resdim(projs, B((0, 2))), InfiniteCertified)
    assert m_coresdim(m1, B((2, 6))) == Finite(0)
    minus = m_minus(m1, 1).module()
    assert m_coresdim(m1, minus) == Finite(0)
    # The Ω-orbit of L(0,1) has period 6 in iso-classes, so cutoff 3 cannot decide.
    assert m_resdim(projs, B((0, 1)), cutoff=3) == UnknownAtCutoff(3)
    assert verdict_json(UnknownAtCutoff(3)) == {"tag": "UnknownAtCutoff", "cutoff": 3}
    a2_projs = AddSet.of(regular_module(a2))
    assert m_resdim(a2_projs, simple(a2, 0)) == Finite(1)


def test_resdim_agrees_with_projective_dimension(a2):
    projs = AddSet.of(regular_module(a2))
    for X in [simple(a2, 0), simple(a2, 1), projective(a2, 0)]:
        verdict = m_resdim(projs, X)
        assert verdict == Finite(projective_dimension(X, 4))
        assert all(ext_dim(X, Y, verdict.value + 1) == 0 for Y in [simple(a2, 0), simple(a2, 1)])


def test_add_split_sequences(a37, a2):
    B, _ = a37
    A = B.algebra
    projs = AddSet.of(regular_module(A))
    # Ext^1(X, A) = 0 on a self-injective algebra, so cover sequences are add(A)-split.
    for x in [(0, 1), (0, 3), (2, 5)]:
        ap = right_approx(projs, B(x))
        assert is_add_split_sequence((ap.complement_map, ap.map), projs)
    S, T = B((0, 1)), B((2, 6))
    mid, ins, prs = direct_sum([S, T])
    assert is_add_split_sequence((ins[0], prs[1]), AddSet.of(S, T))
    # 0 -> S_1 -> P_0 -> S_0 -> 0 over 0 -> 1: Hom(P_0, P_1) = 0 while Hom(S_1, P_1) = k.
    P, eps = projective_cover(simple(a2, 0))
    K, inc = kernel(eps)
    assert not is_add_split_sequence((inc, eps), AddSet.of(regular_module(a2)))
    with pytest.raises(NotExact):
        is_add_split_sequence((identity(S), identity(S)), AddSet.of(S))


def test_approximation_sequence_needs_ext_vanishing(a37, m1):
    B, _ = a37
    for x in [(0, 3), (1, 6), (1, 1), (0, 4), (0, 6)]:
        X = B(x)
        ap = right_approx(m1, X)
        ext_free = all(ext_dim(X, S, 1) == 0 for S in m1)
        assert is_left_approximation(ap.complement_map, m1) == ext_free


def test_unit_counit_sequences(a37, m1):
    B, _ = a37
    counit, unit = unit_counit_sequences(m1, 1, B((0, 3)))
    assert counit.is_exact() and unit.is_exact()
    assert m_coresdim(m1, counit.left) == Finite(0)
    assert m_resdim(m1, unit.right) == Finite(0)
    counit, unit = unit_counit_sequences(m1, 1, B((0, 5)))
    assert counit.is_exact() and unit.is_exact()
    counit, unit = unit_counit_sequences(m1, 1, zero_module(B.algebra))
    assert counit.middle.dim == 0 and unit.middle.dim == 0
    with pytest.raises(PreconditionFailed):
        unit_counit_sequences(with_regular(B, (0, 3)), 1, B((0, 1)))


def test_cotorsion_witnesses(a37, m1):
    B, _ = a37
    for x in all_indecomposables((3, 2)):
        assert cotorsion_witness(m1, 1, B(x)).holds


def test_stable_hom_examples(a37):
    B, _ = a37
    A = B.algebra
    projs = AddSet.of(regular_module(A))
    assert stable_hom_dim(projective(A, 1), B((0, 3)), projs) == 0
    assert stable_hom_dim(B((1, 6)), B((0, 1)), projs) == 0
    X = B((0, 3))
    assert stable_hom_dim(X, X, AddSet.of(X, regular_module(A))) == 0
    assert stable_hom_dim(X, X, projs) == 1


@settings(max_examples=25, deadline=None)
@given(labels37, labels37)
def test_stable_hom_two_routes(x, y):
    B = bridge((3, 2))
    M = with_regular(B, (0, 1), (2, 6))
    X, Y = B(x), B(y)
    assert stable_hom_dim(X, Y, M) == stable_hom_dim_via_compositions(X, Y, M)


def test_adjointness_dimensions(a37, m1):
    B, _ = a37
    xs = [B(x) for x in all_indecomposables((3, 2)) if x.t < 7]
    for X in xs[:8]:
        for Y in xs[:8]:
            left = stable_hom_dim(rel_syzygy(m1, X, -1), Y, m1)
            right = stable_hom_dim(X, rel_syzygy(m1, Y, 1), m1)
            assert left == right
