import brute
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orthorep.algebra import Quiver, nakayama_algebra, path_algebra
from orthorep.decompose import is_isomorphic
from orthorep.errors import AlgebraMismatch, InvalidModule
from orthorep.module import (
    Module,
    Morphism,
    cokernel,
    hom,
    identity,
    image,
    injective,
    injective_envelope,
    kernel,
    projective,
    projective_cover,
    rad,
    simple,
    socle,
    top,
    zero_morphism,
)
from orthorep.nakayama import all_indecomposables

KRONECKER = path_algebra(Quiver(2, ((0, 1), (0, 1))), 5)


@st.composite
def kronecker_modules(draw, max_dim=3):
    d0 = draw(st.integers(0, max_dim))
    d1 = draw(st.integers(0, max_dim))
    mats = [
        np.array(draw(st.lists(st.lists(st.integers(0, 4), min_size=d0, max_size=d0), min_size=d1, max_size=d1)), dtype=np.int64).reshape(d1, d0)
        for _ in range(2)
    ]
    return Module(KRONECKER, (d0, d1), mats)


def test_hom_examples(a37):
    B, _ = a37
    A = B.algebra
    assert hom(simple(A, 0), simple(A, 0)).dim == 1
    assert hom(B((0, 2)), B((0, 2))).dim == 1
    assert hom(simple(A, 0), simple(A, 1)).dim == 0


def test_hom_against_brute_force(a37):
    B, _ = a37
    xs = all_indecomposables((3, 2))
    for x in xs[::5]:
        for y in xs[::4]:
            assert hom(B(x), B(y)).dim == brute.hom_dim(B(x), B(y))


@settings(max_examples=40, deadline=None)
@given(kronecker_modules(), kronecker_modules())
def test_hom_dimension_matches_brute_force(X, Y):
    H = hom(X, Y)
    assert H.dim == brute.hom_dim(X, Y)
    assert all(f.is_homomorphism() for f in H.basis)


@settings(max_examples=30, deadline=None)
@given(kronecker_modules(), kronecker_modules(), st.integers(0, 10_000))
def test_rank_nullity_and_exactness(X, Y, seed):
    H = hom(X, Y)
    f = H.random(np.random.default_rng(seed)) if H.dim else zero_morphism(X, Y)
    K, inc = kernel(f)
    I, epi, mono = image(f)
    C, proj = cokernel(f)
    assert K.dim + I.dim == X.dim
    assert I.dim + C.dim == Y.dim
    assert inc.then(f).is_zero() and f.then(proj).is_zero()
    assert inc.is_injective() and proj.is_surjective()


def test_kernel_examples(a37):
    B, _ = a37
    A = B.algebra
    X = B((0, 3))
    assert kernel(identity(X))[0].dim == 0
    K, _ = kernel(zero_morphism(X, B((1, 2))))
    assert K.dims == X.dims
    P, eps = projective_cover(simple(A, 0))
    assert is_isomorphic(P, projective(A, 0))
    R, _ = kernel(eps)
    assert R.dims == (2, 2, 2)
    assert is_isomorphic(R, rad(projective(A, 0))[0])


def test_top_socle_radical(a37):
    B, _ = a37
    A = B.algebra
    X = B((0, 3))
    assert is_isomorphic(top(X), simple(A, 0))
    assert is_isomorphic(socle(X)[0], simple(A, 2))
    assert rad(simple(A, 1))[0].dim == 0


def test_covers_and_envelopes(a37):
    B, _ = a37
    A = B.algebra
    for v in range(3):
        P, eps = projective_cover(projective(A, v))
        assert eps.is_iso()
    I, mono = injective_envelope(simple(A, 2))
    assert is_isomorphic(I, injective(A, 2)) and mono.is_injective()


def test_invalid_modules():
    A = nakayama_algebra((1, 1))
    with pytest.raises(InvalidModule):
        Module(A, (2,), [np.eye(2, dtype=np.int64)])  # x^2 = 1, not 0
    with pytest.raises(InvalidModule):
        Module(A, (2, 1), [np.zeros((2, 2), dtype=np.int64)])
    with pytest.raises(InvalidModule):
        Module(A, (2,), [np.zeros((1, 2), dtype=np.int64)])


def test_morphism_checks(a37):
    B, _ = a37
    X, Y = B((0, 2)), B((0, 1))
    bad = [np.ones((d2, d1), dtype=np.int64) for d1, d2 in zip(X.dims, Y.dims)]
    with pytest.raises(InvalidModule):
        Morphism(X, B((1, 2)), [np.ones((d2, d1), dtype=np.int64) for d1, d2 in zip(X.dims, B((1, 2)).dims)], check=True)
    other = simple(nakayama_algebra((2, 2)), 0)
    with pytest.raises(AlgebraMismatch):
        hom(X, other)
    f = hom(X, Y).basis[0]
    assert f.is_surjective() and not f.is_injective()
    assert Morphism(X, Y, bad).rank() >= 0
