import json

import pytest

from orthorep.algebra import NakayamaParams, Quiver, build_algebra, nakayama_algebra
from orthorep.decompose import is_isomorphic
from orthorep.errors import InvalidModule
from orthorep.field import make_field
from orthorep.io import (
    algebra_from_dict,
    algebra_to_dict,
    load_algebra,
    load_module,
    save_algebra,
    save_module,
)
from orthorep.module import projective
from orthorep.nakayama import bridge


def test_nakayama_algebra_round_trip(tmp_path):
    A = nakayama_algebra(NakayamaParams(3, 2))
    path = tmp_path / "a.json"
    save_algebra(A, path)
    B = load_algebra(path)
    assert B.dim == A.dim == 21
    assert B.nakayama == A.nakayama


def test_commutative_square_round_trip(tmp_path):
    f = make_field("Q")
    quiver = Quiver(4, ((0, 1), (0, 2), (1, 3), (2, 3)))
    A = build_algebra(quiver, [[(f.parse("1"), (0, 2)), (f.parse("-1"), (1, 3))]], f)
    data = algebra_to_dict(A)
    again = algebra_from_dict(json.loads(json.dumps(data)))
    assert again.dim == A.dim
    assert again.field.descriptor == "Q"


def test_toml_algebra(tmp_path):
    path = tmp_path / "a2.toml"
    path.write_text('vertices = 2\narrows = [[0, 1]]\nfield = "Fp:7"\n')
    A = load_algebra(path)
    assert A.dim == 3
    assert A.field.characteristic == 7
    path.write_text("nakayama = [2, 2]\n")
    assert load_algebra(path).dim == 10


def test_module_round_trip(tmp_path):
    B = bridge((3, 2), "Q")
    X = B((1, 4))
    save_algebra(B.algebra, tmp_path / "alg.json")
    save_module(X, tmp_path / "x.json", "alg.json")
    Y = load_module(tmp_path / "x.json")
    assert Y.dims == X.dims
    assert [m.tolist() for m in Y.maps] == [m.tolist() for m in X.maps]
    Z = load_module(tmp_path / "x.json", B.algebra)
    assert is_isomorphic(Z, X)
    save_module(projective(B.algebra, 0), tmp_path / "p.json")
    P = load_module(tmp_path / "p.json", B.algebra)
    assert is_isomorphic(P, projective(B.algebra, 0))


def test_module_file_validation(tmp_path):
    A = nakayama_algebra(NakayamaParams(1, 1))
    save_algebra(A, tmp_path / "alg.json")
    bad = {"algebra": "alg.json", "dims": [2], "maps": {"0": [["1", "0"], ["0", "1"]]}}
    (tmp_path / "bad.json").write_text(json.dumps(bad))
    with pytest.raises(InvalidModule):
        load_module(tmp_path / "bad.json")  # x^2 = 0 fails for the identity
    shape = {"algebra": "alg.json", "dims": [2], "maps": {"0": [["0", "1"]]}}
    (tmp_path / "shape.json").write_text(json.dumps(shape))
    with pytest.raises(InvalidModule):
        load_module(tmp_path / "shape.json")
    (tmp_path / "orphan.json").write_text(json.dumps({"dims": [1]}))
    with pytest.raises(InvalidModule):
        load_module(tmp_path / "orphan.json")
