"""Reading and writing algebras and modules.

Algebra files (JSON or TOML)::

    vertices = 2
    arrows = [[0, 1]]                       # arrow k goes source -> target
    relations = [[["1", [0, 1]], ["-1", [2, 3]]]]   # terms (coefficient, arrow ids)
    field = "Fp:101"                        # or "Q"

A file may instead say ``nakayama = [e, a]`` for the symmetric Nakayama
algebra with e vertices and Loewy length ae+1.

Module files (JSON)::

    {"algebra": "alg.json", "dims": [1, 1], "maps": {"0": [["1"]]}}

Field elements are strings: residues over F_p, fractions such as "3/4" over Q.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path as FilePath

import numpy as np

from .algebra import Algebra, NakayamaParams, Quiver, build_algebra, nakayama_algebra
from .errors import InvalidModule
from .field import make_field
from .module import Module

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib


def algebra_to_dict(A: Algebra) -> dict:
    f = A.field
    if A.nakayama is not None:
        return {"nakayama": [A.nakayama.e, A.nakayama.a], "field": f.descriptor}
    return {
        "vertices": A.vertex_count,
        "arrows": [[s, t] for s, t in A.quiver.arrows],
        "relations": [[[f.format(c), list(arrows)] for c, arrows in rel] for rel in A.relations],
        "field": f.descriptor,
    }


def algebra_from_dict(data: dict, field=None) -> Algebra:
    fld = field if field is not None else data.get("field")
    if "nakayama" in data:
        e, a = data["nakayama"]
        return nakayama_algebra(NakayamaParams(int(e), int(a)), fld)
    quiver = Quiver(int(data["vertices"]), tuple((int(s), int(t)) for s, t in data.get("arrows", [])))
    fobj = make_field(fld)
    relations = [[(fobj.parse(str(c)), tuple(arrows)) for c, arrows in rel] for rel in data.get("relations", [])]
    return build_algebra(quiver, relations, fobj, name=data.get("name"))


def _read_mapping(path: str | FilePath) -> dict:
    p = FilePath(path)
    text = p.read_text()
    if p.suffix.lower() == ".toml":
        return tomllib.loads(text)
    return json.loads(text)


def load_algebra(path: str | FilePath, field=None) -> Algebra:
    return algebra_from_dict(_read_mapping(path), field)


def save_algebra(A: Algebra, path: str | FilePath) -> None:
    FilePath(path).write_text(json.dumps(algebra_to_dict(A), indent=2) + "\n")


def module_to_dict(X: Module, algebra_ref: str | dict | None = None) -> dict:
    f = X.field
    return {
        "algebra": algebra_ref if algebra_ref is not None else algebra_to_dict(X.algebra),
        "dims": list(X.dims),
        "maps": {str(a): [[f.format(v) for v in row] for row in m.tolist()] for a, m in enumerate(X.maps)},
    }


def module_from_dict(data: dict, A: Algebra) -> Module:
    """Build a module over A, validating the relations.

    Raises:
        InvalidModule: wrong shapes or the relations of A are violated.
    """
    f = A.field
    dims = [int(d) for d in data["dims"]]
    if len(dims) != A.vertex_count:
        raise InvalidModule("dimension vector has the wrong length")
    raw = data.get("maps", {})
    maps = []
    for a, (s, t) in enumerate(A.quiver.arrows):
        rows = raw.get(str(a), raw.get(a))
        if rows is None:
            m = f.zeros((dims[t], dims[s]))
        else:
            m = f.array([[f.parse(v) for v in row] for row in rows])
            if m.size == 0:
                m = f.zeros((dims[t], dims[s]))
        if m.shape != (dims[t], dims[s]):
            raise InvalidModule(f"matrix for arrow {a} has shape {m.shape}, expected {(dims[t], dims[s])}")
        maps.append(m)
    return Module(A, dims, maps, name=data.get("name"))


def load_module(path: str | FilePath, A: Algebra | None = None) -> Module:
    data = _read_mapping(path)
    if A is None:
        ref = data.get("algebra")
        if isinstance(ref, dict):
            A = algebra_from_dict(ref)
        elif isinstance(ref, str):
            A = load_algebra(FilePath(path).parent / ref)
        else:
            raise InvalidModule("module file names no algebra")
    return module_from_dict(data, A)


def save_module(X: Module, path: str | FilePath, algebra_ref: str | dict | None = None) -> None:
    FilePath(path).write_text(json.dumps(module_to_dict(X, algebra_ref), indent=2) + "\n")


def morphism_matrices(mats) -> list[list[list[str]]]:
    return [[[str(v) for v in row] for row in np.asarray(m).tolist()] for m in mats]
