"""JSON encoding of every value the CLI reads or writes.

Rationals are serialized as "p/q" strings, or "p" when the denominator is
one.  Dumps are byte-deterministic: keys sorted, compact separators.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .algebras import Algebra, Augmentation, BilinearForm, Bimodule, make_algebra
from .dendriform import Dendriform
from .errors import DimensionMismatch
from .linalg import exact, scalar_str
from .operators import LinearMap
from .tensors import Tensor2, Tensor3


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def parse_scalar(s):
    return exact(Fraction(s)) if isinstance(s, str) else exact(s)


def _vec_out(v):
    return [scalar_str(x) for x in v]


def _vec_in(v):
    return tuple(parse_scalar(x) for x in v)


def _mat_out(m):
    return [_vec_out(r) for r in m]


def _mat_in(m):
    return tuple(_vec_in(r) for r in m)


def encode_tensor2(t: Tensor2) -> dict:
    return {"dim": t.dim, "coeff": _mat_out(t.coeff)}


def decode_tensor2(d: dict) -> Tensor2:
    return Tensor2(int(d["dim"]), _mat_in(d["coeff"]))


def encode_tensor3(t: Tensor3) -> dict:
    return {"dim": t.dim,
            "coeff": [[_vec_out(r) for r in plane] for plane in t.coeff]}


def encode_algebra(a: Algebra) -> dict:
    return {
        "dim": a.dim,
        "basis": list(a.basis),
        "unit": _vec_out(a.unit) if a.unit is not None else None,
        "sc": [[_vec_out(v) for v in row] for row in a.sc],
    }


def decode_algebra(d: dict) -> Algebra:
    dim = int(d["dim"])
    sc = tuple(tuple(_vec_in(v) for v in row) for row in d["sc"])
    unit = _vec_in(d["unit"]) if d.get("unit") is not None else None
    basis = d.get("basis") or None
    return make_algebra(dim, sc, unit=unit, basis=basis)


def encode_linear_map(m: LinearMap) -> dict:
    return {"rows": m.rows, "cols": m.cols, "matrix": _mat_out(m.matrix),
            "domain": m.domain}


def decode_linear_map(d: dict) -> LinearMap:
    matrix = _mat_in(d["matrix"])
    if "rows" in d and (len(matrix) != int(d["rows"]) or
                        (matrix and len(matrix[0]) != int(d["cols"]))):
        raise DimensionMismatch("matrix shape disagrees with rows/cols")
    return LinearMap(matrix, d.get("domain", "primal"))


def encode_bimodule(v: Bimodule) -> dict:
    return {"left": [_mat_out(m) for m in v.left],
            "right": [_mat_out(m) for m in v.right]}


def decode_bimodule(d: dict, algebra: Algebra) -> Bimodule:
    left = tuple(_mat_in(m) for m in d["left"])
    if not left:
        raise DimensionMismatch("bimodule needs at least one action matrix")
    return Bimodule(algebra, len(left[0]), left,
                    tuple(_mat_in(m) for m in d["right"]))


def encode_form(b: BilinearForm) -> dict:
    return {"gram": _mat_out(b.gram)}


def decode_form(d: dict, algebra: Algebra) -> BilinearForm:
    return BilinearForm(algebra, _mat_in(d["gram"]))


def encode_augmentation(a: Augmentation) -> dict:
    return {"eps": _vec_out(a.eps)}


def decode_augmentation(d: dict, algebra: Algebra) -> Augmentation:
    return Augmentation(algebra, _vec_in(d["eps"]))


def encode_dendriform(dd: Dendriform) -> dict:
    return {"dim": dd.dim,
            "prec": [[_vec_out(v) for v in row] for row in dd.prec],
            "succ": [[_vec_out(v) for v in row] for row in dd.succ]}


def decode_dendriform(d: dict) -> Dendriform:
    return Dendriform(
        int(d["dim"]),
        tuple(tuple(_vec_in(v) for v in row) for row in d["prec"]),
        tuple(tuple(_vec_in(v) for v in row) for row in d["succ"]))
