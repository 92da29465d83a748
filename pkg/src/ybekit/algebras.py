"""Finite-dimensional associative algebras given by structure constants,
their bimodules, bilinear forms, augmentations and the standard
constructions (duals, semi-direct products, unitization, matrix algebras).

Conventions, fixed once and relied on everywhere downstream:

* sc[i][j] is the coordinate vector of the basis product e_i e_j.
* Bimodule actions are stored per algebra basis vector as matrices acting on
  column vectors: left[k] @ v realises e_k acting on the left, right[k] @ v
  realises e_k acting on the right.  Right actions therefore compose
  contravariantly: rmat(x y) = rmat(y) @ rmat(x).
* Semi-direct products order the algebra part before the module part.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch, InvalidAugmentation, NotAssociative
from .linalg import (
    Mat,
    Vec,
    identity,
    is_zero_vec,
    mat,
    mat_mul,
    mat_vec,
    scalar_str,
    transpose,
    unit_vec,
    vec,
    zero_vec,
)
from .report import CheckReport


@dataclass(frozen=True)
class Algebra:
    dim: int
    basis: tuple[str, ...]
    sc: tuple[tuple[Vec, ...], ...]
    unit: Vec | None

    def __post_init__(self):
        n = self.dim
        sc = tuple(tuple(vec(v) for v in row) for row in self.sc)
        if len(sc) != n or any(len(row) != n for row in sc) or any(
                len(v) != n for row in sc for v in row):
            raise DimensionMismatch(f"structure constants are not {n}x{n}x{n}")
        if len(self.basis) != n:
            raise DimensionMismatch("basis names do not match dim")
        unit = None if self.unit is None else vec(self.unit)
        if unit is not None and len(unit) != n:
            raise DimensionMismatch("unit vector has wrong length")
        # Left/right multiplication matrices per basis vector, precomputed
        # because every verification below loops over them.
        left = tuple(
            tuple(tuple(sc[k][j][p] for j in range(n)) for p in range(n))
            for k in range(n))
        right = tuple(
            tuple(tuple(sc[j][k][p] for j in range(n)) for p in range(n))
            for k in range(n))
        object.__setattr__(self, "sc", sc)
        object.__setattr__(self, "basis", tuple(self.basis))
        object.__setattr__(self, "unit", unit)
        object.__setattr__(self, "_left", left)
        object.__setattr__(self, "_right", right)

    @property
    def is_unital(self) -> bool:
        return self.unit is not None

    def left_matrix(self, x: Vec) -> Mat:
        """Matrix of y -> x y."""
        return _action_matrix(self._left, x)

    def right_matrix(self, x: Vec) -> Mat:
        """Matrix of y -> y x."""
        return _action_matrix(self._right, x)

    def mul(self, x: Vec, y: Vec) -> Vec:
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatch("vector length does not match algebra dim")
        out = [0] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self.sc[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                for p, s in enumerate(row[j]):
                    if s:
                        out[p] += c * s
        return tuple(out)

    def require_unit(self) -> Vec:
        from .errors import NotUnital
        if self.unit is None:
            raise NotUnital("operation requires a unital algebra")
        return self.unit


def _action_matrix(table, x: Vec) -> Mat:
    n = len(x)
    out = [[0] * n for _ in range(n)]
    for k, c in enumerate(x):
        if not c:
            continue
        m = table[k]
        for p in range(n):
            row = m[p]
            orow = out[p]
            for q in range(n):
                if row[q]:
                    orow[q] += c * row[q]
    return tuple(tuple(r) for r in out)


def make_algebra(dim, sc, unit=None, basis=None) -> Algebra:
    names = tuple(basis) if basis else tuple(f"e{i + 1}" for i in range(dim))
    return Algebra(dim, names, tuple(tuple(vec(v) for v in row) for row in sc), unit)


def algebra_from_products(dim, products: dict, unit=None, basis=None) -> Algebra:
    """Build an algebra from sparse basis products {(i, j): {k: c}}."""
    sc = [[[0] * dim for _ in range(dim)] for _ in range(dim)]
    for (i, j), val in products.items():
        for k, c in val.items():
            sc[i][j][k] = c
    return make_algebra(dim, sc, unit=unit, basis=basis)


def check_algebra(a: Algebra) -> CheckReport:
    """Associativity on all basis triples plus two-sided unit, if declared."""
    n = a.dim
    for i in range(n):
        for j in range(n):
            ij = a.sc[i][j]
            for k in range(n):
                lhs = a.mul(ij, unit_vec(n, k))
                rhs = a.mul(unit_vec(n, i), a.sc[j][k])
                if lhs != rhs:
                    return CheckReport(
                        "algebra-axioms", False,
                        witness={"kind": "associativity", "triple": [i, j, k],
                                 "left": [scalar_str(x) for x in lhs],
                                 "right": [scalar_str(x) for x in rhs]})
    if a.unit is not None:
        for k in range(n):
            ek = unit_vec(n, k)
            if a.mul(a.unit, ek) != ek or a.mul(ek, a.unit) != ek:
                return CheckReport(
                    "algebra-axioms", False,
                    witness={"kind": "unit", "basis_index": k})
    return CheckReport("algebra-axioms", True, details={"dim": n, "unital": a.is_unital})


@dataclass(frozen=True)
class Bimodule:
    algebra: Algebra
    dim: int
    left: tuple[Mat, ...]
    right: tuple[Mat, ...]

    def __post_init__(self):
        n, m = self.algebra.dim, self.dim
        left = tuple(mat(x) for x in self.left)
        right = tuple(mat(x) for x in self.right)
        for tab in (left, right):
            if len(tab) != n or any(len(mx) != m or len(mx[0]) != m for mx in tab if mx):
                raise DimensionMismatch("action tables do not match dims")
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)

    def lmat(self, x: Vec) -> Mat:
        return _action_matrix_rect(self.left, x, self.dim)

    def rmat(self, x: Vec) -> Mat:
        return _action_matrix_rect(self.right, x, self.dim)

    def act_left(self, x: Vec, v: Vec) -> Vec:
        return mat_vec(self.lmat(x), v)

    def act_right(self, v: Vec, x: Vec) -> Vec:
        return mat_vec(self.rmat(x), v)


def _action_matrix_rect(table, x: Vec, m: int) -> Mat:
    out = [[0] * m for _ in range(m)]
    for k, c in enumerate(x):
        if not c:
            continue
        mx = table[k]
        for p in range(m):
            row = mx[p]
            orow = out[p]
            for q in range(m):
                if row[q]:
                    orow[q] += c * row[q]
    return tuple(tuple(r) for r in out)


def adjoint_bimodule(a: Algebra) -> Bimodule:
    """The algebra acting on itself by left and right multiplication."""
    return Bimodule(a, a.dim, a._left, a._right)


def dual_bimodule(v: Bimodule) -> Bimodule:
    """Dual module: new left action is the transpose of the old right action,
    new right action the transpose of the old left action."""
    return Bimodule(
        v.algebra, v.dim,
        tuple(transpose(m) for m in v.right),
        tuple(transpose(m) for m in v.left),
    )


def dual_regular_bimodule(a: Algebra) -> Bimodule:
    """The dual of the adjoint bimodule, i.e. the dual space with left action
    transpose-of-right-multiplication and right action transpose-of-left."""
    return dual_bimodule(adjoint_bimodule(a))


def check_bimodule(v: Bimodule) -> CheckReport:
    """The three bimodule axiom families on all basis pairs of the algebra."""
    a = v.algebra
    n = a.dim
    for i in range(n):
        for j in range(n):
            prod = a.sc[i][j]
            if v.lmat(prod) != mat_mul(v.left[i], v.left[j]):
                return CheckReport("bimodule-axioms", False,
                                   witness={"kind": "left-action", "pair": [i, j]})
            if v.rmat(prod) != mat_mul(v.right[j], v.right[i]):
                return CheckReport("bimodule-axioms", False,
                                   witness={"kind": "right-action", "pair": [i, j]})
            if mat_mul(v.right[j], v.left[i]) != mat_mul(v.left[i], v.right[j]):
                return CheckReport("bimodule-axioms", False,
                                   witness={"kind": "commuting-actions", "pair": [i, j]})
    return CheckReport("bimodule-axioms", True,
                       details={"algebra_dim": n, "module_dim": v.dim})


def is_unital_bimodule(v: Bimodule) -> bool:
    """Whether the unit acts as the identity on both sides."""
    a = v.algebra
    if a.unit is None:
        return False
    eye = identity(v.dim)
    return v.lmat(a.unit) == eye and v.rmat(a.unit) == eye


def semidirect_product(a: Algebra, v: Bimodule, module_names=None) -> Algebra:
    """Algebra on A (+) V with (a+u)(b+w) = ab + (a.w + u.b).

    The result carries a unit exactly when A is unital and the unit acts as
    the identity on V; otherwise the unit slot is left empty.
    """
    if v.algebra is not a and v.algebra != a:
        raise DimensionMismatch("bimodule is not over the given algebra")
    n, m = a.dim, v.dim
    d = n + m
    sc = [[[0] * d for _ in range(d)] for _ in range(d)]
    for i in range(n):
        for j in range(n):
            for p, c in enumerate(a.sc[i][j]):
                sc[i][j][p] = c
    for i in range(n):
        li = v.left[i]
        for j in range(m):
            for p in range(m):
                sc[i][n + j][n + p] = li[p][j]
    for i in range(m):
        for j in range(n):
            rj = v.right[j]
            for p in range(m):
                sc[n + i][j][n + p] = rj[p][i]
    unit = None
    if a.unit is not None and is_unital_bimodule(v):
        unit = tuple(a.unit) + zero_vec(m)
    names = tuple(a.basis) + tuple(
        module_names if module_names else (f"v{i + 1}" for i in range(m)))
    return make_algebra(d, sc, unit=unit, basis=names)


def unitization(sc) -> tuple[Algebra, "Augmentation"]:
    """Adjoin a unit to (possibly non-unital) structure constants; the
    augmentation is the projection onto the new unit coordinate."""
    inner = make_algebra(len(sc), sc, unit=None)
    rep = check_algebra(inner)
    if not rep.passed:
        raise NotAssociative(f"input multiplication is not associative: {rep.witness}")
    m = inner.dim
    d = m + 1
    out = [[[0] * d for _ in range(d)] for _ in range(d)]
    for i in range(d):
        out[0][i][i] = 1
        out[i][0][i] = 1
    out[0][0] = [0] * d
    out[0][0][0] = 1
    for i in range(m):
        for j in range(m):
            for p, c in enumerate(inner.sc[i][j]):
                out[1 + i][1 + j][1 + p] = c
    names = ("u",) + tuple(f"e{i + 1}" for i in range(m))
    alg = make_algebra(d, out, unit=unit_vec(d, 0), basis=names)
    return alg, Augmentation(alg, unit_vec(d, 0))


@dataclass(frozen=True)
class BilinearForm:
    algebra: Algebra
    gram: Mat

    def __post_init__(self):
        g = mat(self.gram)
        n = self.algebra.dim
        if len(g) != n or any(len(r) != n for r in g):
            raise DimensionMismatch("gram matrix does not match algebra dim")
        object.__setattr__(self, "gram", g)

    def value(self, x: Vec, y: Vec):
        acc = 0
        for xi, row in zip(x, self.gram, strict=True):
            if not xi:
                continue
            for gij, yj in zip(row, y, strict=True):
                if gij and yj:
                    acc += xi * gij * yj
        return acc

    def is_symmetric(self) -> bool:
        return self.gram == transpose(self.gram)


@dataclass(frozen=True)
class Augmentation:
    algebra: Algebra
    eps: Vec

    def __post_init__(self):
        e = vec(self.eps)
        if len(e) != self.algebra.dim:
            raise DimensionMismatch("augmentation vector has wrong length")
        object.__setattr__(self, "eps", e)

    def apply(self, x: Vec):
        return sum(c * xi for c, xi in zip(self.eps, x) if c and xi)


def check_augmentation(a: Algebra, aug: Augmentation) -> CheckReport:
    """Multiplicativity on basis pairs, normalisation at the unit, and the
    cyclic trace identity on basis triples (which must come for free)."""
    n = a.dim
    eps = aug.apply
    for i in range(n):
        for j in range(n):
            lhs = eps(a.sc[i][j])
            rhs = aug.eps[i] * aug.eps[j]
            if lhs != rhs:
                return CheckReport(
                    "augmentation", False,
                    witness={"kind": "multiplicative", "pair": [i, j],
                             "left": scalar_str(lhs), "right": scalar_str(rhs)})
    if a.unit is not None and eps(a.unit) != 1:
        return CheckReport("augmentation", False,
                           witness={"kind": "unit-normalisation",
                                    "value": scalar_str(eps(a.unit))})
    for i in range(n):
        ei = unit_vec(n, i)
        for j in range(n):
            for k in range(n):
                xyz = a.mul(a.sc[i][j], unit_vec(n, k))
                yzx = a.mul(a.sc[j][k], ei)
                if eps(xyz) != eps(yzx):
                    return CheckReport("augmentation", False,
                                       witness={"kind": "cyclic", "triple": [i, j, k]})
    return CheckReport("augmentation", True)


def find_augmentations(a: Algebra, values=(0, 1, -1)) -> list[Augmentation]:
    """Exhaustive search for augmentations with entries in a small grid."""
    from itertools import product as iproduct
    found = []
    for eps in iproduct(values, repeat=a.dim):
        aug = Augmentation(a, eps)
        if is_zero_vec(aug.eps):
            continue
        if check_augmentation(a, aug).passed:
            found.append(aug)
    return found


def augmentation_kernel_basis(aug: Augmentation) -> list[Vec]:
    from .linalg import kernel_basis
    return kernel_basis((aug.eps,))


def matrix_algebra(n: int) -> Algebra:
    """Full matrix algebra on the elementary-matrix basis, row-major order."""
    if n < 1:
        raise DimensionMismatch("matrix algebra needs n >= 1")
    d = n * n
    idx = lambda a, b: a * n + b
    sc = [[[0] * d for _ in range(d)] for _ in range(d)]
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for e in range(n):
                    if b == c:
                        sc[idx(a, b)][idx(c, e)][idx(a, e)] = 1
    unit = [0] * d
    for a in range(n):
        unit[idx(a, a)] = 1
    names = tuple(f"E{a + 1}{b + 1}" for a in range(n) for b in range(n))
    return make_algebra(d, sc, unit=tuple(unit), basis=names)


def validate_augmentation(a: Algebra, aug: Augmentation) -> Augmentation:
    rep = check_augmentation(a, aug)
    if not rep.passed:
        raise InvalidAugmentation(str(rep.witness))
    return aug
