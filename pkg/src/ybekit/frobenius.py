"""Nondegenerate invariant bilinear forms, the form <-> tensor dictionary,
and the operators a form induces from a tensor.

The gram matrix determines an isomorphism from the algebra to its dual; its
inverse is the dual-to-primal map stored here, and the associated tensor has
the inverse gram matrix as coefficient array.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebras import (
    Algebra,
    Augmentation,
    BilinearForm,
    adjoint_bimodule,
    check_augmentation,
    matrix_algebra,
)
from .errors import (
    Degenerate,
    InvalidAugmentation,
    NotInvariantForm,
    NotSymmetricForm,
    PreconditionViolated,
    SingularMatrix,
)
from .linalg import Scalar, Vec, invert, mat_mul, scalar_str, transpose, unit_vec, vec_dot
from .operators import (
    LinearMap,
    WeightOp,
    o_operator_residual,
    residual_is_zero,
    rota_baxter_residual,
    _suite_report,
)
from .report import CheckReport
from .tensors import Tensor2
from .ybe import YbeInstance, extended_symmetrizer, nhacybe_residual


@dataclass(frozen=True)
class FrobeniusStructure:
    algebra: Algebra
    form: BilinearForm
    phi_sharp: LinearMap
    phi: Tensor2

    def lower(self) -> Vec:
        """Matrix of the primal-to-dual map (the inverse of phi_sharp)."""
        return transpose(self.form.gram)


def form_is_invariant(a: Algebra, b: BilinearForm) -> bool:
    n = a.dim
    g = b.gram
    for i in range(n):
        for j in range(n):
            ij = a.sc[i][j]
            for k in range(n):
                lhs = sum(ij[p] * g[p][k] for p in range(n) if ij[p])
                jk = a.sc[j][k]
                rhs = sum(g[i][p] * jk[p] for p in range(n) if jk[p])
                if lhs != rhs:
                    return False
    return True


def frobenius_from_form(a: Algebra, b: BilinearForm) -> FrobeniusStructure:
    """Validate symmetry, invariance and nondegeneracy, then package the
    dual-to-primal map and the associated tensor."""
    if b.algebra != a:
        raise NotInvariantForm("form is not over the given algebra")
    if not b.is_symmetric():
        raise NotSymmetricForm("gram matrix is not symmetric")
    if not form_is_invariant(a, b):
        raise NotInvariantForm("form fails the invariance identity")
    try:
        gram_inv = invert(b.gram)
    except SingularMatrix as exc:
        raise Degenerate("gram matrix is singular") from exc
    phi_sharp = LinearMap(transpose(gram_inv), domain="dual")
    phi = Tensor2(a.dim, gram_inv)
    return FrobeniusStructure(a, b, phi_sharp, phi)


def trace_form(n: int) -> tuple[Algebra, FrobeniusStructure]:
    """Full matrix algebra with its trace form."""
    a = matrix_algebra(n)
    d = a.dim
    tr = tuple(1 if i % (n + 1) == 0 else 0 for i in range(d))
    gram = tuple(tuple(vec_dot(a.sc[i][j], tr) for j in range(d)) for i in range(d))
    return a, frobenius_from_form(a, BilinearForm(a, gram))


def induced_operators(f: FrobeniusStructure, r: Tensor2
                      ) -> tuple[LinearMap, LinearMap]:
    """The two endomorphisms obtained by composing the slot maps of r with
    the primal-to-dual map of the form."""
    lower = transpose(f.form.gram)
    p = mat_mul(transpose(r.coeff), lower)
    pt = mat_mul(r.coeff, lower)
    return LinearMap(p), LinearMap(pt)


def frobenius_suite(f: FrobeniusStructure, mu: Scalar, r: Tensor2) -> CheckReport:
    """Five equivalent statements on a symmetric Frobenius algebra: the
    tensor equation and four operator identities for the induced pair.
    Passing means the verdicts coincide."""
    a = f.algebra
    n = a.dim
    u = a.require_unit()
    inst = YbeInstance(a, mu)
    p, pt = induced_operators(f, r)
    pm, ptm = p.matrix, pt.matrix
    pcols, ptcols = transpose(pm), transpose(ptm)
    b_unit = tuple(f.form.value(u, unit_vec(n, j)) for j in range(n))

    verdict_a = nhacybe_residual(inst, r).is_zero()

    ok_b = True
    ok_c = True
    for i in range(n):
        ei = unit_vec(n, i)
        for j in range(n):
            ej = unit_vec(n, j)
            t0 = a.mul(pcols[i], pcols[j])
            t1 = p.apply(a.mul(pcols[i], ej))
            t2 = p.apply(a.mul(ei, ptcols[j]))
            if any(t0[k] - t1[k] + t2[k] - mu * b_unit[j] * pcols[i][k]
                   for k in range(n)):
                ok_b = False
            s0 = a.mul(ptcols[i], ptcols[j])
            s1 = pt.apply(a.mul(pcols[i], ej))
            s2 = pt.apply(a.mul(ei, ptcols[j]))
            if any(s0[k] + s1[k] - s2[k] - mu * b_unit[i] * ptcols[j][k]
                   for k in range(n)):
                ok_c = False
        if not ok_b and not ok_c:
            break

    sbar = extended_symmetrizer(inst, r)
    twist = mat_mul(transpose(sbar.coeff), transpose(f.form.gram))
    neg_twist = tuple(tuple(-x for x in row) for row in twist)
    adj = adjoint_bimodule(a)
    verdict_d = residual_is_zero(o_operator_residual(
        a, adj, p, WeightOp.right_twist(neg_twist)))
    verdict_e = residual_is_zero(o_operator_residual(
        a, adj, pt, WeightOp.left_twist(neg_twist)))

    return _suite_report("frobenius-operator-suite", {
        "tensor_equation": verdict_a,
        "induced_pair_identity": ok_b,
        "companion_pair_identity": ok_c,
        "right_twisted_rb": verdict_d,
        "left_twisted_rb": verdict_e,
    })


def proportional_lambda(f: FrobeniusStructure, inst: YbeInstance,
                        r: Tensor2) -> Scalar | None:
    """The scalar lam with symmetrizer(r) = -lam * phi, if one exists."""
    sbar = extended_symmetrizer(inst, r)
    if sbar.is_zero():
        return 0
    anchor = None
    for i in range(f.phi.dim):
        for j in range(f.phi.dim):
            if f.phi.coeff[i][j]:
                anchor = (i, j)
                break
        if anchor:
            break
    if anchor is None:
        return None
    i, j = anchor
    from fractions import Fraction
    c = Fraction(sbar.coeff[i][j]) / Fraction(f.phi.coeff[i][j])
    if sbar.coeff == f.phi.scale(c).coeff:
        from .linalg import exact
        return exact(-c)
    return None


def rb_bridge_suite(f: FrobeniusStructure, mu: Scalar, lam: Scalar,
                    r: Tensor2) -> CheckReport:
    """When the symmetrizer is exactly -lam times the form tensor, solving
    the tensor equation is equivalent to both induced operators being
    Rota-Baxter of weight lam."""
    a = f.algebra
    inst = YbeInstance(a, mu)
    sbar = extended_symmetrizer(inst, r)
    defect = sbar.add(f.phi.scale(lam))
    if not defect.is_zero():
        raise PreconditionViolated(
            "proportional-symmetrizer",
            witness={"defect": [[scalar_str(x) for x in row]
                                for row in defect.coeff]})
    p, pt = induced_operators(f, r)
    verdicts = {
        "tensor_equation": nhacybe_residual(inst, r).is_zero(),
        "rb_first": residual_is_zero(rota_baxter_residual(a, p, lam)),
        "rb_second": residual_is_zero(rota_baxter_residual(a, pt, lam)),
    }
    return _suite_report("rb-bridge-suite", verdicts)


def augmentation_form(a: Algebra, aug: Augmentation) -> BilinearForm:
    """The rank-one symmetric invariant form built from an augmentation."""
    rep = check_augmentation(a, aug)
    if not rep.passed:
        raise InvalidAugmentation(str(rep.witness))
    e = aug.eps
    return BilinearForm(a, tuple(tuple(e[i] * e[j] for j in range(a.dim))
                                 for i in range(a.dim)))
