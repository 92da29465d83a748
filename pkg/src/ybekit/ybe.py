"""Tensor form of the mu-nonhomogeneous associative Yang-Baxter equation.

For r in A(x)A the three standard embeddings into A(x)A(x)A put the unit in
the unused slot; the equation reads

    r12 r13 + r13 r23 - r23 r12 = mu * r13.

Residuals are computed from the expanded quartic form, which only multiplies
basis vectors pairwise, so a unit is needed only for the mu-term.  All checks
are exact: pass means the residual is identically zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct

from .algebras import Algebra, check_algebra
from .errors import BudgetExceeded, DimensionMismatch, NotUnital
from .linalg import Scalar, exact, kernel_basis, mat_mul, scalar_str
from .report import CheckReport
from .tensors import Tensor2, Tensor3, outer, t2_zero

SLOTS = (12, 13, 23)


@dataclass(frozen=True)
class YbeInstance:
    algebra: Algebra
    mu: Scalar

    def __post_init__(self):
        object.__setattr__(self, "mu", exact(self.mu))
        if self.mu != 0:
            self.algebra.require_unit()
        rep = check_algebra(self.algebra)
        if not rep.passed:
            raise DimensionMismatch(f"invalid algebra: {rep.witness}")


def unit_square(a: Algebra) -> Tensor2:
    """The tensor 1 (x) 1."""
    u = a.require_unit()
    return outer(u, u)


def embed(r: Tensor2, slots: int, a: Algebra) -> Tensor3:
    """Place r in two tensor slots of A(x)A(x)A with the unit in the third."""
    if slots not in SLOTS:
        raise DimensionMismatch(f"slots must be one of {SLOTS}")
    n = a.dim
    if r.dim != n:
        raise DimensionMismatch(f"tensor dim {r.dim} != algebra dim {n}")
    u = a.require_unit()
    c = r.coeff
    if slots == 12:
        coeff = tuple(tuple(tuple(c[p][q] * u[s] for s in range(n))
                            for q in range(n)) for p in range(n))
    elif slots == 13:
        coeff = tuple(tuple(tuple(c[p][s] * u[q] for s in range(n))
                            for q in range(n)) for p in range(n))
    else:
        coeff = tuple(tuple(tuple(u[p] * c[q][s] for s in range(n))
                            for q in range(n)) for p in range(n))
    return Tensor3(n, coeff)


def triple_mul(x: Tensor3, y: Tensor3, a: Algebra) -> Tensor3:
    """Slotwise product in A(x)A(x)A."""
    n = a.dim
    if x.dim != n or y.dim != n:
        raise DimensionMismatch("tensor dims do not match algebra dim")
    out = [[[0] * n for _ in range(n)] for _ in range(n)]
    nz_x = [(i, j, k, c) for i, pl in enumerate(x.coeff)
            for j, row in enumerate(pl) for k, c in enumerate(row) if c]
    nz_y = [(i, j, k, c) for i, pl in enumerate(y.coeff)
            for j, row in enumerate(pl) for k, c in enumerate(row) if c]
    sc = a.sc
    for i1, i2, i3, cx in nz_x:
        for j1, j2, j3, cy in nz_y:
            c = cx * cy
            v1, v2, v3 = sc[i1][j1], sc[i2][j2], sc[i3][j3]
            for p, a1 in enumerate(v1):
                if not a1:
                    continue
                ca = c * a1
                for q, a2 in enumerate(v2):
                    if not a2:
                        continue
                    cb = ca * a2
                    for s, a3 in enumerate(v3):
                        if a3:
                            out[p][q][s] += cb * a3
    return Tensor3(n, tuple(tuple(tuple(r) for r in pl) for pl in out))


def _check_ybe_args(inst: YbeInstance, r: Tensor2):
    if r.dim != inst.algebra.dim:
        raise DimensionMismatch(
            f"tensor dim {r.dim} != algebra dim {inst.algebra.dim}")


def nhacybe_residual(inst: YbeInstance, r: Tensor2) -> Tensor3:
    """r12 r13 + r13 r23 - r23 r12 - mu r13, expanded over basis products."""
    _check_ybe_args(inst, r)
    a, mu = inst.algebra, inst.mu
    n = a.dim
    c = r.coeff
    sc = a.sc
    out = [[[0] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        ri = c[i]
        for k in range(n):
            rk = c[k]
            # (e_i e_k) (x) e_q (x) e_s from r12 r13
            v = sc[i][k]
            for p, vp in enumerate(v):
                if not vp:
                    continue
                op = out[p]
                for q, xq in enumerate(ri):
                    if not xq:
                        continue
                    cq = vp * xq
                    row = op[q]
                    for s, xs in enumerate(rk):
                        if xs:
                            row[s] += cq * xs
    for p in range(n):
        rp = c[p]
        op = out[p]
        for q in range(n):
            rq = c[q]
            row = op[q]
            for j, xj in enumerate(rp):
                if not xj:
                    continue
                for l, xl in enumerate(rq):
                    if not xl:
                        continue
                    cc = xj * xl
                    # e_p (x) e_q (x) (e_j e_l) from r13 r23
                    for s, vs in enumerate(sc[j][l]):
                        if vs:
                            row[s] += cc * vs
    for p in range(n):
        op = out[p]
        for i in range(n):
            ris = c[i]
            xpl_row = c[p]
            for l, xl in enumerate(xpl_row):
                if not xl:
                    continue
                v = sc[i][l]
                for q, vq in enumerate(v):
                    if not vq:
                        continue
                    row = op[q]
                    cc = vq * xl
                    # e_p (x) (e_i e_l) (x) e_s from r23 r12, subtracted
                    for s, xs in enumerate(ris):
                        if xs:
                            row[s] -= cc * xs
    if mu != 0:
        u = a.require_unit()
        for p in range(n):
            rp = c[p]
            op = out[p]
            for q, uq in enumerate(u):
                if not uq:
                    continue
                muq = mu * uq
                row = op[q]
                for s, xs in enumerate(rp):
                    if xs:
                        row[s] -= muq * xs
    return Tensor3(n, tuple(tuple(tuple(rr) for rr in pl) for pl in out))


def opposite_residual(inst: YbeInstance, r: Tensor2) -> Tensor3:
    """r13 r12 + r23 r13 - r12 r23 - mu r13 for the opposite equation."""
    _check_ybe_args(inst, r)
    a, mu = inst.algebra, inst.mu
    n = a.dim
    c = r.coeff
    sc = a.sc
    out = [[[0] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            v = sc[i][j]
            ci, cj = c[i], c[j]
            for p, vp in enumerate(v):
                if not vp:
                    continue
                op = out[p]
                # (e_i e_j) (x) e_q (x) e_s from r13 r12
                for q, xq in enumerate(cj):
                    if not xq:
                        continue
                    cc = vp * xq
                    row = op[q]
                    for s, xs in enumerate(ci):
                        if xs:
                            row[s] += cc * xs
    for p in range(n):
        op = out[p]
        cp = c[p]
        for q in range(n):
            cq = c[q]
            row_out = op[q]
            for ip, xi in enumerate(cq):
                if not xi:
                    continue
                for jp, xj in enumerate(cp):
                    if not xj:
                        continue
                    cc = xi * xj
                    # e_p (x) e_q (x) (e_i' e_j') from r23 r13
                    for s, vs in enumerate(sc[ip][jp]):
                        if vs:
                            row_out[s] += cc * vs
    for p in range(n):
        cp = c[p]
        op = out[p]
        for ip, xi in enumerate(cp):
            if not xi:
                continue
            for j in range(n):
                cj = c[j]
                v = sc[ip][j]
                for q, vq in enumerate(v):
                    if not vq:
                        continue
                    cc = xi * vq
                    row = op[q]
                    # e_p (x) (e_i' e_j) (x) e_s from r12 r23, subtracted
                    for s, xs in enumerate(cj):
                        if xs:
                            row[s] -= cc * xs
    if mu != 0:
        u = a.require_unit()
        for p in range(n):
            cp = c[p]
            op = out[p]
            for q, uq in enumerate(u):
                if not uq:
                    continue
                muq = mu * uq
                row = op[q]
                for s, xs in enumerate(cp):
                    if xs:
                        row[s] -= muq * xs
    return Tensor3(n, tuple(tuple(tuple(rr) for rr in pl) for pl in out))


def is_solution(inst: YbeInstance, r: Tensor2) -> bool:
    return nhacybe_residual(inst, r).is_zero()


def extended_symmetrizer(inst: YbeInstance, r: Tensor2) -> Tensor2:
    """r + flip(r) - mu (1 (x) 1); always a symmetric tensor."""
    _check_ybe_args(inst, r)
    s = r.add(r.flip())
    if inst.mu == 0:
        return s
    return s.sub(unit_square(inst.algebra).scale(inst.mu))


def invariance_defect(a: Algebra, s: Tensor2, k: int) -> Tensor2:
    """Defect of s under the k-th basis vector: s @ L(e_k)^T - R(e_k) @ s."""
    lk = a.left_matrix(tuple(1 if i == k else 0 for i in range(a.dim)))
    rk = a.right_matrix(tuple(1 if i == k else 0 for i in range(a.dim)))
    left_piece = mat_mul(s.coeff, tuple(zip(*lk)))
    right_piece = mat_mul(rk, s.coeff)
    return Tensor2(a.dim, tuple(
        tuple(x - y for x, y in zip(r1, r2))
        for r1, r2 in zip(left_piece, right_piece)))


def is_invariant(a: Algebra, s: Tensor2) -> CheckReport:
    """Whether (id (x) L(x) - R(x) (x) id) s = 0 for every basis x."""
    if s.dim != a.dim:
        raise DimensionMismatch("tensor dim does not match algebra dim")
    for k in range(a.dim):
        d = invariance_defect(a, s, k)
        if not d.is_zero():
            return CheckReport(
                "invariant-tensor", False,
                witness={"basis_index": k,
                         "defect": [[scalar_str(x) for x in row] for row in d.coeff]})
    return CheckReport("invariant-tensor", True)


def invariant_symmetric_basis(a: Algebra) -> list[Tensor2]:
    """Basis of the space of symmetric invariant tensors, by a linear solve."""
    n = a.dim
    rows = []
    for k in range(n):
        ek = tuple(1 if i == k else 0 for i in range(n))
        lk = a.left_matrix(ek)
        rk = a.right_matrix(ek)
        for p in range(n):
            for q in range(n):
                row = [0] * (n * n)
                for j in range(n):
                    if lk[q][j]:
                        row[p * n + j] += lk[q][j]
                for i in range(n):
                    if rk[p][i]:
                        row[i * n + q] -= rk[p][i]
                rows.append(tuple(row))
    for i in range(n):
        for j in range(i + 1, n):
            row = [0] * (n * n)
            row[i * n + j] = 1
            row[j * n + i] = -1
            rows.append(tuple(row))
    basis = kernel_basis(tuple(rows))
    return [Tensor2(n, tuple(tuple(v[i * n + j] for j in range(n)) for i in range(n)))
            for v in basis]


def is_symmetrized_invariant(inst: YbeInstance, r: Tensor2) -> CheckReport:
    """Whether the extended symmetrizer of r is an invariant tensor."""
    rep = is_invariant(inst.algebra, extended_symmetrizer(inst, r))
    return CheckReport("symmetrized-invariant", rep.passed, witness=rep.witness)


def aybp_residual(a: Algebra, r: Tensor2, s: Tensor2) -> tuple[Tensor3, Tensor3]:
    """Residuals of the two coupled Yang-Baxter-pair equations

    r12 r13 - r23 r12 + r13 s23  and  r12 s13 - s23 s12 + s13 s23.
    """
    n = a.dim
    if r.dim != n or s.dim != n:
        raise DimensionMismatch("tensor dims do not match algebra dim")
    sc = a.sc

    def prod_12_13(x, y, sign, out):
        # x12 y13 -> (x_i y_k)(i e_k) (x) e_q (x) e_s
        for i in range(n):
            for k in range(n):
                v = sc[i][k]
                xi, yk = x[i], y[k]
                for p, vp in enumerate(v):
                    if not vp:
                        continue
                    op = out[p]
                    for q, xq in enumerate(xi):
                        if not xq:
                            continue
                        cc = sign * vp * xq
                        row = op[q]
                        for t, ys in enumerate(yk):
                            if ys:
                                row[t] += cc * ys

    def prod_23_12(x, y, sign, out):
        # x23 y12 -> e_p (x) (x_i y_l) (x) e_s
        for p in range(n):
            op = out[p]
            for i in range(n):
                xi_row = x[i]
                yp = y[p]
                for l, yl in enumerate(yp):
                    if not yl:
                        continue
                    v = sc[i][l]
                    for q, vq in enumerate(v):
                        if not vq:
                            continue
                        cc = sign * vq * yl
                        row = op[q]
                        for t, xs in enumerate(xi_row):
                            if xs:
                                row[t] += cc * xs

    def prod_13_23(x, y, sign, out):
        # x13 y23 -> e_p (x) e_q (x) (x_j y_l)
        for p in range(n):
            xp = x[p]
            op = out[p]
            for q in range(n):
                yq = y[q]
                row = op[q]
                for j, xj in enumerate(xp):
                    if not xj:
                        continue
                    for l, yl in enumerate(yq):
                        if not yl:
                            continue
                        cc = sign * xj * yl
                        for t, vs in enumerate(sc[j][l]):
                            if vs:
                                row[t] += cc * vs

    out1 = [[[0] * n for _ in range(n)] for _ in range(n)]
    prod_12_13(r.coeff, r.coeff, 1, out1)
    prod_23_12(r.coeff, r.coeff, -1, out1)
    prod_13_23(r.coeff, s.coeff, 1, out1)

    out2 = [[[0] * n for _ in range(n)] for _ in range(n)]
    prod_12_13(r.coeff, s.coeff, 1, out2)
    prod_23_12(s.coeff, s.coeff, -1, out2)
    prod_13_23(s.coeff, s.coeff, 1, out2)

    freeze = lambda o: Tensor3(n, tuple(tuple(tuple(rr) for rr in pl) for pl in o))
    return freeze(out1), freeze(out2)


def _grid_chunk(args):
    inst, values, n, start, stop = args
    out = []
    total_cells = n * n
    for index in range(start, stop):
        digits = []
        x = index
        for _ in range(total_cells):
            digits.append(values[x % len(values)])
            x //= len(values)
        digits.reverse()
        cand = Tensor2(n, tuple(tuple(digits[i * n + j] for j in range(n))
                                for i in range(n)))
        if nhacybe_residual(inst, cand).is_zero():
            out.append(cand)
    return out


def grid_enumerate(inst: YbeInstance, values, budget: int = 1 << 25,
                   jobs: int = 1) -> list[Tensor2]:
    """All solutions whose coefficients lie in `values`, in lexicographic
    order of the coefficient rows.  Deterministic; not a completeness proof
    for anything outside the grid."""
    n = inst.algebra.dim
    vals = sorted({exact(v) for v in values})
    if not vals:
        return []
    total = len(vals) ** (n * n)
    if total > budget:
        raise BudgetExceeded(f"{total} candidates exceed budget {budget}")
    if jobs <= 1 or total < 256:
        found = []
        for combo in iproduct(vals, repeat=n * n):
            cand = Tensor2(n, tuple(tuple(combo[i * n + j] for j in range(n))
                                    for i in range(n)))
            if nhacybe_residual(inst, cand).is_zero():
                found.append(cand)
        return found
    from concurrent.futures import ProcessPoolExecutor
    bounds = [total * k // jobs for k in range(jobs + 1)]
    chunks = [(inst, vals, n, bounds[k], bounds[k + 1]) for k in range(jobs)]
    found = []
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_grid_chunk, chunks):
            found.extend(part)
    return found
