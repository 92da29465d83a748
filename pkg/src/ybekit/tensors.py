"""Dense order-2 and order-3 tensors with exact rational coefficients.

A Tensor2 stores coeff[i][j] for e_i (x) e_j, a Tensor3 stores coeff[i][j][k]
for e_i (x) e_j (x) e_k, over a fixed ambient dimension.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch
from .linalg import Mat, Scalar, exact, is_zero_mat, mat, transpose


@dataclass(frozen=True)
class Tensor2:
    dim: int
    coeff: Mat

    def __post_init__(self):
        c = mat(self.coeff)
        if len(c) != self.dim or any(len(r) != self.dim for r in c):
            raise DimensionMismatch(f"coeff is not {self.dim}x{self.dim}")
        object.__setattr__(self, "coeff", c)

    def flip(self) -> "Tensor2":
        return Tensor2(self.dim, transpose(self.coeff))

    def add(self, other: "Tensor2") -> "Tensor2":
        self._match(other)
        return Tensor2(self.dim, tuple(
            tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.coeff, other.coeff)))

    def sub(self, other: "Tensor2") -> "Tensor2":
        self._match(other)
        return Tensor2(self.dim, tuple(
            tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.coeff, other.coeff)))

    def scale(self, c: Scalar) -> "Tensor2":
        return Tensor2(self.dim, tuple(tuple(c * a for a in r) for r in self.coeff))

    def is_zero(self) -> bool:
        return is_zero_mat(self.coeff)

    def is_symmetric(self) -> bool:
        return self.coeff == transpose(self.coeff)

    def _match(self, other: "Tensor2"):
        if self.dim != other.dim:
            raise DimensionMismatch(f"tensor dims {self.dim} != {other.dim}")


def t2_zero(n: int) -> Tensor2:
    return Tensor2(n, ((0,) * n,) * n)


def t2_basis(n: int, i: int, j: int) -> Tensor2:
    """The tensor e_i (x) e_j."""
    return Tensor2(n, tuple(
        tuple(1 if (p, q) == (i, j) else 0 for q in range(n)) for p in range(n)))


def t2_from_entries(n: int, entries: dict) -> Tensor2:
    """Tensor2 from a sparse {(i, j): coefficient} mapping."""
    rows = [[0] * n for _ in range(n)]
    for (i, j), c in entries.items():
        rows[i][j] = exact(c)
    return Tensor2(n, tuple(tuple(r) for r in rows))


def outer(u, v) -> Tensor2:
    """The pure tensor u (x) v of two coordinate vectors."""
    if len(u) != len(v):
        raise DimensionMismatch("outer product needs equal lengths")
    return Tensor2(len(u), tuple(tuple(a * b for b in v) for a in u))


@dataclass(frozen=True)
class Tensor3:
    dim: int
    coeff: tuple

    def __post_init__(self):
        n = self.dim
        c = tuple(mat(plane) for plane in self.coeff)
        if len(c) != n or any(len(p) != n or any(len(r) != n for r in p) for p in c):
            raise DimensionMismatch(f"coeff is not {n}x{n}x{n}")
        object.__setattr__(self, "coeff", c)

    def add(self, other: "Tensor3") -> "Tensor3":
        self._match(other)
        return Tensor3(self.dim, tuple(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(p, q))
            for p, q in zip(self.coeff, other.coeff)))

    def sub(self, other: "Tensor3") -> "Tensor3":
        self._match(other)
        return Tensor3(self.dim, tuple(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(p, q))
            for p, q in zip(self.coeff, other.coeff)))

    def scale(self, c: Scalar) -> "Tensor3":
        return Tensor3(self.dim, tuple(
            tuple(tuple(c * a for a in r) for r in p) for p in self.coeff))

    def is_zero(self) -> bool:
        return all(a == 0 for p in self.coeff for r in p for a in r)

    def swap_outer(self) -> "Tensor3":
        """Exchange the first and third tensor slots."""
        n = self.dim
        return Tensor3(n, tuple(
            tuple(tuple(self.coeff[s][q][p] for s in range(n)) for q in range(n))
            for p in range(n)))

    def first_nonzero(self):
        for p, plane in enumerate(self.coeff):
            for q, row in enumerate(plane):
                for s, a in enumerate(row):
                    if a != 0:
                        return (p, q, s, a)
        return None

    def _match(self, other: "Tensor3"):
        if self.dim != other.dim:
            raise DimensionMismatch(f"tensor dims {self.dim} != {other.dim}")


def t3_zero(n: int) -> Tensor3:
    return Tensor3(n, (((0,) * n,) * n,) * n)
