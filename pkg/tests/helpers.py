"""Shared fixtures-in-spirit for the test suite: catalog shortcuts and the
frozen example tensors the tests reuse."""

from ybekit import LinearMap, Tensor2, YbeInstance, t2_from_entries
from ybekit.catalog import catalog_algebra

ALL_NAMES = ("A1", "A2", "B1", "B2", "B3", "B4", "B5", "M2")

# A nonzero skew solution of the mu=0 equation on the 2x2 matrix algebra,
# found by exhaustive search over skew tensors with entries in {-1, 0, 1}:
# E12 (x) E11 - E11 (x) E12.
M2_SKEW = Tensor2(4, ((0, -1, 0, 0), (1, 0, 0, 0), (0, 0, 0, 0), (0, 0, 0, 0)))


def entry(name):
    return catalog_algebra(name)


def alg(name):
    return catalog_algebra(name).algebra


def inst(name, mu):
    return YbeInstance(alg(name), mu)


def a2_solution(idx, mu=1):
    return catalog_algebra("A2").families[idx - 1].tensor(mu)


def basis_tensor(name, i, j):
    a = alg(name)
    return t2_from_entries(a.dim, {(i, j): 1})


def zero_map(rows, cols=None, domain="primal"):
    cols = rows if cols is None else cols
    return LinearMap(tuple((0,) * cols for _ in range(rows)), domain)
