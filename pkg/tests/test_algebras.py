import pytest

from ybekit import (
    Augmentation,
    NotAssociative,
    adjoint_bimodule,
    algebra_from_products,
    check_algebra,
    check_augmentation,
    check_bimodule,
    dual_bimodule,
    dual_regular_bimodule,
    find_augmentations,
    identity,
    make_algebra,
    matrix_algebra,
    semidirect_product,
    unitization,
)
from ybekit.algebras import augmentation_kernel_basis, is_unital_bimodule
from ybekit.linalg import transpose, unit_vec

from helpers import ALL_NAMES, alg, entry


@pytest.mark.parametrize("name", ALL_NAMES)
def test_catalog_algebras_pass(name):
    assert check_algebra(alg(name)).passed


def test_one_dimensional_idempotent():
    a = make_algebra(1, (((1,),),), unit=(1,))
    assert check_algebra(a).passed


def test_bad_unit_detected():
    # e1 e1 = e2, e2 e2 = e1 with e1 declared as unit fails (it is not even
    # associative, so the first witness is an associativity triple)
    a = algebra_from_products(2, {(0, 0): {1: 1}, (1, 1): {0: 1}}, unit=(1, 0))
    assert not check_algebra(a).passed
    # associative table with the wrong unit: only the unit law breaks
    b = algebra_from_products(2, {(0, 0): {0: 1}, (1, 1): {1: 1}}, unit=(1, 0))
    rep = check_algebra(b)
    assert not rep.passed and rep.witness["kind"] == "unit"


def test_nonassociative_detected():
    a = algebra_from_products(2, {(0, 0): {1: 1}, (0, 1): {0: 1}})
    rep = check_algebra(a)
    assert not rep.passed and rep.witness["kind"] == "associativity"


def test_adjoint_matrices():
    a2 = alg("A2")
    adj = adjoint_bimodule(a2)
    assert adj.left[0] == ((1, 0), (0, 0))  # left action of e1 on A2
    a1 = alg("A1")
    r2 = adjoint_bimodule(a1).right[1]
    assert tuple(zip(*r2))[0] == (0, 1)  # e1 . e2 = e2
    assert tuple(zip(*r2))[1] == (0, 0)  # e2 . e2 = 0


@pytest.mark.parametrize("name", ALL_NAMES)
def test_unit_acts_as_identity(name):
    a = alg(name)
    adj = adjoint_bimodule(a)
    assert adj.lmat(a.unit) == identity(a.dim)
    assert adj.rmat(a.unit) == identity(a.dim)
    assert is_unital_bimodule(adj)


@pytest.mark.parametrize("name", ALL_NAMES)
def test_adjoint_and_dual_pass(name):
    adj = adjoint_bimodule(alg(name))
    assert check_bimodule(adj).passed
    dual = dual_bimodule(adj)
    assert check_bimodule(dual).passed
    # double dual restores the original action matrices
    dd = dual_bimodule(dual)
    assert dd.left == adj.left and dd.right == adj.right


def test_dual_of_b1_adjoint_is_transposed():
    adj = adjoint_bimodule(alg("B1"))
    dual = dual_bimodule(adj)
    assert dual.left[0] == transpose(adj.right[0])
    assert dual.right[0] == transpose(adj.left[0])


def _corrupt(bimodule, i, p, q, side="left"):
    tables = {"left": [list(map(list, m)) for m in bimodule.left],
              "right": [list(map(list, m)) for m in bimodule.right]}
    tables[side][i][p][q] += 1
    from ybekit import Bimodule
    return Bimodule(bimodule.algebra, bimodule.dim,
                    tuple(tuple(tuple(r) for r in m) for m in tables["left"]),
                    tuple(tuple(tuple(r) for r in m) for m in tables["right"]))


def test_corrupted_bimodule_fails():
    adj = adjoint_bimodule(alg("A2"))
    assert not check_bimodule(_corrupt(adj, 0, 0, 1)).passed


def test_semidirect_adjoint_passes():
    a2 = alg("A2")
    prod = semidirect_product(a2, adjoint_bimodule(a2))
    assert prod.dim == 4
    assert prod.unit == (1, 1, 0, 0)
    assert check_algebra(prod).passed


@pytest.mark.parametrize("name", ALL_NAMES)
def test_semidirect_dual_regular_passes(name):
    a = alg(name)
    prod = semidirect_product(a, dual_regular_bimodule(a))
    assert prod.unit is not None
    assert check_algebra(prod).passed


def test_semidirect_iff_bimodule():
    # corrupt entries one at a time: the product passes exactly when the
    # module does
    a2 = alg("A2")
    adj = adjoint_bimodule(a2)
    cases = [adj]
    for side in ("left", "right"):
        for i in range(2):
            for p in range(2):
                for q in range(2):
                    cases.append(_corrupt(adj, i, p, q, side))
    for v in cases:
        assert check_algebra(semidirect_product(a2, v)).passed \
            == check_bimodule(v).passed


def test_unitization_of_zero_line_is_a1():
    out, aug = unitization((((0,),),))
    a1 = alg("A1")
    assert out.sc == a1.sc and out.unit == a1.unit
    assert check_augmentation(out, aug).passed
    assert augmentation_kernel_basis(aug) == [(0, 1)]


def test_unitization_of_nothing_is_the_field():
    out, aug = unitization(())
    assert out.dim == 1 and out.sc == (((1,),),)
    assert check_augmentation(out, aug).passed


def test_unitization_rejects_nonassociative():
    # e1 e1 = e2, e1 e2 = e1: (e1 e1) e1 != e1 (e1 e1)
    with pytest.raises(NotAssociative):
        unitization((((0, 1), (1, 0)), ((0, 0), (0, 0))))


def test_augmentation_examples():
    a2 = alg("A2")
    assert check_augmentation(a2, Augmentation(a2, (1, 0))).passed
    rep = check_augmentation(a2, Augmentation(a2, (1, 1)))
    assert not rep.passed and rep.witness["kind"] == "multiplicative"
    b1 = alg("B1")
    assert check_augmentation(b1, Augmentation(b1, (0, 1, 0))).passed
    b4 = alg("B4")
    assert check_augmentation(b4, Augmentation(b4, (1, 0, 1))).passed


@pytest.mark.parametrize("name, count", [
    ("A1", 1), ("A2", 2), ("B1", 3), ("B2", 2), ("B3", 1), ("B4", 2),
    ("B5", 1), ("M2", 0),
])
def test_augmentation_grid_search(name, count):
    found = find_augmentations(alg(name))
    assert len(found) == count
    assert {tuple(a.eps) for a in found} \
        == {tuple(a.eps) for a in entry(name).augmentations}


def test_matrix_algebra():
    m1 = matrix_algebra(1)
    assert m1.dim == 1 and check_algebra(m1).passed
    m2 = matrix_algebra(2)
    assert check_algebra(m2).passed
    e12, e21 = unit_vec(4, 1), unit_vec(4, 2)
    assert m2.mul(e12, e21) == unit_vec(4, 0)  # E12 E21 = E11
    assert m2.mul(e21, e12) == unit_vec(4, 3)  # E21 E12 = E22
    assert m2.unit == (1, 0, 0, 1)
