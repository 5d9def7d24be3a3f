from __future__ import annotations

import random

import pytest

from pointed_hopf.algebra import build_algebra
from pointed_hopf.algebra.axioms import check_hopf_axioms
from pointed_hopf.cartan import group_algebra_datum, taft_datum
from pointed_hopf.cyclotomic import CycNum
from pointed_hopf.hopf import (
    DualAlgebra,
    biproduct_maps,
    grouplikes,
    identify_dual,
    integrals,
    is_grouplike,
    verify_dual_relations,
)
from pointed_hopf.linalg import vec_equal


def random_elem(H, rng, terms=3):
    return {rng.randrange(H.dim): CycNum.rational(rng.randint(-3, 3) or 1, H.conductor) for _ in range(terms)}


def test_dual_product_is_transpose_of_coproduct(taft3, taft3_dual):
    A, Ad = taft3, taft3_dual
    rng = random.Random(1)
    for _ in range(30):
        f, g, a = random_elem(Ad, rng), random_elem(Ad, rng), random_elem(A, rng)
        lhs = Ad.evaluate(Ad.multiply(f, g), a)
        rhs = sum((c * Ad.evaluate(f, A.basis(i)) * Ad.evaluate(g, A.basis(j))
                   for (i, j), c in A.comultiply(a).items()), CycNum.rational(0, 3))
        assert lhs == rhs


def test_dual_unit_and_counit(taft3, taft3_dual):
    for k in range(taft3.dim):
        assert taft3_dual.evaluate(taft3_dual.one(), taft3.basis(k)) == taft3.counit_basis(k)


def test_dual_hopf_axioms(taft3_dual):
    assert check_hopf_axioms(taft3_dual, "full-basis").passed


@pytest.mark.parametrize("N", [2, 3, 4])
def test_dual_of_taft(N):
    A = build_algebra(taft_datum(N))
    Ad = DualAlgebra(A)
    assert verify_dual_relations(Ad).passed
    ident = identify_dual(Ad, full_coalgebra=True)
    assert ident.report.passed, ident.report.text()
    assert len(grouplikes(Ad)) == N


def test_dual_of_a2(a2_dual):
    assert verify_dual_relations(a2_dual).passed
    ident = identify_dual(a2_dual)
    assert ident.report.passed, ident.report.text()
    assert ident.B.dim == 243
    assert len(grouplikes(a2_dual)) == 9


def test_grouplikes_of_a(taft3, a2):
    assert len(grouplikes(taft3)) == 3
    assert len(grouplikes(a2)) == 9
    assert not is_grouplike(taft3, taft3.x(0))


def test_grouplike_full_search_agrees(taft3):
    assert len(grouplikes(taft3, full_search=True)) == 3


def test_taft3_integrals_full_basis(taft3, taft3_dual):
    ir = integrals(taft3, taft3_dual)
    assert ir.report.passed, ir.report.text()
    assert ir.gamma.exps == (1,)
    assert ir.g_dist.exps == (2,)
    assert set(ir.solution_dims.values()) == {1}
    A, t = taft3, ir.left_integral
    for k in range(A.dim):
        a = A.basis(k)
        assert vec_equal(A.multiply(a, t), {i: c * A.counit(a) for i, c in t.items() if c * A.counit(a)})


def test_a2_integrals_sampled(a2, a2_dual):
    ir = integrals(a2, a2_dual, random_checks=500)
    assert ir.report.passed, ir.report.text()
    assert ir.gamma.exps == (2, 0)
    assert ir.g_dist.exps == (1, 1)
    assert ir.predicted["solved gamma matches negative variant"]
    assert not ir.predicted["solved gamma matches positive variant"]


def test_group_algebra_is_unimodular():
    A = build_algebra(group_algebra_datum((3,)))
    ir = integrals(A)
    assert ir.gamma.is_identity() and ir.g_dist.is_identity()


@pytest.mark.parametrize("name", ["taft3", "a2"])
def test_biproduct_maps(name, request):
    A = request.getfixturevalue(name)
    rep = biproduct_maps(A).report
    assert rep.passed, rep.text()
