from __future__ import annotations

import random
import time

import pytest

from pointed_hopf.algebra import build_algebra
from pointed_hopf.cartan import taft_datum
from pointed_hopf.cyclotomic import zeta
from pointed_hopf.hopf import DualAlgebra
from pointed_hopf.identities import (
    FreeSmash,
    _closed_form,
    ad_power_formula,
    identity_suite,
    power_rule,
    q_binomial_theorem,
    q_identities,
    skew_primitivity,
)
from pointed_hopf.linalg import add_into, vec_equal


def test_q_identities():
    rep = q_identities(8, (3, 5, 7))
    assert rep.passed, rep.text()


@pytest.mark.parametrize("N", [1, 2, 3, 4])
def test_ad_power_taft(N):
    A = build_algebra(taft_datum(N + 1))
    rep = ad_power_formula(A, 4)
    assert rep.passed, rep.text()


def test_ad_power_a2(a2):
    rep = ad_power_formula(a2, 4)
    assert rep.passed, rep.text()


def test_closed_form_is_sensitive_to_mu(a2):
    # a wrong μ must break the formula, otherwise the check says nothing
    F = FreeSmash(a2.datum)
    d = a2.datum
    z = F.braided_ad(F.x(0), d.g[0].exps, F.x(1))
    q, mu = d.q(0, 0), d.q(0, 1)
    assert vec_equal(z, _closed_form(F, F.x(0), F.x(1), q, mu, 1))
    assert not vec_equal(z, _closed_form(F, F.x(0), F.x(1), q, mu * zeta(3), 1))


def test_free_smash_first_ad_by_hand(a2):
    F = FreeSmash(a2.datum)
    c = a2.datum.q(0, 1)
    expected = F.multiply(F.x(0), F.x(1))
    add_into(expected, F.multiply(F.x(1), F.x(0)), -c)
    assert vec_equal(F.braided_ad(F.x(0), a2.datum.g[0].exps, F.x(1)), expected)
    # the Serre element does not vanish in the free algebra
    z = F.braided_ad(F.x(0), a2.datum.g[0].exps, F.braided_ad(F.x(0), a2.datum.g[0].exps, F.x(1)))
    assert z


def test_free_smash_coproduct_is_multiplicative(a2):
    F = FreeSmash(a2.datum)
    rng = random.Random(2)
    letters = [F.x(0), F.x(1), F.grp([1, 0]), F.grp([0, 2])]
    for _ in range(20):
        a = F.product(*rng.choices(letters, k=rng.randint(1, 4)))
        b = F.product(*rng.choices(letters, k=rng.randint(1, 4)))
        assert vec_equal(F.comultiply(F.multiply(a, b)), F.tensor_multiply(F.comultiply(a), F.comultiply(b)))


@pytest.mark.parametrize("N", [3, 4, 5])
def test_skew_primitivity_taft(N):
    rep = skew_primitivity(taft_datum(N))
    assert rep.passed, rep.text()


def test_skew_primitivity_a2(a2):
    rep = skew_primitivity(a2.datum)
    assert rep.passed, rep.text()


@pytest.mark.parametrize("name", ["taft3", "a2"])
def test_power_rule(name, request):
    A = request.getfixturevalue(name)
    rep = power_rule(DualAlgebra(A))
    assert rep.passed, rep.text()


def test_q_binomial_theorem(taft3, a2):
    for A in (taft3, a2):
        assert q_binomial_theorem(A).passed


def test_suite_budget(taft3, a2):
    t0 = time.perf_counter()
    rep = identity_suite([taft3, a2])
    assert rep.passed, rep.text()
    assert time.perf_counter() - t0 < 30
