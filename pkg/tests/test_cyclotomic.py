from __future__ import annotations

import cmath
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pointed_hopf.cyclotomic import (
    CycNum,
    cyclotomic_polynomial,
    multiplicative_order,
    qbinom,
    qbinom_factorial,
    qfactorial,
    qint,
    zeta,
)

CONDUCTORS = (1, 2, 3, 4, 5, 12)


def cyc(n: int):
    coeff = st.fractions(min_value=-5, max_value=5, max_denominator=4)
    return st.lists(coeff, min_size=1, max_size=2 * n).map(lambda cs: CycNum.from_poly(n, cs))


def field_elements():
    return st.sampled_from(CONDUCTORS).flatmap(lambda n: st.tuples(cyc(n), cyc(n), cyc(n)))


def close(x: CycNum, z: complex) -> bool:
    return abs(complex(x) - z) < 1e-9


@pytest.mark.parametrize(
    "n, poly",
    [(1, (-1, 1)), (2, (1, 1)), (3, (1, 1, 1)), (4, (1, 0, 1)), (12, (1, 0, -1, 0, 1))],
)
def test_cyclotomic_polynomials(n, poly):
    assert cyclotomic_polynomial(n) == poly


@settings(max_examples=150, deadline=None)
@given(field_elements())
def test_field_axioms(triple):
    a, b, c = triple
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a and a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a - a == 0 and a * 1 == a and a + 0 == a
    if a:
        assert a * a.inverse() == 1
        assert (b / a) * a == b


@settings(max_examples=60, deadline=None)
@given(field_elements())
def test_arithmetic_matches_complex_embedding(triple):
    a, b, _ = triple
    assert close(a * b, complex(a) * complex(b))
    assert close(a + b, complex(a) + complex(b))


@pytest.mark.parametrize("n", CONDUCTORS)
def test_roots_of_unity(n):
    z = zeta(n)
    assert z**n == 1
    assert multiplicative_order(z) == n
    assert sum((zeta(n, k) for k in range(n)), CycNum.rational(0, n)) == (1 if n == 1 else 0)
    assert close(z, cmath.exp(2j * cmath.pi / n))


def test_small_identities():
    assert zeta(4) ** 2 == -1
    assert zeta(3) + zeta(3, 2) == -1
    assert zeta(6) == -zeta(3, 2)
    assert multiplicative_order(-zeta(3)) == 6


def test_mixed_conductors_embed():
    assert zeta(3) * zeta(4) == zeta(12, 7)
    assert zeta(3).embed(12) == zeta(12, 4)
    assert zeta(12, 4).restrict(3) == zeta(3)
    with pytest.raises(ValueError):
        zeta(12).restrict(3)


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        CycNum.rational(0, 5).inverse()


def test_rational_and_json_roundtrip():
    x = (zeta(5) * Fraction(3, 7) - 2) / 3
    assert CycNum.from_json(x.to_json()) == x
    assert CycNum.rational(Fraction(1, 2), 4).to_fraction() == Fraction(1, 2)
    with pytest.raises(ValueError):
        zeta(3).to_fraction()


def test_qint_conventions():
    q = zeta(3)
    assert qint(0, q) == 0
    assert qint(1, q) == 1
    assert qint(3, q) == 0
    assert qint(4, 1) == 4
    assert qfactorial(0, q) == 1


@pytest.mark.parametrize("n", [3, 5, 7])
def test_qbinom_against_factorials(n):
    q = zeta(n)
    for m in range(9):
        for k in range(m + 1):
            try:
                ref = qbinom_factorial(m, k, q)
            except ZeroDivisionError:
                continue
            assert qbinom(m, k, q) == ref


def test_qbinom_vanishes_at_order():
    q = zeta(5)
    assert all(qbinom(5, k, q) == 0 for k in range(1, 5))
    assert qbinom_factorial(5, 2, q) == 0
    with pytest.raises(ZeroDivisionError):
        qbinom_factorial(6, 5, q)
