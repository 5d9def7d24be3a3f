"""Exact arithmetic in cyclotomic fields Q(zeta_n) and q-combinatorics.

A :class:`CycNum` is stored as an integer numerator vector in the power basis
``1, z, ..., z^(phi(n)-1)`` of ``Q[z]/Phi_n(z)`` together with one positive
common denominator.  Keeping a single denominator (instead of a vector of
``Fraction`` objects) makes the hot multiplication path pure integer work.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

Scalar = Union["CycNum", int, Fraction]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError("conductor must be positive")
    # x^n - 1 divided by Phi_d for every proper divisor d
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _exact_divide(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def _exact_divide(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for k in range(len(out) - 1, -1, -1):
        c, r = divmod(num[k + len(den) - 1], lead)
        if r:
            raise ArithmeticError("inexact polynomial division")
        out[k] = c
        for i, d in enumerate(den):
            num[k + i] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return out


class _Field:
    """Per-conductor lookup data: reductions of z^k modulo Phi_n."""

    __slots__ = ("n", "phi", "reduce", "zeta_powers", "_log")

    def __init__(self, n: int):
        self.n = n
        poly = cyclotomic_polynomial(n)
        self.phi = phi = len(poly) - 1
        top = max(2 * phi - 1, n)
        table: list[tuple[int, ...]] = []
        cur = [0] * phi
        cur[0] = 1
        for _ in range(top + 1):
            table.append(tuple(cur))
            # multiply by z and fold the overflow using Phi_n (monic)
            carry = cur[-1]
            cur = [0] + cur[:-1]
            if carry:
                for i in range(phi):
                    cur[i] -= carry * poly[i]
        self.reduce = table
        self.zeta_powers = table[:n]
        self._log = {v: k for k, v in enumerate(self.zeta_powers)}

    def log(self, num: tuple[int, ...]) -> int | None:
        return self._log.get(num)


@lru_cache(maxsize=None)
def _field(n: int) -> _Field:
    return _Field(n)


class CycNum:
    """An exact element of Q(zeta_n).

    Values of different conductors can be mixed; the result lives in the lcm
    conductor.  Hashing is only consistent between values of one conductor,
    which is how the rest of the package uses them (one ambient field per
    session).
    """

    __slots__ = ("n", "num", "den")

    def __init__(self, n: int, num: Iterable[int], den: int = 1):
        f = _field(n)
        num = tuple(num)
        if len(num) != f.phi:
            raise ValueError(f"expected {f.phi} coordinates for conductor {n}")
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num = tuple(-a for a in num)
            den = -den
        g = math.gcd(den, *num)
        if g != 1:
            num = tuple(a // g for a in num)
            den //= g
        self.n = n
        self.num = num
        self.den = den

    @classmethod
    def _raw(cls, n: int, num: tuple[int, ...], den: int) -> CycNum:
        obj = object.__new__(cls)
        obj.n = n
        obj.num = num
        obj.den = den
        return obj

    @classmethod
    def rational(cls, value: int | Fraction, n: int = 1) -> CycNum:
        value = Fraction(value)
        phi = _field(n).phi
        return cls._raw(n, (value.numerator,) + (0,) * (phi - 1), value.denominator)

    @classmethod
    def from_coefficients(cls, n: int, coeffs: Iterable[int | Fraction]) -> CycNum:
        """Build from power-basis coordinates (length phi(n))."""
        coeffs = [Fraction(c) for c in coeffs]
        den = math.lcm(*(c.denominator for c in coeffs)) if coeffs else 1
        return cls(n, (int(c * den) for c in coeffs), den)

    @classmethod
    def from_poly(cls, n: int, coeffs: Iterable[int | Fraction]) -> CycNum:
        """Reduce an arbitrary polynomial in z (lowest degree first) mod Phi_n."""
        f = _field(n)
        acc = CycNum.rational(0, n)
        for k, c in enumerate(coeffs):
            if c:
                acc = acc + CycNum._raw(n, f.reduce[k % n], 1) * c
        return acc

    # ----------------------------------------------------------------- access
    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(a, self.den) for a in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def __bool__(self) -> bool:
        return any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.num[0], self.den)

    def root_of_unity_exponent(self) -> int | None:
        """k with self == zeta_n^k, or None when self is not an n-th root of unity."""
        if self.den != 1:
            return None
        return _field(self.n).log(self.num)

    def embed(self, m: int) -> CycNum:
        """Lossless image in Q(zeta_m); requires n | m."""
        if m == self.n:
            return self
        if m % self.n:
            raise ValueError(f"conductor {self.n} does not divide {m}")
        step = m // self.n
        poly = [0] * (step * (len(self.num) - 1) + 1)
        for k, a in enumerate(self.num):
            poly[k * step] = a
        f = _field(m)
        acc = [0] * f.phi
        for k, a in enumerate(poly):
            if a:
                for i, r in enumerate(f.reduce[k]):
                    acc[i] += a * r
        return CycNum(m, acc, self.den)

    def restrict(self, m: int) -> CycNum:
        """Inverse of :meth:`embed`: the same value seen in Q(zeta_m), m | n."""
        if m == self.n:
            return self
        if self.n % m:
            raise ValueError(f"conductor {m} does not divide {self.n}")
        fm = _field(m)
        # solve by matching against the embedded power basis of Q(zeta_m)
        basis = [CycNum._raw(m, fm.reduce[k], 1).embed(self.n) for k in range(fm.phi)]
        from .linalg import solve_dense  # local: linalg imports this module

        rows = [[Fraction(b.num[i], b.den) for b in basis] for i in range(len(self.num))]
        rhs = [Fraction(a, self.den) for a in self.num]
        sol = solve_dense(rows, rhs)
        if sol is None:
            raise ValueError(f"{self} does not lie in Q(zeta_{m})")
        return CycNum.from_coefficients(m, sol)

    # ------------------------------------------------------------- arithmetic
    def _coerce(self, other: Scalar) -> tuple[CycNum, CycNum] | None:
        if isinstance(other, CycNum):
            if other.n == self.n:
                return self, other
            m = math.lcm(self.n, other.n)
            return self.embed(m), other.embed(m)
        if isinstance(other, (int, Fraction)):
            return self, CycNum.rational(other, self.n)
        return None

    def __add__(self, other: Scalar) -> CycNum:
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        if a.den == b.den:
            return CycNum(a.n, [x + y for x, y in zip(a.num, b.num)], a.den)
        return CycNum(a.n, [x * b.den + y * a.den for x, y in zip(a.num, b.num)], a.den * b.den)

    __radd__ = __add__

    def __neg__(self) -> CycNum:
        return CycNum._raw(self.n, tuple(-a for a in self.num), self.den)

    def __sub__(self, other: Scalar) -> CycNum:
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a + (-b)

    def __rsub__(self, other: Scalar) -> CycNum:
        return (-self) + other

    def __mul__(self, other: Scalar) -> CycNum:
        if isinstance(other, int):
            return CycNum(self.n, [a * other for a in self.num], self.den)
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        f = _field(a.n)
        phi = f.phi
        if phi == 1:
            return CycNum(a.n, (a.num[0] * b.num[0],), a.den * b.den)
        conv = [0] * (2 * phi - 1)
        for i, x in enumerate(a.num):
            if x:
                for j, y in enumerate(b.num):
                    if y:
                        conv[i + j] += x * y
        out = list(conv[:phi])
        red = f.reduce
        for k in range(phi, 2 * phi - 1):
            c = conv[k]
            if c:
                for i, r in enumerate(red[k]):
                    if r:
                        out[i] += c * r
        return CycNum(a.n, out, a.den * b.den)

    __rmul__ = __mul__

    def inverse(self) -> CycNum:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_n)")
        f = _field(self.n)
        if f.phi == 1:
            return CycNum(self.n, (self.den,), self.num[0])
        k = self.root_of_unity_exponent()
        if k is not None:
            return CycNum._raw(self.n, f.zeta_powers[(-k) % self.n], 1)
        from .linalg import solve_dense

        # columns: coordinates of self * z^j
        cols = []
        for j in range(f.phi):
            e = CycNum._raw(self.n, f.reduce[j], 1) * self
            cols.append([Fraction(a, e.den) for a in e.num])
        rows = [[cols[j][i] for j in range(f.phi)] for i in range(f.phi)]
        rhs = [Fraction(1)] + [Fraction(0)] * (f.phi - 1)
        sol = solve_dense(rows, rhs)
        return CycNum.from_coefficients(self.n, sol)

    def __truediv__(self, other: Scalar) -> CycNum:
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a * b.inverse()

    def __rtruediv__(self, other: Scalar) -> CycNum:
        return self.inverse() * other

    def __pow__(self, e: int) -> CycNum:
        if e < 0:
            return self.inverse() ** (-e)
        k = self.root_of_unity_exponent()
        if k is not None:
            return CycNum._raw(self.n, _field(self.n).zeta_powers[(k * e) % self.n], 1)
        result = CycNum.rational(1, self.n)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # ------------------------------------------------------------- comparison
    def __eq__(self, other: object) -> bool:
        if isinstance(other, CycNum):
            if other.n == self.n:
                return self.num == other.num and self.den == other.den
            m = math.lcm(self.n, other.n)
            a, b = self.embed(m), other.embed(m)
            return a.num == b.num and a.den == b.den
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self.num[0], self.den) == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(Fraction(self.num[0], self.den))
        return hash((self.n, self.num, self.den))

    # -------------------------------------------------------------- rendering
    def __complex__(self) -> complex:
        z = cmath.exp(2j * math.pi / self.n)
        return sum(a * z**k for k, a in enumerate(self.num)) / self.den

    def __repr__(self) -> str:
        return f"CycNum({self.n}, {self.num}, {self.den})"

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coefficients):
            if not c:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if k == 0:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        body = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        return body if self.n <= 2 or self.is_rational() else f"{body} (zeta {self.n})"

    def to_json(self) -> dict:
        coeffs = self.coefficients
        return {
            "conductor": self.n,
            "numerators": [c.numerator for c in coeffs],
            "denominators": [c.denominator for c in coeffs],
        }

    @classmethod
    def from_json(cls, data: dict) -> CycNum:
        coeffs = [Fraction(a, b) for a, b in zip(data["numerators"], data["denominators"])]
        return cls.from_coefficients(int(data["conductor"]), coeffs)


def zeta(n: int, k: int = 1) -> CycNum:
    """zeta_n^k as an element of Q(zeta_n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    f = _field(n)
    return CycNum._raw(n, f.zeta_powers[k % n], 1)


def one(n: int = 1) -> CycNum:
    return CycNum.rational(1, n)


def zero(n: int = 1) -> CycNum:
    return CycNum.rational(0, n)


def multiplicative_order(x: CycNum) -> int | None:
    """Order of x if it is a root of unity of the ambient conductor (else None)."""
    k = x.root_of_unity_exponent()
    if k is None:
        # -zeta can fall outside the n-th roots when n is odd
        k2 = (-x).root_of_unity_exponent()
        if k2 is None:
            return None
        m = 2 * x.n
        return m // math.gcd(m, 2 * k2 + x.n)
    return x.n // math.gcd(x.n, k)


# --------------------------------------------------------------- q-numbers

def _as_cyc(q: Scalar) -> CycNum:
    return q if isinstance(q, CycNum) else CycNum.rational(q)


def qint(n: int, q: Scalar) -> CycNum:
    """(n)_q = 1 + q + ... + q^(n-1); the empty sum (0)_q is 0."""
    q = _as_cyc(q)
    if q.is_zero():
        raise ValueError("q must be nonzero")
    if n < 0:
        raise ValueError("n must be nonnegative")
    acc = zero(q.n)
    p = one(q.n)
    for _ in range(n):
        acc = acc + p
        p = p * q
    return acc


def qfactorial(n: int, q: Scalar) -> CycNum:
    """(n)_q! = (1)_q ... (n)_q with (0)_q! = 1."""
    q = _as_cyc(q)
    acc = one(q.n)
    for k in range(1, n + 1):
        acc = acc * qint(k, q)
    return acc


def qbinom(n: int, k: int, q: Scalar) -> CycNum:
    """Gaussian binomial via the Pascal recursion; defined at every root of unity."""
    q = _as_cyc(q)
    if q.is_zero():
        raise ValueError("q must be nonzero")
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    row = [one(q.n)]
    for m in range(1, n + 1):
        # [m, j] = [m-1, j-1] + q^j [m-1, j]
        new = [one(q.n)]
        for j in range(1, m):
            new.append(row[j - 1] + q**j * row[j])
        new.append(one(q.n))
        row = new
    return row[k]


def qbinom_factorial(n: int, k: int, q: Scalar) -> CycNum:
    """Gaussian binomial from the factorial quotient.

    Raises ZeroDivisionError when a q-factorial in the denominator vanishes,
    which happens at roots of unity of order <= max(k, n - k).
    """
    q = _as_cyc(q)
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    den = qfactorial(k, q) * qfactorial(n - k, q)
    if den.is_zero():
        raise ZeroDivisionError(f"({k})_q!({n - k})_q! vanishes at q = {q}")
    return qfactorial(n, q) / den
