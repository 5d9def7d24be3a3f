"""Quantum binomial and braided-commutator identities, checked exactly.

Besides the built algebras, some identities are checked in the free smash
product T(V) # kG, where iterated braided commutators do not collapse to
zero and skew-primitivity is a genuine constraint.
"""

from __future__ import annotations

from typing import Mapping, Sequence

from .abelian import enumerate_characters, pair_exponent
from .algebra.axioms import Report
from .algebra.pointed import PointedHopfAlgebra
from .cartan import CartanDatum
from .cyclotomic import CycNum, qbinom, qbinom_factorial, qfactorial, qint, zeta
from .hopf import DualAlgebra
from .linalg import add_into, scale, vec_equal

Word = tuple[tuple[int, ...], tuple[int, ...]]  # (x-letters, group exponents)


class FreeSmash:
    """T(V) # kG with g x_i g^{-1} = χ_i(g) x_i and Δ(x_i) = x_i⊗1 + g_i⊗x_i."""

    def __init__(self, datum: CartanDatum):
        self.datum = datum
        self.group = datum.group
        self.n = datum.conductor
        self._zero = tuple(0 for _ in self.group.invariants)

    def _g(self, exps) -> tuple[int, ...]:
        return tuple(self.group._reduce(exps))

    def one(self) -> dict:
        return {((), self._zero): CycNum.rational(1, self.n)}

    def x(self, i: int) -> dict:
        return {((i,), self._zero): CycNum.rational(1, self.n)}

    def grp(self, exps: Sequence[int]) -> dict:
        return {((), self._g(exps)): CycNum.rational(1, self.n)}

    def _chi_exp(self, word: tuple[int, ...], g: tuple[int, ...]) -> int:
        return sum(pair_exponent(self.group, self.datum.chi[i].exps, g) for i in word)

    def _mult_words(self, u: Word, v: Word) -> tuple[Word, CycNum]:
        (w, g), (w2, h) = u, v
        c = zeta(self.n, self._chi_exp(w2, g) % self.n)
        return (w + w2, self._g([a + b for a, b in zip(g, h)])), c

    def multiply(self, a: Mapping, b: Mapping) -> dict:
        acc: dict = {}
        for u, x in a.items():
            for v, y in b.items():
                k, c = self._mult_words(u, v)
                add_into(acc, {k: x * y * c})
        return acc

    def product(self, *elems: Mapping) -> dict:
        acc = self.one()
        for e in elems:
            acc = self.multiply(acc, e)
        return acc

    def power(self, a: Mapping, n: int) -> dict:
        return self.product(*([a] * n))

    def conjugate(self, g: Sequence[int], a: Mapping) -> dict:
        return self.product(self.grp(g), a, self.grp([-e for e in g]))

    def braided_ad(self, x: Mapping, g_x: Sequence[int], y: Mapping) -> dict:
        return add_into(self.multiply(x, y), self.multiply(self.conjugate(g_x, y), x), -1)

    def tensor_multiply(self, s: Mapping, t: Mapping) -> dict:
        acc: dict = {}
        for (a, b), x in s.items():
            for (c, d), y in t.items():
                k1, c1 = self._mult_words(a, c)
                k2, c2 = self._mult_words(b, d)
                add_into(acc, {(k1, k2): x * y * c1 * c2})
        return acc

    def comultiply(self, a: Mapping) -> dict:
        one = CycNum.rational(1, self.n)
        unit = ((), self._zero)
        acc: dict = {}
        for (w, g), c in a.items():
            t = {(unit, unit): c}
            for i in w:
                gi = ((), self._g(self.datum.g[i].exps))
                xi = ((i,), self._zero)
                t = self.tensor_multiply(t, {(xi, unit): one, (gi, xi): one})
            t = self.tensor_multiply(t, {(((), g), ((), g)): one})
            add_into(acc, t)
        return acc

    def outer(self, a: Mapping, b: Mapping) -> dict:
        return {(u, v): x * y for u, x in a.items() for v, y in b.items()}


# ------------------------------------------------------------ q-identities

def q_identities(n_max: int = 8, conductors: Sequence[int] = (3, 5, 7)) -> Report:
    rep = Report(f"q-binomial identities, n ≤ {n_max}")
    for m in conductors:
        q = zeta(m, 1)
        qi = q.inverse()
        tag = f"q = ζ_{m}"
        ok = all(
            qbinom(n, k, q) == qbinom(n - 1, k - 1, q) + q**k * qbinom(n - 1, k, q)
            for n in range(1, n_max + 1)
            for k in range(1, n)
        )
        rep.add(f"[n,k] = [n-1,k-1] + q^k [n-1,k] ({tag})", ok)
        ok = all(
            qbinom(N, i, q) + qbinom(N, i - 1, q) * q ** (N - i + 1) == qbinom(N + 1, i, q)
            for N in range(1, n_max)
            for i in range(1, N + 1)
        )
        rep.add(f"[N,i] + [N,i-1] q^(N-i+1) = [N+1,i] ({tag})", ok)
        ok = all(
            qbinom(n, k, qi) == qbinom(n, k, q) * q ** (k * (k - n))
            for n in range(n_max + 1)
            for k in range(n + 1)
        )
        rep.add(f"[n,k]_(q^-1) = [n,k]_q q^(k(k-n)) ({tag})", ok)
        ok = all(qint(n, qi) == q ** (-(n - 1)) * qint(n, q) for n in range(1, n_max + 1))
        rep.add(f"(n)_(q^-1) = q^-(n-1) (n)_q ({tag})", ok)
        ok = all(qfactorial(n, qi) == q ** (-(n * (n - 1) // 2)) * qfactorial(n, q) for n in range(n_max + 1))
        rep.add(f"(n)_(q^-1)! = q^(-n(n-1)/2) (n)_q! ({tag})", ok)
        agree = skipped = 0
        ok = True
        for n in range(n_max + 1):
            for k in range(n + 1):
                try:
                    v = qbinom_factorial(n, k, q)
                except ZeroDivisionError:
                    skipped += 1
                    continue
                agree += 1
                ok = ok and v == qbinom(n, k, q)
        rep.add(f"factorial quotient agrees with recursion where defined ({tag})", ok,
                f"{skipped} cases with vanishing denominator", agree)
    return rep


# ------------------------------------------------------------ ad-power formula

def _closed_form(alg, x, y, q: CycNum, mu: CycNum, N: int) -> dict:
    """Σ_i (-1)^i [N,i]_q q^(i(i-1)/2) μ^i x^(N-i) y x^i."""
    acc: dict = {}
    for i in range(N + 1):
        c = qbinom(N, i, q) * q ** (i * (i - 1) // 2) * mu**i * (-1) ** i
        add_into(acc, alg.product(alg.power(x, N - i), y, alg.power(x, i)), c)
    return acc


def ad_power_formula(A: PointedHopfAlgebra, N_max: int = 4, free: FreeSmash | None = None) -> Report:
    """ad(x_i)^N(x_j) against its closed form, in A and in T(V) # kG."""
    d = A.datum
    F = free if free is not None else FreeSmash(d)
    rep = Report(f"ad-power closed form, N ≤ {N_max} ({d.name or 'datum'})")
    for i in range(d.theta):
        q = A.scalar(d.q(i, i))
        gi = d.g[i].exps
        for j in range(d.theta):
            mu = A.scalar(d.q(i, j))
            za, zf = A.x(j), F.x(j)
            ok_a = ok_f = True
            for N in range(1, N_max + 1):
                za = A.braided_ad(A.x(i), za, d.g[i])
                zf = F.braided_ad(F.x(i), gi, zf)
                ok_a = ok_a and vec_equal(za, _closed_form(A, A.x(i), A.x(j), q, mu, N))
                ok_f = ok_f and vec_equal(zf, _closed_form(F, F.x(i), F.x(j), q, mu, N))
            rep.add(f"ad(x_{i + 1})^N(x_{j + 1}) in A", ok_a, count=N_max)
            rep.add(f"ad(x_{i + 1})^N(x_{j + 1}) in T(V)#kG", ok_f, count=N_max)
    return rep


def skew_primitivity(d: CartanDatum) -> Report:
    """If χ(b)μ(a) = χ(a)^(1-r) then z = ad(x)^r(y) has Δ(z) = z⊗1 + a^r b⊗z.

    Checked in T(V) # kG with x = x_i, y = x_j, where z is nonzero.  For
    i ≠ j, r = 1 - a_ij; for i = j, r = N_i - 1.
    """
    F = FreeSmash(d)
    rep = Report("skew-primitivity of ad(x)^r(y) in T(V)#kG")
    for i in range(d.theta):
        for j in range(d.theta):
            if i == j:
                r = d.N[i] - 1
            else:
                r = 1 - d.cartan[i][j]
            q = d.q(i, i)
            cond = (zeta(d.conductor, pair_exponent(d.group, d.chi[i].exps, d.g[j].exps))
                    * zeta(d.conductor, pair_exponent(d.group, d.chi[j].exps, d.g[i].exps)))
            holds = cond == q ** (1 - r)
            z = F.x(j)
            for _ in range(r):
                z = F.braided_ad(F.x(i), d.g[i].exps, z)
            grp = [r * a + b for a, b in zip(d.g[i].exps, d.g[j].exps)]
            rhs = F.outer(z, F.one())
            add_into(rhs, F.outer(F.grp(grp), z))
            ok = holds and bool(z) and vec_equal(F.comultiply(z), rhs)
            rep.add(f"(i,j) = ({i + 1},{j + 1}), r = {r}: hypothesis holds, z ≠ 0, Δ(z) = z⊗1 + a^r b⊗z", ok)
    return rep


# ------------------------------------------------------------ dual-side rules

def power_rule(Astar: DualAlgebra) -> Report:
    """(ξ_i χ)^n = χ(g_i)^(n(n-1)/2) ξ_i^n χ^n and χ ξ_i^s χ^-1 = χ(g_i)^s ξ_i^s in A*."""
    A = Astar.A
    d = A.datum
    rep = Report("power rule in A*")
    chars = enumerate_characters(d.group)
    for i in range(d.theta):
        N = d.N[i]
        xi = Astar.xi(i)
        ok_p = ok_c = True
        for chi in chars:
            c = Astar.character(chi)
            c_inv = Astar.character(chi.inverse())
            val = A.scalar(_pair(d, chi, d.g[i]))
            for n in range(N + 1):
                lhs = Astar.power(Astar.multiply(xi, c), n)
                rhs = Astar.multiply(Astar.power(xi, n), Astar.power(c, n))
                ok_p = ok_p and vec_equal(lhs, scale(rhs, val ** (n * (n - 1) // 2)))
                lhs = Astar.product(c, Astar.power(xi, n), c_inv)
                ok_c = ok_c and vec_equal(lhs, scale(Astar.power(xi, n), val**n))
        rep.add(f"(ξ_{i + 1}χ)^n = χ(g_{i + 1})^(n(n-1)/2) ξ_{i + 1}^n χ^n, n ≤ {N}, all χ", ok_p, count=len(chars) * (N + 1))
        rep.add(f"χ ξ_{i + 1}^s χ^-1 = χ(g_{i + 1})^s ξ_{i + 1}^s, s ≤ {N}, all χ", ok_c, count=len(chars) * (N + 1))
    return rep


def _pair(d: CartanDatum, chi, g) -> CycNum:
    return zeta(d.conductor, pair_exponent(d.group, chi.exps, g.exps))


def q_binomial_theorem(A: PointedHopfAlgebra) -> Report:
    """(a + b)^n = Σ [n,k]_q a^k b^(n-k) for a = x_i, b = g_i, since b a = q a b."""
    d = A.datum
    rep = Report("q-binomial theorem in A")
    for i in range(d.theta):
        a, b = A.x(i), A.grp(d.g[i])
        q = A.scalar(d.q(i, i))
        rep.add(f"g_{i + 1} x_{i + 1} = q x_{i + 1} g_{i + 1}", vec_equal(A.multiply(b, a), scale(A.multiply(a, b), q)))
        N = d.N[i]
        ok = True
        for n in range(N + 2):
            rhs: dict = {}
            for k in range(n + 1):
                add_into(rhs, A.multiply(A.power(a, k), A.power(b, n - k)), qbinom(n, k, q))
            ok = ok and vec_equal(A.power(A.add(a, b), n), rhs)
        rep.add(f"(x_{i + 1} + g_{i + 1})^n = Σ [n,k]_q x^k g^(n-k), n ≤ {N + 1}", ok)
    return rep


def identity_suite(algebras: Sequence[PointedHopfAlgebra], n_max: int = 8, N_max: int = 4) -> Report:
    rep = Report("identity suite")
    rep.extend(q_identities(n_max))
    for A in algebras:
        rep.extend(ad_power_formula(A, N_max))
        rep.extend(skew_primitivity(A.datum))
        rep.extend(q_binomial_theorem(A))
        rep.extend(power_rule(DualAlgebra(A)))
    return rep
