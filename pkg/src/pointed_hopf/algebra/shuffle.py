"""The Nichols algebra B(V) of a diagonal braiding, realized inside the
quantum shuffle algebra.

The braiding is c(x_i ⊗ x_j) = q_ij x_j ⊗ x_i with q_ij = chi_j(g_i).  The
algebra map T(V) -> T^c(V) fixing the letters has B(V) as image, so two
noncommutative polynomials agree in B(V) exactly when their shuffle images
agree.  PBW monomials in the root vectors are certified to be a basis by a
rank computation in every degree up to one past the top degree.
"""

from __future__ import annotations

import itertools
import math
from typing import Iterable, Mapping

from ..abelian import pair_exponent
from ..cartan import CartanDatum
from ..cyclotomic import CycNum, zeta
from ..linalg import Echelon, add_into

Word = tuple[int, ...]
Poly = dict  # Word -> CycNum


class CompletionError(ArithmeticError):
    """The PBW candidates failed to form a basis of B(V)."""


def poly_mul(a: Mapping, b: Mapping) -> Poly:
    out: Poly = {}
    for w1, c1 in a.items():
        for w2, c2 in b.items():
            add_into(out, {w1 + w2: c1 * c2})
    return out


def root_vector_polys(datum: CartanDatum) -> list[Poly]:
    """y_k as polynomials in the x_i, following the splitting plan.

    y_k = ad_c(y_k2)(y_k1) = y_k2 y_k1 - chi_{beta_k1}(g_{beta_k2}) y_k1 y_k2.
    """
    roots = datum.roots
    system = roots.system
    one = CycNum.rational(1, datum.conductor)
    polys: list[Poly | None] = [None] * roots.p
    for i, k in enumerate(system.simple_positions):
        polys[k] = {(i,): one}
    for k in sorted(system.splitting_plan, key=lambda k: system.heights[k]):
        k1, k2 = system.splitting_plan[k]
        c = datum_pair(datum, roots.chi[k1], roots.g[k2])
        polys[k] = add_into(poly_mul(polys[k2], polys[k1]), poly_mul(polys[k1], polys[k2]), -c)
    return polys


def datum_pair(datum: CartanDatum, chi, g) -> CycNum:
    return zeta(datum.conductor, pair_exponent(datum.group, chi.exps, g.exps))


def word_degree(word: Word, theta: int) -> tuple[int, ...]:
    d = [0] * theta
    for i in word:
        d[i] += 1
    return tuple(d)


def words_of_degree(deg: tuple[int, ...]) -> Iterable[Word]:
    """All words with letter multiplicities deg (multiset permutations)."""
    letters = [i for i, m in enumerate(deg) for _ in range(m)]
    n = len(letters)
    if n == 0:
        yield ()
        return
    counts = list(deg)
    word = [0] * n

    def rec(pos):
        if pos == n:
            yield tuple(word)
            return
        for i, c in enumerate(counts):
            if c:
                counts[i] -= 1
                word[pos] = i
                yield from rec(pos + 1)
                counts[i] += 1

    yield from rec(0)


def multinomial(deg: Iterable[int]) -> int:
    deg = list(deg)
    out = math.factorial(sum(deg))
    for m in deg:
        out //= math.factorial(m)
    return out


class NicholsAlgebra:
    """B(V) with PBW basis y_1^{u_1}...y_p^{u_p}, 0 <= u_k < N_{beta_k}."""

    def __init__(self, datum: CartanDatum, spanning_check: bool = True, word_cap: int = 50000):
        self.datum = datum
        self.theta = datum.theta
        self.n = datum.conductor
        self._zeta = [zeta(self.n, k) for k in range(self.n)]
        self.qexp = [
            [pair_exponent(datum.group, datum.chi[j].exps, datum.g[i].exps) for j in range(self.theta)]
            for i in range(self.theta)
        ]
        roots = datum.roots
        self.p = roots.p
        self.N = roots.N
        self.root_polys = root_vector_polys(datum)
        self.words: list[tuple[int, ...]] = list(itertools.product(*(range(n) for n in self.N)))
        self.index = {u: k for k, u in enumerate(self.words)}
        self._deg = [self._degree(u) for u in self.words]
        self.by_degree: dict[tuple[int, ...], list[int]] = {}
        for k, d in enumerate(self._deg):
            self.by_degree.setdefault(d, []).append(k)
        self.top_height = sum((n - 1) * h for n, h in zip(self.N, roots.system.heights))
        self._omega: dict[Word, Poly] = {(): {(): CycNum.rational(1, self.n)}}
        self._polys: dict[int, Poly] = {}
        self._echelons: dict[tuple[int, ...], Echelon] = {}
        self._products: dict[tuple[int, int], dict] = {}
        for d in self.by_degree:
            self._echelon(d)
        self.spanning_verified = False
        if spanning_check:
            self.spanning_verified = self.verify_spanning(word_cap)

    # ------------------------------------------------------------ bookkeeping
    def _degree(self, u: tuple[int, ...]) -> tuple[int, ...]:
        roots = self.datum.roots.roots
        d = [0] * self.theta
        for k, e in enumerate(u):
            if e:
                for i in range(self.theta):
                    d[i] += e * roots[k][i]
        return tuple(d)

    def degree(self, k: int) -> tuple[int, ...]:
        return self._deg[k]

    @property
    def dim(self) -> int:
        return len(self.words)

    def pbw_poly(self, k: int) -> Poly:
        poly = self._polys.get(k)
        if poly is None:
            u = self.words[k]
            poly = {(): CycNum.rational(1, self.n)}
            for r, e in enumerate(u):
                for _ in range(e):
                    poly = poly_mul(poly, self.root_polys[r])
            self._polys[k] = poly
        return poly

    # ---------------------------------------------------------- shuffle image
    def omega(self, word: Word) -> Poly:
        """Shuffle image of a word: Ω(x_i w) = x_i ⧢ Ω(w)."""
        r = self._omega.get(word)
        if r is not None:
            return r
        i = word[0]
        rest = self.omega(word[1:])
        q = self.qexp[i]
        out: Poly = {}
        for w, c in rest.items():
            e = 0
            for pos in range(len(w) + 1):
                nw = w[:pos] + (i,) + w[pos:]
                t = c * self._zeta[e] if e else c
                cur = out.get(nw)
                out[nw] = t if cur is None else cur + t
                if pos < len(w):
                    e = (e + q[w[pos]]) % self.n
        out = {w: c for w, c in out.items() if c}
        self._omega[word] = out
        return out

    def image(self, poly: Mapping) -> Poly:
        acc: Poly = {}
        for w, c in poly.items():
            add_into(acc, self.omega(w), c)
        return acc

    def _echelon(self, d: tuple[int, ...]) -> Echelon:
        ech = self._echelons.get(d)
        if ech is None:
            ech = Echelon(track=True)
            for k in self.by_degree.get(d, []):
                if not ech.insert(self.image(self.pbw_poly(k)), label=k):
                    raise CompletionError(
                        f"PBW monomial {self.words[k]} is dependent on earlier monomials in degree {d}"
                    )
            self._echelons[d] = ech
        return ech

    def verify_spanning(self, word_cap: int = 50000) -> bool:
        """Rank of all words equals the PBW count in each degree of height <= top+1.

        Returns False when the word count exceeds the cap (check skipped);
        raises CompletionError on a genuine mismatch.
        """
        degrees = [
            d
            for h in range(self.top_height + 2)
            for d in _compositions(h, self.theta)
        ]
        if sum(multinomial(d) for d in degrees) > word_cap:
            return False
        for d in degrees:
            expected = len(self.by_degree.get(d, []))
            ech = Echelon()
            for w in words_of_degree(d):
                ech.insert(self.omega(w))
            if ech.rank != expected:
                raise CompletionError(
                    f"degree {d}: B(V) has dimension {ech.rank} but there are {expected} PBW monomials"
                )
        return True

    # ------------------------------------------------------------ normal form
    def express(self, vec: Mapping, d: tuple[int, ...]) -> dict[int, CycNum]:
        if not vec:
            return {}
        if d not in self.by_degree:
            raise CompletionError(f"nonzero shuffle image in degree {d}, which has no PBW monomials")
        coeffs = self._echelons[d].express(vec)
        if coeffs is None:
            raise CompletionError(f"shuffle image in degree {d} is outside the PBW span")
        return coeffs

    def normal_form(self, poly: Mapping) -> dict[int, CycNum]:
        """PBW coordinates of a noncommutative polynomial in the x_i."""
        parts: dict[tuple[int, ...], Poly] = {}
        for w, c in poly.items():
            d = word_degree(w, self.theta)
            add_into(parts.setdefault(d, {}), self.omega(w), c)
        out: dict[int, CycNum] = {}
        for d, vec in parts.items():
            add_into(out, self.express(vec, d))
        return out

    def product(self, a: int, b: int) -> dict[int, CycNum]:
        key = (a, b)
        r = self._products.get(key)
        if r is None:
            if a == 0:
                r = {b: CycNum.rational(1, self.n)}
            elif b == 0:
                r = {a: CycNum.rational(1, self.n)}
            else:
                poly = poly_mul(self.pbw_poly(a), self.pbw_poly(b))
                d = tuple(x + y for x, y in zip(self._deg[a], self._deg[b]))
                r = self.express(self.image(poly), d) if d in self.by_degree else {}
                if d not in self.by_degree and self.image(poly):
                    raise CompletionError(f"product of PBW monomials {a}, {b} survives in empty degree {d}")
            self._products[key] = r
        return r


def _compositions(total: int, parts: int) -> Iterable[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest
