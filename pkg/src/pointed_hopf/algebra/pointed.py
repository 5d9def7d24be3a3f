"""A = u(D,0,0) = B(V) # kG on the basis y_u g."""

from __future__ import annotations

import math
from typing import Mapping, Sequence

from ..abelian import GroupElement, enumerate_group, pair_exponent
from ..cartan import CartanDatum
from ..cyclotomic import CycNum, zeta
from ..linalg import add_into, scale, vec_equal
from .axioms import Report
from .shuffle import NicholsAlgebra, Poly, word_degree
from .tables import Elem, StructureTables, Tensor


class PointedHopfAlgebra(StructureTables):
    """Basis index = pbw_index * |G| + group_index, both lexicographic."""

    def __init__(self, datum: CartanDatum, spanning_check: bool = True, word_cap: int = 50000):
        self.datum = datum
        self.R = NicholsAlgebra(datum, spanning_check=spanning_check, word_cap=word_cap)
        self.group = datum.group
        self.elements = enumerate_group(datum.group)
        self.order = len(self.elements)
        super().__init__(self.R.dim * self.order, datum.conductor)
        n = self.n = datum.conductor
        self._zeta = [zeta(n, k) for k in range(n)]
        self._one = CycNum.rational(1, n)
        inv = self.group.invariants
        self._gexps = [g.exps for g in self.elements]
        self._gmul = [
            [self.group.index(tuple((a + b) % m for a, b, m in zip(x, y, inv))) for y in self._gexps]
            for x in self._gexps
        ]
        self._ginv = [self.group.index(tuple(-a for a in x)) for x in self._gexps]
        # character of each PBW monomial: chi^{deg}
        self._uchar = []
        for k in range(self.R.dim):
            d = self.R.degree(k)
            c = [0] * self.group.rank
            for i, e in enumerate(d):
                for j, x in enumerate(datum.chi[i].exps):
                    c[j] += e * x
            self._uchar.append(tuple(c))
        self._uchar_on_g = [
            [pair_exponent(self.group, c, g) for g in self._gexps] for c in self._uchar
        ]
        self._delta_y: dict[int, Tensor] = {}
        self._s_y: dict[int, Elem] = {}
        self._sinv_y: dict[int, Elem] = {}
        self.x_positions = [self.R.index[_unit_vec(self.R.p, k)] for k in datum.roots.system.simple_positions]

    # ------------------------------------------------------------- indexing
    def split(self, idx: int) -> tuple[int, int]:
        return divmod(idx, self.order)

    def join(self, u: int, g: int) -> int:
        return u * self.order + g

    def degree(self, idx: int) -> tuple[int, ...]:
        return self.R.degree(idx // self.order)

    def label(self, idx: int) -> str:
        u, g = self.split(idx)
        word = self.R.words[u]
        parts = [f"y{k + 1}" + (f"^{e}" if e > 1 else "") for k, e in enumerate(word) if e]
        gx = self._gexps[g]
        if any(gx) or not parts:
            parts.append("g" + "".join(f"{x}" for x in gx) if gx else "1")
        return "*".join(parts)

    # -------------------------------------------------------------- elements
    def grp(self, g: GroupElement | Sequence[int]) -> Elem:
        exps = g.exps if isinstance(g, GroupElement) else tuple(g)
        return {self.group.index(exps): self._one}

    def x(self, i: int) -> Elem:
        return {self.join(self.x_positions[i], 0): self._one}

    def y(self, k: int) -> Elem:
        return {self.join(self.R.index[_unit_vec(self.R.p, k)], 0): self._one}

    def pbw(self, u: Sequence[int], g: Sequence[int] | None = None) -> Elem:
        gi = 0 if g is None else self.group.index(tuple(g))
        return {self.join(self.R.index[tuple(u)], gi): self._one}

    def top_word(self) -> Elem:
        """prod_k y_k^{N_k - 1}."""
        return self.pbw([n - 1 for n in self.R.N])

    def group_integral(self) -> Elem:
        c = CycNum.rational(1, self.n) / self.order
        return {gi: c for gi in range(self.order)}

    # ------------------------------------------------------ basis primitives
    def unit(self) -> Elem:
        return {0: self._one}

    def _mult(self, i: int, j: int) -> Elem:
        u, g = divmod(i, self.order)
        v, h = divmod(j, self.order)
        gh = self._gmul[g][h]
        e = self._uchar_on_g[v][g]
        prod = self.R.product(u, v)
        out = {}
        z = self._zeta[e]
        for w, c in prod.items():
            out[w * self.order + gh] = c * z if e else c
        return out

    def _counit(self, i: int) -> CycNum:
        return self._one if i < self.order else CycNum.rational(0, self.n)

    def _shift(self, t: Mapping, g: int, side: str = "right") -> dict:
        """Multiply every tensor factor by the grouplike g on the right."""
        out = {}
        for key, c in t.items():
            nk = []
            coef = c
            for k in key:
                r = self.mult_basis(k, g)
                ((idx, s),) = r.items()
                nk.append(idx)
                coef = coef * s
            out[tuple(nk)] = coef
        return out

    def _comult(self, i: int) -> Tensor:
        u, g = divmod(i, self.order)
        return self._shift(self._delta_pbw(u), g)

    def _delta_pbw(self, u: int) -> Tensor:
        r = self._delta_y.get(u)
        if r is not None:
            return r
        word = self.R.words[u]
        if not any(word):
            r = {(0, 0): self._one}
        else:
            k = max(t for t, e in enumerate(word) if e)
            prev = list(word)
            prev[k] -= 1
            r = self.tensor_multiply(self._delta_pbw(self.R.index[tuple(prev)]), self._delta_root(k))
        self._delta_y[u] = r
        return r

    def _delta_root(self, k: int) -> Tensor:
        key = -1 - k
        r = self._delta_y.get(key)
        if r is None:
            r = {}
            for w, c in self.R.root_polys[k].items():
                t: Tensor = {(0, 0): c}
                for i in w:
                    t = self.tensor_multiply(t, self._delta_x(i))
                add_into(r, t)
            self._delta_y[key] = r
        return r

    def _delta_x(self, i: int) -> Tensor:
        xi = self.join(self.x_positions[i], 0)
        gi = self.group.index(self.datum.g[i].exps)
        return {(xi, 0): self._one, (gi, xi): self._one}

    def _antipode(self, i: int) -> Elem:
        u, g = divmod(i, self.order)
        return self.multiply({self._ginv[g]: self._one}, self._antipode_pbw(u, inverse=False))

    def _antipode_inv(self, i: int) -> Elem:
        u, g = divmod(i, self.order)
        return self.multiply({self._ginv[g]: self._one}, self._antipode_pbw(u, inverse=True))

    def _antipode_pbw(self, u: int, inverse: bool) -> Elem:
        memo = self._sinv_y if inverse else self._s_y
        r = memo.get(u)
        if r is not None:
            return r
        word = self.R.words[u]
        if not any(word):
            r = self.one()
        else:
            k = max(t for t, e in enumerate(word) if e)
            prev = list(word)
            prev[k] -= 1
            r = self.multiply(self._antipode_root(k, inverse), self._antipode_pbw(self.R.index[tuple(prev)], inverse))
        memo[u] = r
        return r

    def _antipode_root(self, k: int, inverse: bool) -> Elem:
        memo = self._sinv_y if inverse else self._s_y
        key = -1 - k
        r = memo.get(key)
        if r is None:
            r = {}
            for w, c in self.R.root_polys[k].items():
                term = {0: c}
                # anti-multiplicative: S(x_w1 ... x_wn) = S(x_wn) ... S(x_w1)
                for i in w:
                    term = self.multiply(self._antipode_x(i, inverse), term)
                add_into(r, term)
            memo[key] = r
        return r

    def _antipode_x(self, i: int, inverse: bool) -> Elem:
        ginv = self.grp([-a for a in self.datum.g[i].exps])
        if inverse:
            return scale(self.multiply(self.x(i), ginv), -1)
        return scale(self.multiply(ginv, self.x(i)), -1)

    # ------------------------------------------------------------ operations
    def conjugate(self, g: GroupElement | Sequence[int], a: Mapping) -> Elem:
        """g a g^{-1}."""
        exps = g.exps if isinstance(g, GroupElement) else tuple(g)
        return self.product(self.grp(exps), a, self.grp([-e for e in exps]))

    def bidegree(self, a: Mapping) -> tuple[int, ...]:
        """Z^θ-degree of a homogeneous element with trivial group part."""
        degs = {self.degree(i) for i in a}
        if len(degs) != 1 or any(i % self.order for i in a):
            raise ValueError("element lacks bidegree data (not homogeneous in y_u with trivial group part)")
        return degs.pop()

    def grouplike_of_degree(self, d: Sequence[int]) -> GroupElement:
        g = self.group.identity()
        for i, e in enumerate(d):
            g = g * self.datum.g[i] ** e
        return g

    def braided_ad(self, x: Mapping, y: Mapping, g_x: GroupElement | None = None) -> Elem:
        """ad_c(x)(y) = x y - (g_x y g_x^{-1}) x."""
        if g_x is None:
            g_x = self.grouplike_of_degree(self.bidegree(x))
        return add_into(self.multiply(x, y), self.multiply(self.conjugate(g_x, y), x), -1)

    def normal_form(self, word: Sequence) -> Elem:
        """PBW expansion of a free word in the symbols 'x<i>' and grouplikes.

        Grouplikes may be GroupElement, ('g', exps) or 'g' + digits for the
        cyclic case.  Group parts are moved right with g x_i = chi_i(g) x_i g,
        then the x-word is reduced in the shuffle algebra.
        """
        letters: list[int] = []
        g = [0] * self.group.rank
        coef_exp = 0
        for tok in reversed(list(word)):
            kind, val = self._parse_token(tok)
            if kind == "g":
                # g (x-word) = chi_{word}(g) (x-word) g
                d = word_degree(tuple(letters), self.datum.theta)
                for i, e in enumerate(d):
                    coef_exp += e * pair_exponent(self.group, self.datum.chi[i].exps, val)
                g = [a + b for a, b in zip(val, g)]
            else:
                letters.insert(0, val)
        poly: Poly = {tuple(letters): self._zeta[coef_exp % self.n]}
        nf = self.R.normal_form(poly)
        gi = self.group.index(tuple(g))
        return {self.join(u, gi): c for u, c in nf.items()}

    def _parse_token(self, tok) -> tuple[str, object]:
        if isinstance(tok, GroupElement):
            return "g", tok.exps
        if isinstance(tok, tuple) and len(tok) == 2 and tok[0] == "g":
            return "g", tuple(self.group._reduce(tok[1]))
        if isinstance(tok, str):
            if tok.startswith("x") and tok[1:].isdigit():
                i = int(tok[1:]) - 1
                if 0 <= i < self.datum.theta:
                    return "x", i
            if tok.startswith("g") and tok[1:].isdigit() and self.group.rank == 1:
                return "g", (int(tok[1:]),)
            if tok == "g" and self.group.rank == 1:
                return "g", (1,)
        raise ValueError(f"unknown generator symbol {tok!r}")

    def grouplike_candidates(self) -> list[Elem]:
        return [{k: self._one} for k in range(self.order)]

    def generators(self) -> list[Elem]:
        """Algebra generators: group generators and the x_i."""
        gens = []
        for j in range(self.group.rank):
            gens.append(self.grp([1 if k == j else 0 for k in range(self.group.rank)]))
        gens += [self.x(i) for i in range(self.datum.theta)]
        return gens


def _unit_vec(p: int, k: int) -> tuple[int, ...]:
    return tuple(1 if t == k else 0 for t in range(p))


def build_algebra(datum: CartanDatum, spanning_check: bool = True, word_cap: int = 50000) -> PointedHopfAlgebra:
    return PointedHopfAlgebra(datum, spanning_check=spanning_check, word_cap=word_cap)


def verify_defining_relations(A: PointedHopfAlgebra) -> Report:
    """Dimension, group action, nilpotency, Serre relations and S² on the x_i."""
    d = A.datum
    rep = Report("defining relations of A")
    expected = d.group.order * math.prod(d.roots.N)
    rep.add("dim A = |G| ∏ N_β", A.dim == expected, f"{A.dim} vs {expected}")
    rep.add("PBW spanning verified", A.R.spanning_verified)
    for i in range(d.theta):
        n = i + 1
        ok = all(
            vec_equal(A.conjugate(g, A.x(i)), scale(A.x(i), A.scalar(zeta(A.n, pair_exponent(A.group, d.chi[i].exps, g.exps)))))
            for g in A.elements
        )
        rep.add(f"g x_{n} g^-1 = χ_{n}(g) x_{n}", ok, count=A.order)
        rep.add(f"x_{n}^{d.N[i]} = 0", not A.power(A.x(i), d.N[i]))
        q_inv = A.scalar(d.q(i, i)).inverse()
        rep.add(f"S²(x_{n}) = χ_{n}(g_{n})^-1 x_{n}", vec_equal(A.antipode(A.antipode(A.x(i))), scale(A.x(i), q_inv)))
        for j in range(d.theta):
            if i == j:
                continue
            m = 1 - d.cartan[i][j]
            z = A.x(j)
            for _ in range(m):
                z = A.braided_ad(A.x(i), z, d.g[i])
            rep.add(f"ad_c(x_{n})^{m}(x_{j + 1}) = 0", not z)
    for k, n in enumerate(d.roots.N):
        rep.add(f"y_{k + 1}^{n} = 0", not A.power(A.y(k), n))
    return rep
