"""The Drinfeld double D(A) = A*^coop ⋈ A.

Basis element e^k ⊗ b_j has index k * dim A + j.  Products are computed on
demand through the straightening rule

    a f = (a_1 ⇀ f ↼ S^{-1} a_3) a_2,   (a ⇀ f ↼ c)(b) = f(c b a),

and memoized.  Coproduct Δ(f ⊗ a) = (f_2 ⊗ a_1) ⊗ (f_1 ⊗ a_2), counit
f(1) ε(a), antipode S(f ⊗ a) = (ε ⊗ S a)(f∘S^{-1} ⊗ 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

from .abelian import Character, GroupElement, enumerate_characters, enumerate_group, pair
from .algebra.axioms import Report
from .algebra.pointed import PointedHopfAlgebra
from .algebra.tables import Elem, StructureTables, Tensor
from .cartan import double_datum
from .cyclotomic import CycNum
from .hopf import DualAlgebra
from .linalg import add_into, scale, vec_equal


class DrinfeldDouble(StructureTables):
    def __init__(self, A: PointedHopfAlgebra, Astar: DualAlgebra | None = None, max_dim: int = 1024):
        self.A = A
        self.Astar = Astar if Astar is not None else DualAlgebra(A)
        self.n = A.dim
        super().__init__(self.n * self.n, A.conductor)
        self.max_dim = max_dim
        self._pair_mats: dict[tuple[int, int], list[Elem]] = {}
        self._straight: dict[tuple[int, int], dict] = {}
        self._delta2: dict[int, dict] = {}
        self._eps_support = self.Astar.unit()
        self.datum = A.datum

    @property
    def tabulated(self) -> bool:
        return self.dim <= self.max_dim

    # -------------------------------------------------------------- indexing
    def idx(self, k: int, j: int) -> int:
        return k * self.n + j

    def split(self, i: int) -> tuple[int, int]:
        return divmod(i, self.n)

    def label(self, i: int) -> str:
        k, j = self.split(i)
        return f"{self.Astar.label(k)}⊗{self.A.label(j)}"

    def tensor(self, f: Mapping, a: Mapping) -> Elem:
        """f ⊗ a."""
        return {self.idx(k, j): x * y for k, x in f.items() for j, y in a.items()}

    def from_A(self, a: Mapping) -> Elem:
        return self.tensor(self._eps_support, a)

    def from_dual(self, f: Mapping) -> Elem:
        return self.tensor(f, self.A.unit())

    # ---------------------------------------------------------- straightening
    def _delta2_basis(self, j: int) -> dict:
        r = self._delta2.get(j)
        if r is None:
            t = self.A.comultiply_at(self.A.comult_basis(j), 0)
            r = {}
            for (a1, a2, a3), c in t.items():
                r.setdefault((a1, a3), []).append((a2, c))
            self._delta2[j] = r
        return r

    def _pair_matrix(self, a1: int, a3: int) -> list[Elem]:
        """Transposed matrix T[k][m] = [S^{-1}(b_a3) b_m b_a1]_k."""
        key = (a1, a3)
        r = self._pair_mats.get(key)
        if r is None:
            A = self.A
            left = A.antipode_inv_basis(a3)
            rows: dict[int, Elem] = {}
            for m in range(self.n):
                prod = A.multiply(A.multiply(left, A.basis(m)), A.basis(a1))
                for k, c in prod.items():
                    rows.setdefault(k, {})[m] = c
            r = self._pair_mats[key] = rows
        return r

    def straighten_basis(self, j: int, k: int) -> dict[tuple[int, int], CycNum]:
        """b_j e^k as Σ c (e^m ⊗ b_l), keys (m, l)."""
        key = (j, k)
        r = self._straight.get(key)
        if r is None:
            r = {}
            for (a1, a3), tails in self._delta2_basis(j).items():
                row = self._pair_matrix(a1, a3).get(k)
                if not row:
                    continue
                for a2, c in tails:
                    add_into(r, {(m, a2): c * v for m, v in row.items()})
            self._straight[key] = r
        return r

    def straighten(self, a: Mapping, f: Mapping) -> Elem:
        """The product (ε ⊗ a)(f ⊗ 1) rewritten in the basis e^m ⊗ b_l."""
        acc: Elem = {}
        for j, x in a.items():
            for k, y in f.items():
                c = x * y
                for (m, l), v in self.straighten_basis(j, k).items():
                    add_into(acc, {self.idx(m, l): c * v})
        return acc

    # --------------------------------------------------------- Hopf structure
    def unit(self) -> Elem:
        return self.from_A(self.A.unit())

    def _mult(self, I: int, J: int) -> Elem:
        k, j = divmod(I, self.n)
        k2, j2 = divmod(J, self.n)
        acc: Elem = {}
        Astar, A = self.Astar, self.A
        for (m, l), c in self.straighten_basis(j, k2).items():
            f = Astar.mult_basis(k, m)
            a = A.mult_basis(l, j2)
            for kk, x in f.items():
                for jj, y in a.items():
                    add_into(acc, {kk * self.n + jj: c * x * y})
        return acc

    def _comult(self, I: int) -> Tensor:
        k, j = divmod(I, self.n)
        out: Tensor = {}
        for (f1, f2), c in self.Astar.comult_basis(k).items():
            for (a1, a2), d in self.A.comult_basis(j).items():
                add_into(out, {(self.idx(f2, a1), self.idx(f1, a2)): c * d})
        return out

    def _counit(self, I: int) -> CycNum:
        k, j = divmod(I, self.n)
        return self.Astar.counit_basis(k) * self.A.counit_basis(j)

    def _antipode(self, I: int) -> Elem:
        k, j = divmod(I, self.n)
        left = self.from_A(self.A.antipode_basis(j))
        right = self.from_dual(self.Astar.antipode_inv_basis(k))
        return self.multiply(left, right)

    def _antipode_inv(self, I: int) -> Elem:
        k, j = divmod(I, self.n)
        left = self.from_dual(self.Astar.antipode_basis(k))
        right = self.from_A(self.A.antipode_inv_basis(j))
        return self.multiply(left, right)

    # ---------------------------------------------------------- named elements
    def x(self, i: int) -> Elem:
        return self.from_A(self.A.x(i))

    def g(self, g: GroupElement | Sequence[int]) -> Elem:
        return self.from_A(self.A.grp(g))

    def xi(self, i: int) -> Elem:
        return self.from_dual(self.Astar.xi(i))

    def chi(self, chi: Character | Sequence[int]) -> Elem:
        return self.from_dual(self.Astar.character(chi))

    def gchi(self, g, chi) -> Elem:
        """The grouplike χ g = χ ⊗ g."""
        return self.tensor(self.Astar.character(chi), self.A.grp(g))

    def generators(self) -> list[Elem]:
        rank = self.A.group.rank
        unit = [[1 if t == s else 0 for t in range(rank)] for s in range(rank)]
        gens = [self.g(e) for e in unit] + [self.chi(e) for e in unit]
        gens += [self.x(i) for i in range(self.datum.theta)]
        gens += [self.xi(i) for i in range(self.datum.theta)]
        return gens

    def grouplike_candidates(self) -> list[Elem]:
        return [self.gchi(g, c) for c in enumerate_characters(self.A.group) for g in enumerate_group(self.A.group)]


# ------------------------------------------------------------- relations

def _check(rep: Report, name: str, D: DrinfeldDouble, lhs: Mapping, rhs: Mapping, count: int = 0) -> bool:
    ok = vec_equal(lhs, rhs)
    detail = "" if ok else f"lhs = {D.element_str(lhs)}; rhs = {D.element_str(rhs)}"
    rep.add(name, ok, detail, count)
    return ok


def _group_pairs(D: DrinfeldDouble, limit: int = 400):
    G = enumerate_group(D.A.group)
    C = enumerate_characters(D.A.group)
    pairs = [(g, c) for g in G for c in C]
    if len(pairs) > limit:
        rank = D.A.group.rank
        unit = [tuple(1 if t == s else 0 for t in range(rank)) for s in range(rank)]
        ident = D.A.group.identity()
        triv = D.A.group.trivial_character()
        pairs = [(D.A.group.element(e), triv) for e in unit] + [(ident, D.A.group.character(e)) for e in unit]
    return pairs


def verify_double_relations(D: DrinfeldDouble) -> Report:
    d = D.datum
    A, Astar = D.A, D.Astar
    rep = Report("relations in D(A)")
    theta = d.theta
    group = A.group
    pairs = _group_pairs(D)
    sc = D.scalar

    def z(i):  # ξ_i χ_i^{-1}
        return D.multiply(D.xi(i), D.chi(d.chi[i].inverse()))

    # cross relations
    ok = True
    for g, c in pairs:
        ok = ok and vec_equal(D.multiply(D.g(g), D.chi(c)), D.multiply(D.chi(c), D.g(g)))
    rep.add("g χ = χ g", ok, count=len(pairs))
    for i in range(theta):
        ok = True
        for g in enumerate_group(group):
            lhs = D.product(D.g(g), D.xi(i), D.g(g.inverse()))
            ok = ok and vec_equal(lhs, scale(D.xi(i), sc(pair(d.chi[i], g)).inverse()))
        rep.add(f"g ξ_{i + 1} g^-1 = χ_{i + 1}^-1(g) ξ_{i + 1}", ok, count=group.order)
        for j in range(theta):
            if i != j:
                _check(rep, f"x_{i + 1} ξ_{j + 1} = ξ_{j + 1} x_{i + 1}", D,
                       D.multiply(D.x(i), D.xi(j)), D.multiply(D.xi(j), D.x(i)))
        _check(rep, f"[x_{i + 1}, ξ_{i + 1}] = χ_{i + 1} - g_{i + 1}", D,
               D.commutator(D.x(i), D.xi(i)), D.add(D.chi(d.chi[i]), D.g(d.g[i]), coeffs=[1, -1]))
        ok = True
        for c in enumerate_characters(group):
            lhs = D.product(D.chi(c.inverse()), D.x(i), D.chi(c))
            ok = ok and vec_equal(lhs, scale(D.x(i), sc(pair(c, d.g[i]))))
        rep.add(f"γ^-1 x_{i + 1} γ = γ(g_{i + 1}) x_{i + 1} for γ ∈ G(A*)", ok, count=group.order)

    for i in range(theta):
        N = d.N[i]
        rep.add(f"x_{i + 1}^{N} = 0", not D.power(D.x(i), N))
        rep.add(f"(ξ_{i + 1}χ_{i + 1}^-1)^{N} = 0", not D.power(z(i), N))
        ok_x = ok_z = True
        for g, c in pairs:
            gc = D.gchi(g, c)
            gci = D.gchi(g.inverse(), c.inverse())
            # <χ_i ĝ_i^{-1}, gχ> = χ_i(g) χ(g_i)^{-1}
            s = sc(pair(d.chi[i], g)) * sc(pair(c, d.g[i])).inverse()
            ok_x = ok_x and vec_equal(D.product(gc, D.x(i), gci), scale(D.x(i), s))
            ok_z = ok_z and vec_equal(D.product(gc, z(i), gci), scale(z(i), s.inverse()))
        rep.add(f"(gχ) x_{i + 1} (gχ)^-1 = <χ_{i + 1} ĝ_{i + 1}^-1, gχ> x_{i + 1}", ok_x, count=len(pairs))
        rep.add(
            f"(gχ)(ξ_{i + 1}χ_{i + 1}^-1)(gχ)^-1 = <χ_{i + 1}^-1 ĝ_{i + 1}, gχ> ξ_{i + 1}χ_{i + 1}^-1",
            ok_z,
            count=len(pairs),
        )
        for j in range(theta):
            if i == j or d.cartan[i][j] == 0:
                continue
            m = 1 - d.cartan[i][j]
            y = D.x(j)
            w = z(j)
            for _ in range(m):
                y = D.hopf_ad(D.x(i), y)
                w = D.hopf_ad(z(i), w)
            rep.add(f"ad(x_{i + 1})^{m}(x_{j + 1}) = 0", not y)
            rep.add(f"ad(ξ_{i + 1}χ_{i + 1}^-1)^{m}(ξ_{j + 1}χ_{j + 1}^-1) = 0", not w)
        for j in range(theta):
            lhs = D.hopf_ad(D.x(i), z(j))
            if i == j:
                rhs = D.add(D.one(), D.gchi(d.g[i], d.chi[i].inverse()), coeffs=[1, -1])
                _check(rep, f"ad(x_{i + 1})(ξ_{i + 1}χ_{i + 1}^-1) = 1 - g_{i + 1}χ_{i + 1}^-1", D, lhs, rhs)
            else:
                _check(rep, f"ad(x_{i + 1})(ξ_{j + 1}χ_{j + 1}^-1) = 0", D, lhs, {})
        one = D.one()
        g_i = D.g(d.g[i])
        chi_inv = D.chi(d.chi[i].inverse())
        rhs = {}
        add_into(rhs, _outer(D.x(i), one))
        add_into(rhs, _outer(g_i, D.x(i)))
        _check(rep, f"Δ(x_{i + 1}) = x_{i + 1}⊗1 + g_{i + 1}⊗x_{i + 1}", D, D.comultiply(D.x(i)), rhs)
        rhs = {}
        add_into(rhs, _outer(chi_inv, z(i)))
        add_into(rhs, _outer(z(i), one))
        _check(rep, f"Δ(ξ_{i + 1}χ_{i + 1}^-1) = χ_{i + 1}^-1⊗ξ_{i + 1}χ_{i + 1}^-1 + ξ_{i + 1}χ_{i + 1}^-1⊗1",
               D, D.comultiply(z(i)), rhs)
    return rep


def _outer(a: Mapping, b: Mapping) -> Tensor:
    return {(i, j): x * y for i, x in a.items() for j, y in b.items()}


def verify_double_datum_map(D: DrinfeldDouble) -> Report:
    """The generators of u(D',λ) map to x_i, ξ_iχ_i^{-1}, gχ compatibly with D'."""
    d = D.datum
    dd, link = double_datum(d)
    rep = Report("D(A) ≅ u(D', λ) on generators")
    theta = d.theta
    gens = [D.x(i) for i in range(theta)]
    gens += [D.multiply(D.xi(i), D.chi(d.chi[i].inverse())) for i in range(theta)]
    r = d.group.rank

    def grp(exps):
        return D.gchi(exps[:r], exps[r:])

    ok = True
    for k, zk in enumerate(gens):
        for e in enumerate_group(dd.group):
            lhs = D.product(grp(e.exps), zk, grp(e.inverse().exps))
            ok = ok and vec_equal(lhs, scale(zk, D.scalar(pair(dd.chi[k], e))))
    rep.add("(gχ) z_k (gχ)^-1 = μ_k(gχ) z_k", ok, count=len(gens) * dd.group.order)
    ok = True
    for k, zk in enumerate(gens):
        rhs = _outer(zk, D.one())
        add_into(rhs, _outer(grp(dd.g[k].exps), zk))
        ok = ok and vec_equal(D.comultiply(zk), rhs)
    rep.add("Δ(z_k) = z_k⊗1 + a_k⊗z_k", ok, count=len(gens))
    ok = True
    for k in range(2 * theta):
        for l in range(k + 1, 2 * theta):
            if dd.cartan[k][l] == 0:
                # linking relation ad_c(z_k)(z_l) = λ_kl (1 - a_k a_l)
                lhs = D.hopf_ad(gens[k], gens[l])
                lam = link[k][l]
                rhs = {}
                if lam:
                    rhs = D.add(D.one(), grp((dd.g[k] * dd.g[l]).exps), coeffs=[lam, -lam])
                ok = ok and vec_equal(lhs, rhs)
    rep.add("ad_c(z_k)(z_l) = λ_kl(1 - a_k a_l) for non-adjacent k < l", ok)
    expected = d.group.order**2 * math.prod(n**2 for n in d.roots.N)
    rep.add("dim D(A) = |G|^2 ∏ N_β^2", D.dim == expected, f"{D.dim} vs {expected}")
    return rep


# ------------------------------------------------------------ R-matrix

@dataclass
class QuasitriangularData:
    R: Tensor
    R_inv: Tensor
    u: Elem
    u_inv: Elem
    c: Elem
    report: Report


def r_matrix(D: DrinfeldDouble) -> Tensor:
    """R = Σ_l (ε ⊗ b_l) ⊗ (e^l ⊗ 1)."""
    R: Tensor = {}
    unit_A = D.A.unit()
    for l in range(D.n):
        left = D.from_A(D.A.basis(l))
        right = D.tensor(D.Astar.basis(l), unit_A)
        add_into(R, _outer(left, right))
    return R


def drinfeld_u(D: DrinfeldDouble, R: Tensor) -> Elem:
    """u = Σ S(R2) R1."""
    acc: Elem = {}
    for (i, j), c in R.items():
        add_into(acc, D.multiply(D.antipode_basis(j), D.basis(i)), c)
    return acc


def drinfeld_u_inv(D: DrinfeldDouble, R: Tensor) -> Elem:
    """u^{-1} = Σ R2 S^2(R1)."""
    acc: Elem = {}
    for (i, j), c in R.items():
        add_into(acc, D.multiply(D.basis(j), D.antipode(D.antipode_basis(i))), c)
    return acc


def _leg(D: DrinfeldDouble, R: Tensor, legs: tuple[int, int]) -> Tensor:
    one = D.one()
    out: Tensor = {}
    for (a, b), c in R.items():
        for e, x in one.items():
            key = [e, e, e]
            key[legs[0]] = a
            key[legs[1]] = b
            free = 3 - legs[0] - legs[1]
            key[free] = e
            add_into(out, {tuple(key): c * x})
    return out


def verify_quasitriangular(D: DrinfeldDouble, full_basis: bool | None = None) -> QuasitriangularData:
    rep = Report("quasitriangular structure of D(A)")
    if full_basis is None:
        full_basis = D.dim <= 100
    R = r_matrix(D)
    R_inv = D.tensor_map(R, [D.antipode_basis, None])
    one2 = _outer(D.one(), D.one())
    rep.add("R R^-1 = 1⊗1 = R^-1 R", vec_equal(D.tensor_multiply(R, R_inv), one2)
            and vec_equal(D.tensor_multiply(R_inv, R), one2))
    R12, R13, R23 = _leg(D, R, (0, 1)), _leg(D, R, (0, 2)), _leg(D, R, (1, 2))
    rep.add("(Δ⊗id)R = R13 R23", vec_equal(D.comultiply_at(R, 0), D.tensor_multiply(R13, R23)))
    rep.add("(id⊗Δ)R = R13 R12", vec_equal(D.comultiply_at(R, 1), D.tensor_multiply(R13, R12)))
    elems = [D.basis(i) for i in range(D.dim)] if full_basis else D.generators()
    what = "all basis elements" if full_basis else "generators"
    ok = all(
        vec_equal(D.tensor_multiply(D.flip(D.comultiply(a)), R), D.tensor_multiply(R, D.comultiply(a)))
        for a in elems
    )
    rep.add(f"Δ^cop(a) R = R Δ(a) on {what}", ok, count=len(elems))
    lhs = D.tensor_multiply(D.tensor_multiply(R12, R13), R23)
    rhs = D.tensor_multiply(D.tensor_multiply(R23, R13), R12)
    rep.add("Yang-Baxter R12 R13 R23 = R23 R13 R12", vec_equal(lhs, rhs))
    u = drinfeld_u(D, R)
    u_inv = drinfeld_u_inv(D, R)
    rep.add("u u^-1 = 1 = u^-1 u", vec_equal(D.multiply(u, u_inv), D.one()) and vec_equal(D.multiply(u_inv, u), D.one()))
    ok = all(
        vec_equal(D.antipode(D.antipode(a)), D.product(u, a, u_inv)) for a in elems
    )
    rep.add(f"S^2(a) = u a u^-1 on {what}", ok, count=len(elems))
    c = D.multiply(u, D.antipode(u))
    ok = all(vec_equal(D.multiply(c, a), D.multiply(a, c)) for a in elems)
    rep.add(f"c = u S(u) is central ({what})", ok, count=len(elems))
    ok = True
    for i in range(D.datum.theta):
        q = D.scalar(D.datum.q(i, i)).inverse()
        ok = ok and vec_equal(D.product(u, D.x(i), u_inv), scale(D.x(i), q))
        ok = ok and vec_equal(D.antipode(D.antipode(D.x(i))), scale(D.x(i), q))
    rep.add("S^2(x_i) = u x_i u^-1 = χ_i(g_i)^-1 x_i", ok)
    return QuasitriangularData(R, R_inv, u, u_inv, c, rep)
