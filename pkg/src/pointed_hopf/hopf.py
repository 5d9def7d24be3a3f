"""The dual Hopf algebra, grouplikes, integrals and biproduct maps.

Conventions for functionals on A: (fg)(a) = f(a_1) g(a_2) and
Δ(f)(a ⊗ b) = f(ab).  Elements of A* are stored in the dual basis e^k.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .abelian import Character, GroupElement, enumerate_characters, pair_exponent
from .algebra.axioms import Report
from .algebra.pointed import PointedHopfAlgebra, build_algebra
from .algebra.shuffle import root_vector_polys
from .algebra.tables import Elem, StructureTables, Tensor
from .cartan import dual_datum
from .cyclotomic import CycNum, zeta
from .linalg import Echelon, add_into, nullspace, proportional, scale, vec_equal


class DualAlgebra(StructureTables):
    """A* in the dual basis e^k of a PointedHopfAlgebra A."""

    def __init__(self, A: PointedHopfAlgebra):
        super().__init__(A.dim, A.conductor)
        self.A = A
        self.datum = A.datum
        self._one = CycNum.rational(1, A.conductor)
        self._zero = CycNum.rational(0, A.conductor)
        self._cindex: dict[tuple[int, int], dict[int, CycNum]] | None = None
        self._pindex: list[Tensor] | None = None
        self._sindex: list[Elem] | None = None
        self._siindex: list[Elem] | None = None
        self._delta_terms: list[list[tuple[int, int, CycNum]]] | None = None
        self._dual_polys = None
        self._Y: dict[int, Elem] = {}

    def label(self, k: int) -> str:
        return "e^" + self.A.label(k)

    # ------------------------------------------------------------ indexes
    def _comult_index(self):
        if self._cindex is None:
            idx: dict[tuple[int, int], dict[int, CycNum]] = {}
            terms = []
            for k in range(self.dim):
                row = []
                for (i, j), c in self.A.comult_basis(k).items():
                    idx.setdefault((i, j), {})[k] = c
                    row.append((i, j, c))
                terms.append(row)
            self._cindex = idx
            self._delta_terms = terms
        return self._cindex

    def _product_index(self) -> list[Tensor]:
        if self._pindex is None:
            out: list[Tensor] = [{} for _ in range(self.dim)]
            for i in range(self.dim):
                for j in range(self.dim):
                    for k, c in self.A.mult_basis(i, j).items():
                        out[k][(i, j)] = c
            self._pindex = out
        return self._pindex

    def _transpose(self, images: list[Elem]) -> list[Elem]:
        out: list[Elem] = [{} for _ in range(self.dim)]
        for i, img in enumerate(images):
            for k, c in img.items():
                out[k][i] = c
        return out

    # -------------------------------------------------- basis primitives
    def unit(self) -> Elem:
        return {k: self.A.counit_basis(k) for k in range(self.dim) if self.A.counit_basis(k)}

    def _mult(self, i: int, j: int) -> Elem:
        return dict(self._comult_index().get((i, j), {}))

    def _comult(self, k: int) -> Tensor:
        return self._product_index()[k]

    def _counit(self, k: int) -> CycNum:
        return self.A.one().get(k, self._zero)

    def _antipode(self, k: int) -> Elem:
        if self._sindex is None:
            self._sindex = self._transpose([self.A.antipode_basis(i) for i in range(self.dim)])
        return self._sindex[k]

    def _antipode_inv(self, k: int) -> Elem:
        if self._siindex is None:
            self._siindex = self._transpose([self.A.antipode_inv_basis(i) for i in range(self.dim)])
        return self._siindex[k]

    def multiply(self, f: Mapping, g: Mapping) -> Elem:
        self._comult_index()
        if len(f) * len(g) <= 4 * self.dim:
            return super().multiply(f, g)
        # dense route: (fg)(b_k) = sum over Δ(b_k) of f(b_i) g(b_j)
        out: Elem = {}
        for k, row in enumerate(self._delta_terms):
            acc = None
            for i, j, c in row:
                x = f.get(i)
                if x is None:
                    continue
                y = g.get(j)
                if y is None:
                    continue
                t = x * y * c
                acc = t if acc is None else acc + t
            if acc:
                out[k] = acc
        return out

    # ------------------------------------------------------- evaluation
    def evaluate(self, f: Mapping, a: Mapping) -> CycNum:
        acc = self._zero
        for k, c in a.items():
            x = f.get(k)
            if x:
                acc = acc + x * c
        return acc

    # ---------------------------------------------------- named elements
    def xi(self, i: int) -> Elem:
        """Indicator of the basis words x_i g."""
        if not 0 <= i < self.datum.theta:
            raise IndexError(f"no generator x_{i + 1}")
        A = self.A
        return {A.join(A.x_positions[i], g): self._one for g in range(A.order)}

    def character(self, chi: Character | Sequence[int]) -> Elem:
        """Extension of chi to A vanishing on y_u g for u ≠ 0."""
        exps = chi.exps if isinstance(chi, Character) else tuple(chi)
        A = self.A
        z = [zeta(A.n, k) for k in range(A.n)]
        return {gi: z[pair_exponent(A.group, exps, ge)] for gi, ge in enumerate(A._gexps)}

    def dual_polys(self):
        if self._dual_polys is None:
            self._dual_polys = root_vector_polys(dual_datum(self.datum))
        return self._dual_polys

    def Y(self, k: int) -> Elem:
        """Dual root vector P_k(ξ) from the dual datum's root polynomials."""
        r = self._Y.get(k)
        if r is None:
            r = {}
            for w, c in self.dual_polys()[k].items():
                add_into(r, self.product(*(self.xi(i) for i in w)), c)
            self._Y[k] = r
        return r

    def Y_word(self, u: Sequence[int]) -> Elem:
        acc = self.one()
        for k, e in enumerate(u):
            for _ in range(e):
                acc = self.multiply(acc, self.Y(k))
        return acc

    def generators(self) -> list[Elem]:
        gens = []
        rank = self.A.group.rank
        for j in range(rank):
            gens.append(self.character([1 if t == j else 0 for t in range(rank)]))
        gens += [self.xi(i) for i in range(self.datum.theta)]
        return gens

    def grouplike_candidates(self) -> list[Elem]:
        """Extended characters: the supports allowed by pointedness."""
        return [self.character(c) for c in enumerate_characters(self.A.group)]

    def group_integral(self) -> Elem:
        """(1/|G^|) Σ_χ χ equals the indicator of the unit word."""
        return {0: self._one}


def dual_build(A: PointedHopfAlgebra) -> DualAlgebra:
    return DualAlgebra(A)


def xi(Astar: DualAlgebra, i: int) -> Elem:
    return Astar.xi(i)


# ----------------------------------------------------- dual relations

def verify_dual_relations(Astar: DualAlgebra) -> Report:
    d = Astar.datum
    rep = Report("dual relations in A*")
    theta = d.theta
    chars = enumerate_characters(d.group)
    for i in range(theta):
        xi_i = Astar.xi(i)
        chi_i = Astar.character(d.chi[i])
        formula = {(a, b): x * y for a, x in xi_i.items() for b, y in Astar.one().items()}
        add_into(formula, {(a, b): x * y for a, x in chi_i.items() for b, y in xi_i.items()})
        rep.add(f"Δ(ξ_{i + 1}) = ξ_{i + 1}⊗1 + χ_{i + 1}⊗ξ_{i + 1}", vec_equal(Astar.comultiply(xi_i), formula))
        ok = True
        for chi in chars:
            c = Astar.character(chi)
            cinv = Astar.character(chi.inverse())
            lhs = Astar.product(c, xi_i, cinv)
            rhs = scale(xi_i, Astar.scalar(chi(d.g[i])))
            ok = ok and vec_equal(lhs, rhs)
        rep.add(f"χ ξ_{i + 1} χ^-1 = χ(g_{i + 1}) ξ_{i + 1} for all χ", ok, count=len(chars))
        N = d.N[i]
        rep.add(f"ξ_{i + 1}^{N} = 0", not Astar.power(xi_i, N))
    for i in range(theta):
        for j in range(theta):
            if i == j or d.cartan[i][j] == 0:
                continue
            m = 1 - d.cartan[i][j]
            y = Astar.xi(j)
            for _ in range(m):
                y = Astar.hopf_ad(Astar.xi(i), y)
            rep.add(f"ad(ξ_{i + 1})^{m}(ξ_{j + 1}) = 0", not y)
    return rep


# ----------------------------------------------------- PBW identification

@dataclass
class DualIdentification:
    """φ: u(dual datum) -> A*, y_u g ↦ Y_u χ_g."""

    B: PointedHopfAlgebra
    images: list[Elem]
    report: Report


def identify_dual(Astar: DualAlgebra, full_coalgebra: bool = False) -> DualIdentification:
    """Match A* with u(dual datum) through the PBW basis {Y_u χ}."""
    B = build_algebra(dual_datum(Astar.datum))
    rep = Report("A* ≅ u(dual datum)")
    images = []
    chars = [Astar.character(g.exps) for g in B.elements]
    for u in B.R.words:
        Yu = Astar.Y_word(u)
        for c in chars:
            images.append(Astar.multiply(Yu, c))
    rep.add("dim A* = dim u(dual datum)", B.dim == Astar.dim, f"{Astar.dim} vs {B.dim}")
    ech = Echelon()
    for im in images:
        ech.insert(im)
    rep.add("{Y_u χ} is a basis of A*", ech.rank == Astar.dim, f"rank {ech.rank}", Astar.dim)

    def phi(b: Mapping) -> Elem:
        acc: Elem = {}
        for k, c in b.items():
            add_into(acc, images[k], c)
        return acc

    bad = 0
    gens_B = B.generators()
    for s in gens_B:
        ps = phi(s)
        for k in range(B.dim):
            if not vec_equal(phi(B.multiply(s, B.basis(k))), Astar.multiply(ps, images[k])):
                bad += 1
    rep.add("φ(s b) = φ(s) φ(b) for generators s, all basis b", bad == 0, f"{bad} failures", len(gens_B) * B.dim)
    rep.add("φ(1) = 1", vec_equal(phi(B.one()), Astar.one()))
    ok = True
    checks = gens_B if not full_coalgebra else [B.basis(k) for k in range(B.dim)]
    for s in checks:
        lhs = Astar.comultiply(phi(s))
        rhs: Tensor = {}
        for (a, b), c in B.comultiply(s).items():
            for ka, xa in images[a].items():
                for kb, xb in images[b].items():
                    add_into(rhs, {(ka, kb): c * xa * xb})
        ok = ok and vec_equal(lhs, rhs) and Astar.counit(phi(s)) == B.counit(s)
    rep.add("Δ φ = (φ⊗φ) Δ and ε φ = ε on generators", ok, count=len(checks))
    return DualIdentification(B, images, rep)


# ----------------------------------------------------------- grouplikes

def is_grouplike(H: StructureTables, x: Mapping) -> bool:
    if not x or H.counit(x) != 1:
        return False
    return vec_equal(H.comultiply(x), {(i, j): a * b for i, a in x.items() for j, b in x.items()})


def grouplikes(H: StructureTables, candidates: Sequence[Mapping] | None = None, full_search: bool = False) -> list[Elem]:
    """Grouplike elements among candidate supports, or by exhaustive search.

    Default candidates: group words for A, extended characters for A*,
    products χ⊗g for the double (each object supplies them).
    """
    if full_search:
        return _grouplikes_full(H)
    if candidates is None:
        cand_fn = getattr(H, "grouplike_candidates", None)
        candidates = cand_fn() if cand_fn else [H.basis(i) for i in range(H.dim)]
    return [dict(c) for c in candidates if is_grouplike(H, c)]


def _grouplikes_full(H: StructureTables) -> list[Elem]:
    """Joint eigenvectors of f ⇀ x = (f⊗id)Δ(x) with eigenvalues in μ_n ∪ {0}.

    A grouplike g satisfies e^j ⇀ g = g_j g, and each joint eigenspace is at
    most one-dimensional.  Eigenvalues are assumed to be n-th roots of unity
    or zero, which holds when grouplike coordinates are character values.
    """
    n = H.conductor
    values = [CycNum.rational(0, n)] + [zeta(n, k) for k in range(n)]
    # operator L_j as columns: L_j(b_k) = Σ_{(i,l)} c [i == j] b_l
    ops: list[list[Elem]] = [[{} for _ in range(H.dim)] for _ in range(H.dim)]
    for k in range(H.dim):
        for (i, l), c in H.comult_basis(k).items():
            add_into(ops[i][k], {l: c})
    spaces: list[list[Elem]] = [[H.basis(k) for k in range(H.dim)]]
    for j in range(H.dim):
        new_spaces = []
        for basis in spaces:
            for lam in values:
                vecs = []
                for v in basis:
                    img: Elem = {}
                    for k, c in v.items():
                        add_into(img, ops[j][k], c)
                    add_into(img, v, -lam)
                    vecs.append(img)
                kernel = nullspace(vecs)
                sub = []
                for comb in kernel:
                    w: Elem = {}
                    for t, c in comb.items():
                        add_into(w, basis[t], c)
                    sub.append(w)
                if sub:
                    new_spaces.append(sub)
        spaces = new_spaces
    out = []
    for basis in spaces:
        if len(basis) != 1:
            continue
        v = basis[0]
        e = H.counit(v)
        if not e:
            continue
        v = scale(v, e.inverse())
        if is_grouplike(H, v):
            out.append(v)
    return out


# ------------------------------------------------------------ integrals

def solve_integrals(H: StructureTables, generators: Sequence[Mapping], side: str = "left") -> list[Elem]:
    """Basis of {t : s t = ε(s) t (left) or t s = ε(s) t (right) for all generators s}."""
    cols = []
    for k in range(H.dim):
        col: dict = {}
        for gi, s in enumerate(generators):
            prod = H.multiply(s, H.basis(k)) if side == "left" else H.multiply(H.basis(k), s)
            add_into(prod, {k: H.counit(s)}, -1)
            for key, c in prod.items():
                col[(gi, key)] = c
        cols.append(col)
    out = []
    for comb in nullspace(cols):
        out.append(dict(comb))
    return out


def modular_function(H: StructureTables, t: Mapping, indices: Sequence[int]) -> dict[int, CycNum] | None:
    """α(b) with t b = α(b) t for the listed basis indices (None if not proportional)."""
    out = {}
    for k in indices:
        c = proportional(H.multiply(t, H.basis(k)), t)
        if c is None:
            return None
        out[k] = c
    return out


def _normalize(v: Mapping) -> Elem:
    k = min(v)
    return scale(v, v[k].inverse())


@dataclass
class IntegralReport:
    left_integral: Elem
    right_integral: Elem
    gamma: Character | None
    g_dist: GroupElement | None
    dual_left_integral: Elem
    dual_right_integral: Elem
    predicted: dict
    report: Report
    solution_dims: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "gamma": list(self.gamma.exps) if self.gamma else None,
            "g_dist": list(self.g_dist.exps) if self.g_dist else None,
            "predicted": self.predicted,
            "solution_dims": self.solution_dims,
            "checks": self.report.to_json(),
        }

    def text(self) -> str:
        lines = [
            f"γ (solved)      = {list(self.gamma.exps) if self.gamma else None}",
            f"g_dist (solved) = {list(self.g_dist.exps) if self.g_dist else None}",
        ]
        for k, v in self.predicted.items():
            lines.append(f"  {k}: {v}")
        lines.append(self.report.text())
        return "\n".join(lines)


def _root_product(datum, which: str, sign: int) -> tuple[int, ...]:
    roots = datum.roots
    acc = datum.group.identity() if which == "g" else datum.group.trivial_character()
    for k in range(roots.p):
        base = roots.g[k] if which == "g" else roots.chi[k]
        acc = acc * base ** (sign * (roots.N[k] - 1))
    return acc.exps


def integrals(
    A: PointedHopfAlgebra,
    Astar: DualAlgebra | None = None,
    check_indices: Sequence[int] | None = None,
    random_checks: int = 0,
    seed: int = 0,
) -> IntegralReport:
    """Integrals of A and A*, with γ and g_dist solved from their defining equations."""
    if Astar is None:
        Astar = DualAlgebra(A)
    d = A.datum
    rep = Report(f"integrals of A (dim {A.dim}) and A*")
    if check_indices is None:
        if random_checks:
            rng = random.Random(seed)
            check_indices = sorted(rng.sample(range(A.dim), min(random_checks, A.dim)))
        else:
            check_indices = list(range(A.dim))
    gens = A.generators()
    targets = [A.basis(k) for k in check_indices]

    # formula route
    x_top = A.top_word()
    lam = A.group_integral()
    t_l = A.multiply(lam, x_top)
    t_r = A.multiply(x_top, lam)
    for name, t, side in (("t_l = Λ_G x", t_l, "left"), ("t_r = x Λ_G", t_r, "right")):
        ok = all(
            vec_equal(
                A.multiply(s, t) if side == "left" else A.multiply(t, s),
                scale(t, A.counit(s)),
            )
            for s in gens + targets
        )
        rep.add(f"{name} is a {side} integral (generators + {len(targets)} basis elements)", ok)

    # solver route
    dims = {}
    for side, t in (("left", t_l), ("right", t_r)):
        sols = solve_integrals(A, gens, side)
        dims[f"A {side}"] = len(sols)
        rep.add(f"space of {side} integrals of A is one-dimensional", len(sols) == 1, f"dim {len(sols)}")
        if len(sols) == 1:
            rep.add(f"solved {side} integral ∝ formula", proportional(sols[0], t) is not None)

    rep.add("S(t_l) ∝ t_r", proportional(A.antipode(t_l), t_r) is not None)

    # graded check: the integral lives in top degree of B(V) times Λ_G
    top_deg = A.R.degree(A.R.index[tuple(n - 1 for n in A.R.N)])
    rep.add("t_l lies in the top degree", all(A.degree(k) == top_deg for k in t_l))

    # γ from t_l a = γ(a) t_l
    alpha = modular_function(A, t_l, check_indices)
    gamma = None
    if alpha is None:
        rep.add("t_l a = γ(a) t_l solvable", False)
    else:
        gamma_fn = {k: v for k, v in alpha.items() if v}
        gamma = _as_character(A, gamma_fn)
        rep.add("t_l a = γ(a) t_l with γ a character of G extended by 0", gamma is not None, count=len(check_indices))

    # A* integrals: T_l = Λ Y, T_r = Y Λ
    Y = Astar.Y_word([n - 1 for n in A.R.N])
    Lam = Astar.group_integral()
    T_l = Astar.multiply(Lam, Y)
    T_r = Astar.multiply(Y, Lam)
    dgens = Astar.generators()
    for name, T, side in (("T_l = Λ Y", T_l, "left"), ("T_r = Y Λ", T_r, "right")):
        ok = all(
            vec_equal(
                Astar.multiply(s, T) if side == "left" else Astar.multiply(T, s),
                scale(T, Astar.counit(s)),
            )
            for s in dgens
        )
        rep.add(f"{name} is a {side} integral of A* on generators", bool(T) and ok)
    for side, T in (("left", T_l), ("right", T_r)):
        sols = solve_integrals(Astar, dgens, side)
        dims[f"A* {side}"] = len(sols)
        rep.add(f"space of {side} integrals of A* is one-dimensional", len(sols) == 1, f"dim {len(sols)}")
        if len(sols) == 1:
            rep.add(f"solved {side} integral of A* ∝ formula", proportional(sols[0], T) is not None)

    # duality consistency against A: left integral λ gives a_1 λ(a_2) = λ(a) 1
    ok_l = ok_r = True
    for k in check_indices:
        lhs_l: Elem = {}
        lhs_r: Elem = {}
        for (i, j), c in A.comult_basis(k).items():
            v = T_l.get(j)
            if v:
                add_into(lhs_l, {i: c * v})
            v = T_r.get(i)
            if v:
                add_into(lhs_r, {j: c * v})
        ok_l = ok_l and vec_equal(lhs_l, scale(A.one(), T_l.get(k, 0)))
        ok_r = ok_r and vec_equal(lhs_r, scale(A.one(), T_r.get(k, 0)))
    rep.add("a_1 T_l(a_2) = T_l(a) 1 on A", ok_l, count=len(check_indices))
    rep.add("T_r(a_1) a_2 = T_r(a) 1 on A", ok_r, count=len(check_indices))

    # g_dist from f T_r = f(g) T_r, f over the dual basis
    g_dist = None
    vals = {}
    ok = True
    for k in check_indices:
        c = proportional(Astar.multiply(Astar.basis(k), T_r), T_r)
        if c is None:
            ok = False
            break
        if c:
            vals[k] = c
    if ok:
        g_dist = _as_group_element(A, vals, check_indices)
    rep.add("f T_r = f(g) T_r with g a grouplike of A", ok and g_dist is not None, count=len(check_indices))

    predicted = {
        "gamma, negative variant ∏χ_β^-(N_β-1)": list(_root_product(d, "chi", -1)),
        "gamma, positive variant ∏χ_β^(N_β-1)": list(_root_product(d, "chi", 1)),
        "g_dist, ∏g_β^(N_β-1)": list(_root_product(d, "g", 1)),
    }
    if gamma is not None:
        predicted["solved gamma matches negative variant"] = gamma.exps == _root_product(d, "chi", -1)
        predicted["solved gamma matches positive variant"] = gamma.exps == _root_product(d, "chi", 1)
        rep.add(
            "solved γ matches one of the two sign variants",
            predicted["solved gamma matches negative variant"] or predicted["solved gamma matches positive variant"],
        )
    if g_dist is not None:
        rep.add("solved g_dist = ∏g_β^(N_β-1)", g_dist.exps == _root_product(d, "g", 1))
    return IntegralReport(t_l, t_r, gamma, g_dist, T_l, T_r, predicted, rep, dims)


def _as_character(A: PointedHopfAlgebra, values: Mapping[int, CycNum]) -> Character | None:
    """Recognize a functional supported on group words as a character of G."""
    if any(k >= A.order for k in values):
        return None
    for chi in enumerate_characters(A.group):
        ok = True
        for gi, ge in enumerate(A._gexps):
            v = values.get(gi)
            if v is None:
                continue
            if v != zeta(A.n, pair_exponent(A.group, chi.exps, ge)):
                ok = False
                break
        if ok:
            return chi
    return None


def _as_group_element(A: PointedHopfAlgebra, values: Mapping[int, CycNum], indices) -> GroupElement | None:
    support = [k for k in values]
    if len(support) != 1 or support[0] >= A.order or values[support[0]] != 1:
        return None
    return A.elements[support[0]]


# ------------------------------------------------------- biproduct maps

@dataclass
class BiproductMaps:
    A: PointedHopfAlgebra
    report: Report

    def p(self, a: Mapping) -> Elem:
        return {k: c for k, c in a.items() if k < self.A.order}

    def j(self, h: Mapping) -> Elem:
        return dict(h)

    def nu(self, a: Mapping) -> Elem:
        """ν(a) = a_1 jpS(a_2)."""
        A = self.A
        acc: Elem = {}
        for (i, k), c in A.comultiply(a).items():
            add_into(acc, A.multiply(A.basis(i), self.j(self.p(A.antipode_basis(k)))), c)
        return acc


def biproduct_maps(A: PointedHopfAlgebra) -> BiproductMaps:
    rep = Report("biproduct maps p, j, ν")
    maps = BiproductMaps(A, rep)
    groups = [A.basis(g) for g in range(A.order)]
    rep.add("p∘j = id on kG", all(vec_equal(maps.p(maps.j(g)), g) for g in groups))
    rep.add("p(x_i g) = 0", all(not maps.p(A.multiply(A.x(i), g)) for i in range(A.datum.theta) for g in groups))
    rep.add("ν(g) = 1", all(vec_equal(maps.nu(g), A.one()) for g in groups))
    rep.add("ν(x_i) = x_i", all(vec_equal(maps.nu(A.x(i)), A.x(i)) for i in range(A.datum.theta)))
    ok = True
    naive = True
    for k in range(A.dim):
        nk = maps.nu(A.basis(k))
        if any(i % A.order for i in nk):
            ok = False
        for g in groups:
            lhs = maps.nu(A.multiply(A.basis(k), g))
            ok = ok and vec_equal(lhs, nk)
            naive = naive and vec_equal(lhs, A.multiply(nk, g))
    rep.add("ν(a j(h)) = ν(a) ε(h) and ν(A) ⊂ span{y_u}", ok, count=A.dim * A.order)
    rep.checks.append(
        _info("ν(a j(h)) = ν(a) j(h) (holds only when G is trivial)", naive)
    )
    ok = True
    for u in range(A.R.dim):
        a = A.basis(A.join(u, 0))
        t = {}
        for (i, k), c in A.comult_basis(A.join(u, 0)).items():
            for kk, cc in maps.p(A.basis(k)).items():
                add_into(t, {(i, kk): c * cc})
        ok = ok and vec_equal(t, {(A.join(u, 0), 0): A.scalar(1)})
    rep.add("y_u ∈ A^{co H}: (id⊗p)Δ(y_u) = y_u⊗1", ok, count=A.R.dim)
    ok = all(vec_equal(maps.nu(maps.nu(A.basis(k))), maps.nu(A.basis(k))) for k in range(A.dim))
    rep.add("ν is a projection onto R", ok, count=A.dim)
    return maps


def _info(name: str, value: bool):
    from .algebra.axioms import Check

    # informational line: recorded but never counted as a failure
    return Check(f"[info] {name}: {'holds' if value else 'does not hold'}", True)
