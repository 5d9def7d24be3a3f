"""Ribbon structure on D(A) via square roots of the distinguished grouplikes.

D(A) carries a quasi-ribbon element iff there are grouplikes h ∈ A and
δ ∈ A* with h² = g_dist and δ² = γ; it is ribbon iff some such pair also
satisfies S²(a) = h (δ ⇀ a ↼ δ^{-1}) h^{-1} on A, where
f ⇀ a = a_1 f(a_2) and a ↼ f = f(a_1) a_2.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .abelian import Character, GroupElement, enumerate_characters, enumerate_group, pair
from .algebra.axioms import Check, Report
from .algebra.pointed import PointedHopfAlgebra
from .algebra.tables import Elem, Tensor
from .cartan import rho_identity_check
from .double import DrinfeldDouble, QuasitriangularData, verify_quasitriangular
from .hopf import DualAlgebra, IntegralReport, grouplikes, integrals
from .linalg import add_into, vec_equal

RIBBON = "RIBBON"
QUASI_RIBBON_ONLY = "QUASI_RIBBON_ONLY"
NEITHER = "NEITHER"


def _char_value(A: PointedHopfAlgebra, chi: Character, k: int):
    """Extended character: χ(y_u g) = δ_{u,0} χ(g)."""
    if k >= A.order:
        return None
    return A.scalar(pair(chi, A.elements[k]))


def twisted_conjugation(A: PointedHopfAlgebra, h: GroupElement, delta: Character, a: dict) -> Elem:
    """h (δ ⇀ a ↼ δ^{-1}) h^{-1} = Σ δ^{-1}(a_1) h a_2 h^{-1} δ(a_3)."""
    dinv = delta.inverse()
    inner: Elem = {}
    for (i, j, k), c in A.comultiply_at(A.comultiply(a), 0).items():
        left = _char_value(A, dinv, i)
        if left is None:
            continue
        right = _char_value(A, delta, k)
        if right is None:
            continue
        add_into(inner, {j: c * left * right})
    return A.conjugate(h, inner)


def s2_condition(A: PointedHopfAlgebra, h: GroupElement, delta: Character, elems) -> bool:
    return all(vec_equal(A.antipode(A.antipode(a)), twisted_conjugation(A, h, delta, a)) for a in elems)


def _twist_is_multiplicative(A: PointedHopfAlgebra, h, delta, samples: int = 40, seed: int = 0) -> bool:
    """S² and the twisted conjugation are both multiplicative (spot check on basis pairs)."""
    rng = random.Random(seed)
    dim = A.dim
    if dim * dim <= samples:
        pairs = [(a, b) for a in range(dim) for b in range(dim)]
    else:
        pairs = [(rng.randrange(dim), rng.randrange(dim)) for _ in range(samples)]
    for a, b in pairs:
        ea, eb = A.basis(a), A.basis(b)
        ab = A.mult_basis(a, b)
        s2 = lambda z: A.antipode(A.antipode(z))  # noqa: E731
        tw = lambda z: twisted_conjugation(A, h, delta, z)  # noqa: E731
        if not vec_equal(s2(ab), A.multiply(s2(ea), s2(eb))):
            return False
        if not vec_equal(tw(ab), A.multiply(tw(ea), tw(eb))):
            return False
    return True


# ----------------------------------------------------------- theorem witness

@dataclass
class TheoremWitness:
    delta: Character | None
    h: GroupElement | None
    report: Report

    @property
    def passed(self) -> bool:
        return self.delta is not None and self.report.passed

    def to_json(self) -> dict:
        return {
            "delta": list(self.delta.exps) if self.delta is not None else None,
            "h": list(self.h.exps) if self.h is not None else None,
            "report": self.report.to_json(),
        }


def theorem_witness(A: PointedHopfAlgebra, gamma: Character | None, g_dist: GroupElement | None) -> TheoremWitness:
    """δ = ∏χ_β^{-(N_β-1)/2}, h = ∏g_β^{(N_β-1)/2}, checked against the solved γ and g_dist."""
    d = A.datum
    rd = d.roots
    rep = Report("explicit witness (δ, h) from half root exponents")
    even = [k for k, n in enumerate(rd.N) if n % 2 == 0]
    if even:
        rep.add("all N_β odd", False, f"even N_β at roots {[k + 1 for k in even]}")
        return TheoremWitness(None, None, rep)
    delta = d.group.trivial_character()
    h = d.group.identity()
    for n, g, chi in zip(rd.N, rd.g, rd.chi):
        e = (n - 1) // 2
        delta = delta * chi ** (-e)
        h = h * g**e
    rep.add("all N_β odd", True)
    rep.add("δ² = γ (solved)", gamma is not None and delta**2 == gamma, f"δ² = {list((delta**2).exps)}")
    rep.add("h² = g_dist (solved)", g_dist is not None and h**2 == g_dist, f"h² = {list((h**2).exps)}")
    gens = [A.grp([1 if t == s else 0 for t in range(d.group.rank)]) for s in range(d.group.rank)]
    rep.add("condition on H: S²(g) = h(δ⇀g↼δ^-1)h^-1 for group generators", s2_condition(A, h, delta, gens))
    for i in range(d.theta):
        lhs = A.scalar(pair(d.chi[i], h)) * A.scalar(pair(delta, d.g[i])).inverse()
        rhs = A.scalar(d.q(i, i)).inverse()
        rep.add(f"condition on R at x_{i + 1}: χ_{i + 1}(h)δ^-1(g_{i + 1}) = χ_{i + 1}(g_{i + 1})^-1", lhs == rhs)
        rep.add(f"S²(x_{i + 1}) = h(δ⇀x_{i + 1}↼δ^-1)h^-1", s2_condition(A, h, delta, [A.x(i)]))
        rho = rho_identity_check(rd.system, i)
        rep.add(f"Σ_β Σ_s a_{i + 1}s c_βs = 2", rho == 2, f"value {rho}")
    return TheoremWitness(delta, h, rep)


# ----------------------------------------------------------- ribbon element

def ribbon_element_search(D: DrinfeldDouble, qt: QuasitriangularData) -> tuple[Elem | None, Report]:
    """Try v = u ℓ^{-1} for every grouplike ℓ of D(A)."""
    rep = Report("ribbon element search v = u ℓ^-1, ℓ ∈ G(D(A))")
    cands = grouplikes(D)
    rep.add("grouplikes of D(A) found", bool(cands), f"{len(cands)} grouplikes", len(cands))
    gens = D.generators()
    R = qt.R
    R21R = D.tensor_multiply(D.flip(R), R)
    for n, ell in enumerate(cands):
        v = D.multiply(qt.u, D.antipode(ell))
        if D.counit(v) != 1 or not vec_equal(D.antipode(v), v):
            continue
        if not vec_equal(D.multiply(v, v), qt.c):
            continue
        if not all(vec_equal(D.multiply(v, a), D.multiply(a, v)) for a in gens):
            continue
        vv: Tensor = {(i, j): x * y for i, x in v.items() for j, y in v.items()}
        if not vec_equal(D.tensor_multiply(D.comultiply(v), R21R), vv):
            continue
        rep.add(f"candidate {n + 1}: ε(v) = 1", True)
        rep.add("S(v) = v", True)
        rep.add("v² = u S(u)", True)
        rep.add("v central (generators of D(A))", True, count=len(gens))
        rep.add("Δ(v) = (R21 R)^-1 (v⊗v)", True)
        other_form = vec_equal(D.tensor_multiply(D.comultiply(v), D.flip(R)), D.tensor_multiply(R, vv))
        rep.checks.append(
            Check(f"Δ(v) = R R21^-1 (v⊗v) [informational: {'holds' if other_form else 'does not hold'}]", True)
        )
        return v, rep
    rep.checks.append(Check("no candidate passes ε(v)=1, S(v)=v, v²=uS(u), centrality, Δ(v) [outcome]", True))
    return None, rep


# ----------------------------------------------------------- criterion

@dataclass
class RibbonReport:
    g_dist: GroupElement | None
    gamma: Character | None
    square_roots_h: list[GroupElement]
    square_roots_delta: list[Character]
    criterion_witness: tuple[GroupElement, Character] | None
    passing_pairs: list[tuple[GroupElement, Character]]
    theorem: TheoremWitness | None
    ribbon_element: Elem | None
    verdict: str
    report: Report
    element_report: Report | None = None
    quasitriangular: Report | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        """Internal consistency (not the verdict)."""
        parts = [self.report]
        if self.quasitriangular is not None:
            parts.append(self.quasitriangular)
        if self.theorem is not None:
            parts.append(self.theorem.report)
        return all(p.passed for p in parts)

    def to_json(self) -> dict:
        ex = lambda x: list(x.exps)  # noqa: E731
        return {
            "verdict": self.verdict,
            "g_dist": ex(self.g_dist) if self.g_dist is not None else None,
            "gamma": ex(self.gamma) if self.gamma is not None else None,
            "square_roots_h": [ex(h) for h in self.square_roots_h],
            "square_roots_delta": [ex(d) for d in self.square_roots_delta],
            "criterion_witness": (
                {"h": ex(self.criterion_witness[0]), "delta": ex(self.criterion_witness[1])}
                if self.criterion_witness
                else None
            ),
            "passing_pairs": [{"h": ex(h), "delta": ex(d)} for h, d in self.passing_pairs],
            "theorem_witness": self.theorem.to_json() if self.theorem else None,
            "ribbon_element": (
                [[k, c.to_json()] for k, c in sorted(self.ribbon_element.items())]
                if self.ribbon_element is not None
                else None
            ),
            "report": self.report.to_json(),
            "element_report": self.element_report.to_json() if self.element_report else None,
            "quasitriangular": self.quasitriangular.to_json() if self.quasitriangular else None,
            "notes": self.notes,
        }

    def text(self) -> str:
        ex = lambda x: str(list(x.exps))  # noqa: E731
        lines = [f"verdict: {self.verdict}"]
        lines.append(f"g_dist = {ex(self.g_dist) if self.g_dist is not None else '?'}, "
                     f"gamma = {ex(self.gamma) if self.gamma is not None else '?'}")
        lines.append(f"h with h² = g_dist: {[list(h.exps) for h in self.square_roots_h]}")
        lines.append(f"δ with δ² = γ: {[list(d.exps) for d in self.square_roots_delta]}")
        if self.criterion_witness:
            h, d = self.criterion_witness
            lines.append(f"witness: h = {ex(h)}, δ = {ex(d)}")
        lines.append(self.report.text())
        if self.theorem:
            lines.append(self.theorem.report.text())
        if self.quasitriangular:
            lines.append(self.quasitriangular.text())
        if self.element_report:
            lines.append(self.element_report.text())
        lines.extend(self.notes)
        return "\n".join(lines)


def kr_criterion(
    A: PointedHopfAlgebra,
    Astar: DualAlgebra | None = None,
    integral_report: IntegralReport | None = None,
    double: DrinfeldDouble | None = None,
    search_element: bool = True,
    max_dim: int = 1024,
) -> RibbonReport:
    if Astar is None:
        Astar = DualAlgebra(A)
    if integral_report is None:
        integral_report = integrals(A, Astar)
    gamma, g_dist = integral_report.gamma, integral_report.g_dist
    group = A.group
    rep = Report("square-root criterion")
    rep.add("γ and g_dist solved", gamma is not None and g_dist is not None)
    G_A = grouplikes(A)
    rep.add("G(A) = G", len(G_A) == group.order, f"{len(G_A)} grouplikes")

    hs = [h for h in enumerate_group(group) if g_dist is not None and h**2 == g_dist]
    ds = [d for d in enumerate_characters(group) if gamma is not None and d**2 == gamma]
    gens = A.generators()
    passing = [(h, d) for h in hs for d in ds if s2_condition(A, h, d, gens)]
    rep.add(
        "S² and h(δ⇀·↼δ^-1)h^-1 are algebra maps (basis spot check)",
        all(_twist_is_multiplicative(A, h, d) for h, d in passing[:1]) if passing else True,
    )
    witness = passing[0] if passing else None
    if witness:
        verdict = RIBBON
    elif hs and ds:
        verdict = QUASI_RIBBON_ONLY
    else:
        verdict = NEITHER
    rep.add("RIBBON implies square roots exist", verdict != RIBBON or (hs and ds))

    tw = None
    if A.datum.theta == 0 or all(n % 2 for n in A.datum.roots.N):
        tw = theorem_witness(A, gamma, g_dist)
        if tw.delta is not None and tw.report.passed:
            rep.add("explicit witness (δ, h) is among the passing pairs", (tw.h, tw.delta) in passing)

    out = RibbonReport(g_dist, gamma, hs, ds, witness, passing, tw, None, verdict, rep)
    if not search_element:
        return out
    D = double if double is not None else DrinfeldDouble(A, Astar, max_dim=max_dim)
    if D.dim > max_dim:
        out.notes.append(f"ribbon element search skipped: dim D(A) = {D.dim} exceeds max-dim {max_dim}")
        return out
    qt = verify_quasitriangular(D)
    out.quasitriangular = qt.report
    v, vrep = ribbon_element_search(D, qt)
    out.ribbon_element = v
    out.element_report = vrep
    if verdict == RIBBON and v is None:
        out.notes.append("criterion holds but no v = u ℓ^-1 passed; the verdict stands")
    return out
