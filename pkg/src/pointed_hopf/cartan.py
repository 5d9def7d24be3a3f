"""Data of finite Cartan type, positive roots in a convex order, derived data."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .abelian import Character, FiniteAbelianGroup, GroupElement, hat, pair, unhat
from .cyclotomic import CycNum, multiplicative_order

Matrix = tuple[tuple[int, ...], ...]


class DatumError(ValueError):
    """Validation failure; ``violations`` lists every failed invariant."""

    def __init__(self, violations: Sequence[str]):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


# ------------------------------------------------------------ Cartan matrices

def as_matrix(rows: Sequence[Sequence[int]]) -> Matrix:
    return tuple(tuple(int(a) for a in r) for r in rows)


def components(cartan: Matrix) -> list[list[int]]:
    """Connected components of the Dynkin diagram, each sorted."""
    n = len(cartan)
    seen = [False] * n
    out = []
    for s in range(n):
        if seen[s]:
            continue
        comp, stack = [], [s]
        seen[s] = True
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if not seen[j] and j != i and (cartan[i][j] or cartan[j][i]):
                    seen[j] = True
                    stack.append(j)
        out.append(sorted(comp))
    return out


def symmetrizer(cartan: Matrix) -> tuple[int, ...] | None:
    """Smallest positive integers d with d_i a_ij = d_j a_ji, or None."""
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    for comp in components(cartan):
        d[comp[0]] = Fraction(1)
        stack = [comp[0]]
        while stack:
            i = stack.pop()
            for j in comp:
                if j == i or not cartan[i][j]:
                    continue
                want = d[i] * cartan[i][j] / cartan[j][i]
                if d[j] is None:
                    d[j] = want
                    stack.append(j)
                elif d[j] != want:
                    return None
        den = math.lcm(*(d[i].denominator for i in comp))
        g = math.gcd(*(int(d[i] * den) for i in comp))
        for i in comp:
            d[i] = d[i] * den / g
    return tuple(int(x) for x in d)


def _positive_definite(m: list[list[Fraction]]) -> bool:
    # leading principal minors by exact Gaussian elimination
    a = [row[:] for row in m]
    n = len(a)
    for k in range(n):
        if a[k][k] <= 0:
            return False
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            for j in range(k, n):
                a[i][j] -= f * a[k][j]
    return True


def cartan_violations(cartan: Matrix) -> list[str]:
    out = []
    n = len(cartan)
    if any(len(r) != n for r in cartan):
        return ["Cartan matrix must be square"]
    for i in range(n):
        if cartan[i][i] != 2:
            out.append(f"a_ii = 2 violated at i={i + 1} (a_ii={cartan[i][i]})")
        for j in range(n):
            if i != j and cartan[i][j] > 0:
                out.append(f"a_ij ≤ 0 violated at (i,j)=({i + 1},{j + 1}) (a_ij={cartan[i][j]})")
            if i < j and (cartan[i][j] == 0) != (cartan[j][i] == 0):
                out.append(
                    f"a_ij=0 ⇔ a_ji=0 violated at (i,j)=({i + 1},{j + 1}) "
                    f"(a_ij={cartan[i][j]}, a_ji={cartan[j][i]})"
                )
    if out:
        return out
    d = symmetrizer(cartan)
    if d is None:
        return ["finite type violated: matrix is not symmetrizable"]
    sym = [[Fraction(d[i] * cartan[i][j]) for j in range(n)] for i in range(n)]
    if not _positive_definite(sym):
        return ["finite type violated: symmetrized matrix is not positive definite"]
    return []


def component_type(cartan: Matrix, comp: Sequence[int]) -> str:
    """Label like 'A2' or 'G2' for one connected component."""
    sub = as_matrix([[cartan[i][j] for j in comp] for i in comp])
    rank = len(comp)
    count = len(RootSystem(sub).roots)
    table = {
        (1, 1): "A1", (2, 3): "A2", (2, 4): "B2", (2, 6): "G2", (3, 6): "A3",
        (4, 10): "A4", (4, 12): "D4", (4, 24): "F4",
    }
    if (rank, count) in table:
        return table[(rank, count)]
    if count == rank * (rank + 1) // 2:
        return f"A{rank}"
    if count == rank * rank:
        # B_n and C_n share the root count; the long simple root tells them apart
        d = symmetrizer(sub)
        return f"B{rank}" if d is not None and d.count(min(d)) == 1 else f"C{rank}"
    if count == rank * (rank - 1):
        return f"D{rank}"
    return {36: "E6", 63: "E7", 120: "E8"}.get(count, f"?{rank}")


# ---------------------------------------------------------------- root system

class RootSystem:
    """Positive roots of a finite-type Cartan matrix in a convex order.

    Reflections act by s_i(alpha_j) = alpha_j - a_ij alpha_i.  The order comes
    from the reduced word of the longest Weyl element obtained by always
    appending the smallest admissible simple reflection.
    """

    MAX_ROOTS = 2000

    def __init__(self, cartan: Matrix):
        self.cartan = as_matrix(cartan)
        self.rank = len(self.cartan)
        self.reduced_word = self._longest_word()
        self.roots = self._ordered_roots()
        self.index = {b: k for k, b in enumerate(self.roots)}
        self.simple_positions = [self.index[self._simple(i)] for i in range(self.rank)]
        self.heights = [sum(b) for b in self.roots]
        self.splitting_plan = self._splitting()

    def _simple(self, i: int) -> tuple[int, ...]:
        return tuple(1 if j == i else 0 for j in range(self.rank))

    def reflect(self, i: int, beta: Sequence[int]) -> tuple[int, ...]:
        pairing = sum(c * self.cartan[i][j] for j, c in enumerate(beta))
        out = list(beta)
        out[i] -= pairing
        return tuple(out)

    def _apply(self, word: Sequence[int], beta: Sequence[int]) -> tuple[int, ...]:
        for i in reversed(word):
            beta = self.reflect(i, beta)
        return tuple(beta)

    def _longest_word(self) -> list[int]:
        word: list[int] = []
        while True:
            for i in range(self.rank):
                img = self._apply(word, self._simple(i))
                if all(c >= 0 for c in img):
                    word.append(i)
                    break
            else:
                return word
            if len(word) > self.MAX_ROOTS:
                raise DatumError(["finite type violated: Weyl group too large"])

    def _ordered_roots(self) -> list[tuple[int, ...]]:
        return [self._apply(self.reduced_word[:k], self._simple(i)) for k, i in enumerate(self.reduced_word)]

    def _splitting(self) -> dict[int, tuple[int, int]]:
        plan = {}
        for k, b in enumerate(self.roots):
            if sum(b) == 1:
                continue
            for k1 in range(len(self.roots)):
                rest = tuple(x - y for x, y in zip(b, self.roots[k1]))
                k2 = self.index.get(rest)
                if k2 is not None and k1 < k2:
                    plan[k] = (k1, k2)
                    break
            else:
                raise DatumError([f"no splitting found for root {b}"])
        return plan

    def is_convex(self) -> bool:
        p = len(self.roots)
        for i in range(p):
            for j in range(i + 1, p):
                s = tuple(x + y for x, y in zip(self.roots[i], self.roots[j]))
                k = self.index.get(s)
                if k is not None and not i < k < j:
                    return False
        return True


def positive_roots(cartan: Sequence[Sequence[int]]) -> RootSystem:
    cartan = as_matrix(cartan)
    bad = cartan_violations(cartan)
    if bad:
        raise DatumError(bad)
    return RootSystem(cartan)


def rho_identity_check(roots: RootSystem, i: int) -> int:
    """sum over positive roots beta of (A beta)_i, restricted to i's component."""
    comp = next(c for c in components(roots.cartan) if i in c)
    total = 0
    for beta in roots.roots:
        if any(beta[j] for j in comp):
            total += sum(roots.cartan[i][s] * beta[s] for s in comp)
    return total


# ------------------------------------------------------------------- the datum

@dataclass(frozen=True)
class RootData:
    """Root-system data decorated with the datum's grouplikes and characters."""

    system: RootSystem
    N: tuple[int, ...]
    g: tuple[GroupElement, ...]
    chi: tuple[Character, ...]

    @property
    def roots(self) -> list[tuple[int, ...]]:
        return self.system.roots

    @property
    def p(self) -> int:
        return len(self.system.roots)

    def to_json(self) -> dict:
        s = self.system
        return {
            "cartan": [list(r) for r in s.cartan],
            "reduced_word": [i + 1 for i in s.reduced_word],
            "roots": [list(b) for b in s.roots],
            "heights": s.heights,
            "N": list(self.N),
            "g": [list(x.exps) for x in self.g],
            "chi": [list(x.exps) for x in self.chi],
            "simple_positions": [k + 1 for k in s.simple_positions],
            "splitting_plan": {str(k + 1): [a + 1, b + 1] for k, (a, b) in sorted(s.splitting_plan.items())},
        }


@dataclass(frozen=True)
class CartanDatum:
    """D = (G, (g_i), (chi_i), (a_ij)) after validation."""

    group: FiniteAbelianGroup
    g: tuple[GroupElement, ...]
    chi: tuple[Character, ...]
    cartan: Matrix
    name: str = ""
    extra: dict = field(default_factory=dict, compare=False, hash=False)

    @property
    def theta(self) -> int:
        return len(self.g)

    @property
    def conductor(self) -> int:
        return self.group.exponent

    def q(self, i: int, j: int) -> CycNum:
        """chi_j(g_i): the braiding scalar of x_i past x_j."""
        return pair(self.chi[j], self.g[i])

    @cached_property
    def N(self) -> tuple[int, ...]:
        return tuple(multiplicative_order(self.q(i, i)) for i in range(self.theta))

    @cached_property
    def roots(self) -> RootData:
        system = RootSystem(self.cartan)
        gs, chis, ns = [], [], []
        for beta in system.roots:
            g = self.group.identity()
            c = self.group.trivial_character()
            for i, n in enumerate(beta):
                g = g * self.g[i] ** n
                c = c * self.chi[i] ** n
            gs.append(g)
            chis.append(c)
            ns.append(multiplicative_order(pair(c, g)))
        return RootData(system, tuple(ns), tuple(gs), tuple(chis))

    @property
    def dimension(self) -> int:
        return self.group.order * math.prod(self.roots.N)

    def summary(self) -> dict:
        comps = components(self.cartan)
        return {
            "group": list(self.group.invariants),
            "theta": self.theta,
            "g": [list(x.exps) for x in self.g],
            "chi": [list(x.exps) for x in self.chi],
            "cartan": [list(r) for r in self.cartan],
            "components": [component_type(self.cartan, c) for c in comps],
            "N": list(self.N),
            "positive_roots": len(self.roots.roots),
            "dimension": self.dimension,
        }


def datum_violations(
    group: FiniteAbelianGroup,
    g: Sequence[GroupElement],
    chi: Sequence[Character],
    cartan: Matrix,
    linking=None,
    rootparams=None,
) -> list[str]:
    out = []
    theta = len(cartan)
    if len(g) != theta or len(chi) != theta:
        return [f"expected {theta} grouplikes and characters, got {len(g)} and {len(chi)}"]
    out += cartan_violations(cartan)
    if _nonzero(linking):
        out.append("unsupported lifting: nonzero linking parameters λ")
    if _nonzero(rootparams):
        out.append("unsupported lifting: nonzero root-vector parameters μ")
    if any(x.group != group for x in (*g, *chi)):
        return out + ["grouplikes and characters must live over the datum's group"]
    q = [[pair(chi[j], g[i]) for j in range(theta)] for i in range(theta)]
    for i in range(theta):
        if q[i][i] == 1:
            out.append(f"χ_i(g_i) ≠ 1 violated at i={i + 1}")
    if any(s.startswith(("a_", "Cartan matrix")) for s in out):
        return out
    for i in range(theta):
        for j in range(theta):
            lhs = q[i][j] * q[j][i]
            rhs = q[i][i] ** cartan[i][j]
            if lhs != rhs:
                out.append(
                    f"Cartan condition χ_j(g_i)χ_i(g_j) = χ_i(g_i)^a_ij violated at (i,j)=({i + 1},{j + 1}): "
                    f"{lhs} ≠ {rhs}"
                )
    if any("≠ 1 violated" in s for s in out):
        return out
    orders = [multiplicative_order(q[i][i]) for i in range(theta)]
    finite = not any(s.startswith("finite type") for s in out)
    for comp in components(cartan):
        ns = {orders[i] for i in comp}
        if len(ns) > 1:
            out.append(f"order of χ_i(g_i) must be constant on component {[i + 1 for i in comp]}, got {sorted(ns)}")
        if len(comp) == 1:
            continue
        for i in comp:
            if orders[i] % 2 == 0:
                out.append(f"order N_i odd violated at i={i + 1} (N_i={orders[i]})")
        if finite and component_type(cartan, comp) == "G2":
            for i in comp:
                if orders[i] % 3 == 0:
                    out.append(f"order N_i prime to 3 in G2 component violated at i={i + 1}")
    return out


def _nonzero(params) -> bool:
    if params is None:
        return False
    if isinstance(params, dict):
        return any(_nonzero(v) for v in params.values())
    if isinstance(params, (list, tuple)):
        return any(_nonzero(v) for v in params)
    return bool(params)


def validate_datum(
    group: FiniteAbelianGroup | Sequence[int],
    g: Sequence,
    chi: Sequence,
    cartan: Sequence[Sequence[int]],
    linking=None,
    rootparams=None,
    name: str = "",
) -> CartanDatum:
    """Check every defining invariant and return the datum, or raise DatumError."""
    if not isinstance(group, FiniteAbelianGroup):
        group = FiniteAbelianGroup(tuple(group))
    try:
        gs = tuple(x if isinstance(x, GroupElement) else group.element(x) for x in g)
        chis = tuple(x if isinstance(x, Character) else group.character(x) for x in chi)
    except ValueError as exc:
        raise DatumError([str(exc)]) from exc
    cartan = as_matrix(cartan)
    bad = datum_violations(group, gs, chis, cartan, linking, rootparams)
    if bad:
        raise DatumError(bad)
    return CartanDatum(group, gs, chis, cartan, name=name)


# -------------------------------------------------------------- derived data

def dual_datum(d: CartanDatum) -> CartanDatum:
    """Datum over G^ with grouplikes chi_i and characters hat(g_i)."""
    return validate_datum(
        d.group,
        [unhat(c) for c in d.chi],
        [hat(x) for x in d.g],
        d.cartan,
        name=f"dual({d.name})" if d.name else "dual",
    )


def double_datum(d: CartanDatum) -> tuple[CartanDatum, tuple[tuple[int, ...], ...]]:
    """The 2θ-datum over G x G^ together with its linking matrix."""
    theta = d.theta
    big = d.group.product(d.group)
    zero = (0,) * d.group.rank
    neg = lambda v: tuple(-x for x in v)  # noqa: E731
    a = [x.exps + zero for x in d.g] + [zero + neg(c.exps) for c in d.chi]
    mu = [c.exps + neg(x.exps) for c, x in zip(d.chi, d.g)]
    mu += [neg(c.exps) + x.exps for c, x in zip(d.chi, d.g)]
    b = [[0] * (2 * theta) for _ in range(2 * theta)]
    for i in range(theta):
        for j in range(theta):
            b[i][j] = b[theta + i][theta + j] = d.cartan[i][j]
    link = tuple(
        tuple(1 if j == i + theta else 0 for j in range(2 * theta)) for i in range(2 * theta)
    )
    dd = validate_datum(big, a, mu, b, name=f"double({d.name})" if d.name else "double")
    return dd, link


def euler_form(cartan: Matrix, d: Sequence[int], i: int, j: int) -> int:
    if i < j:
        return d[i] * cartan[i][j]
    if i == j:
        return d[i]
    return 0


def two_param_datum(
    cartan: Sequence[Sequence[int]],
    d: Sequence[int] | None,
    N: int,
    r_exp: int,
    s_exp: int,
) -> CartanDatum:
    """G = Z_N^θ, g_i the generators and chi_i(g_j) = r^<i,j> s^-<j,i>."""
    cartan = as_matrix(cartan)
    bad = cartan_violations(cartan)
    if bad:
        raise DatumError(bad)
    if d is None:
        d = symmetrizer(cartan)
    d = tuple(d)
    if math.gcd(r_exp - s_exp, N) != 1:
        raise DatumError([f"r s^-1 = ζ_{N}^{r_exp - s_exp} does not have order {N}"])
    theta = len(cartan)
    group = FiniteAbelianGroup((N,) * theta)
    gs = [tuple(1 if k == i else 0 for k in range(theta)) for i in range(theta)]
    chis = [
        [r_exp * euler_form(cartan, d, i, j) - s_exp * euler_form(cartan, d, j, i) for j in range(theta)]
        for i in range(theta)
    ]
    return validate_datum(group, gs, chis, cartan, name=f"two_param(N={N},r={r_exp},s={s_exp})")


# ---------------------------------------------------------- named examples

CARTAN_TYPES: dict[str, Matrix] = {
    "A1": ((2,),),
    "A1xA1": ((2, 0), (0, 2)),
    "A2": ((2, -1), (-1, 2)),
    "B2": ((2, -1), (-2, 2)),
    "G2": ((2, -1), (-3, 2)),
    "A3": ((2, -1, 0), (-1, 2, -1), (0, -1, 2)),
    "A2xA1": ((2, -1, 0), (-1, 2, 0), (0, 0, 2)),
}


def taft_datum(N: int) -> CartanDatum:
    return validate_datum([N], [[1]], [[1]], [[2]], name=f"taft{N}")


def group_algebra_datum(invariants: Sequence[int] = (2,)) -> CartanDatum:
    return validate_datum(list(invariants), [], [], [], name="group-algebra")


def a2_datum() -> CartanDatum:
    return validate_datum([3, 3], [[1, 0], [0, 1]], [[1, 2], [0, 1]], CARTAN_TYPES["A2"], name="a2_33")
