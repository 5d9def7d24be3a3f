"""Exact sparse linear algebra over Q and Q(zeta_n).

Vectors are ``dict[key, scalar]`` with no stored zeros.  The scalars only
need field operations, so the same routines serve ``Fraction`` and
``CycNum`` entries.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Hashable, Iterable, Mapping, Sequence

Vec = dict


def invert(x: Any) -> Any:
    if isinstance(x, (int, Fraction)):
        return Fraction(1) / x
    return x.inverse()


def add_into(acc: dict, vec: Mapping, scale: Any = 1) -> dict:
    """acc += scale * vec, dropping zeros; returns acc."""
    for k, v in vec.items():
        t = v if scale == 1 else v * scale
        cur = acc.get(k)
        if cur is None:
            if t:
                acc[k] = t
        else:
            s = cur + t
            if s:
                acc[k] = s
            else:
                del acc[k]
    return acc


def scale(vec: Mapping, c: Any) -> dict:
    if not c:
        return {}
    return {k: v * c for k, v in vec.items()}


def combine(pairs: Iterable[tuple[Any, Mapping]]) -> dict:
    """Sum of c * v over (c, v) pairs."""
    acc: dict = {}
    for c, v in pairs:
        if c:
            add_into(acc, v, c)
    return acc


def is_zero(vec: Mapping) -> bool:
    return not any(vec.values())


def vec_equal(a: Mapping, b: Mapping) -> bool:
    return is_zero(add_into(dict(a), b, -1))


def proportional(a: Mapping, b: Mapping) -> Any | None:
    """c with a == c * b, or None (b must be nonzero)."""
    if not b:
        return None
    k = next(iter(b))
    c = a.get(k, 0) / b[k] if k in a else 0
    return c if vec_equal(a, scale(b, c)) else None


class Echelon:
    """Incremental row-echelon form of sparse vectors.

    Each stored row has a pivot key with coefficient 1; new vectors are
    reduced against the stored rows.  Rows also carry the combination of
    input vectors that produced them, so solutions can be read off.
    """

    def __init__(self, track: bool = False):
        self.rows: dict[Hashable, dict] = {}
        self.combos: dict[Hashable, dict] = {}
        self.order: list[Hashable] = []
        self.track = track
        self.count = 0

    def reduce(self, vec: Mapping, combo: dict | None = None) -> tuple[dict, dict | None]:
        v = dict(vec)
        c = combo
        changed = True
        while changed:
            changed = False
            for k in list(v.keys()):
                if k in v and k in self.rows:
                    f = v[k]
                    add_into(v, self.rows[k], -f)
                    if c is not None:
                        add_into(c, self.combos[k], -f)
                    changed = True
        return v, c

    def insert(self, vec: Mapping, label: Hashable | None = None) -> bool:
        """Add vec; returns True when it was independent of earlier rows."""
        combo = {label if label is not None else self.count: 1} if self.track else None
        self.count += 1
        v, c = self.reduce(vec, combo)
        if not v:
            return False
        piv = min(v.keys(), key=_sort_key)
        inv = invert(v[piv])
        v = scale(v, inv)
        if c is not None:
            c = scale(c, inv)
        # keep rows fully reduced with respect to the new pivot
        for k, row in self.rows.items():
            f = row.get(piv)
            if f:
                add_into(row, v, -f)
                if c is not None:
                    add_into(self.combos[k], c, -f)
        self.rows[piv] = v
        if c is not None:
            self.combos[piv] = c
        self.order.append(piv)
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)

    def express(self, vec: Mapping) -> dict | None:
        """Coefficients over the inserted labels writing vec, or None."""
        if not self.track:
            raise ValueError("express needs a tracking echelon")
        acc: dict = {}
        v, _ = self.reduce(vec, None)
        if v:
            return None
        # vec = sum over pivots of vec-coefficients along the reduced rows
        rem = dict(vec)
        for piv in self.order:
            f = rem.get(piv)
            if f:
                add_into(rem, self.rows[piv], -f)
                add_into(acc, self.combos[piv], f)
        return acc if not rem else None


def _sort_key(k: Hashable):
    return (0, k) if isinstance(k, int) else (1, repr(k))


def rank(vectors: Iterable[Mapping]) -> int:
    ech = Echelon()
    for v in vectors:
        ech.insert(v)
    return ech.rank


def nullspace(vectors: Sequence[Mapping]) -> list[dict]:
    """Basis of {c : sum_i c_i vectors[i] = 0}, as dicts over indices."""
    ech = Echelon(track=True)
    out = []
    for i, v in enumerate(vectors):
        combo = {i: 1}
        r, c = ech.reduce(v, combo)
        if not r:
            out.append(c)
        else:
            ech.insert(v, label=i)
    return out


def solve_dense(rows: Sequence[Sequence[Any]], rhs: Sequence[Any]) -> list | None:
    """Solve a square or overdetermined dense system M x = b exactly.

    Returns one solution (free variables set to 0) or None if inconsistent.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for col in range(n):
        p = next((i for i in range(r, m) if aug[i][col]), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        inv = invert(aug[r][col])
        aug[r] = [x * inv for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][col]:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][n]:
            return None
    sol = [Fraction(0)] * n
    for i, col in enumerate(pivots):
        sol[col] = aug[i][n]
    return sol
