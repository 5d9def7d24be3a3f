"""Finite-dimensional Hopf algebras given by structure constants on a basis."""

from __future__ import annotations

import json
from typing import Callable, Iterable, Mapping

from ..cyclotomic import CycNum
from ..linalg import add_into

Elem = dict  # basis index -> CycNum
Tensor = dict  # tuple of basis indices -> CycNum


class StructureTables:
    """Hopf algebra on basis 0..dim-1.

    Subclasses provide the four basis-level maps; everything else is derived
    by bilinear extension.  Basis maps may be computed lazily and memoized.
    """

    dim: int
    conductor: int

    def __init__(self, dim: int, conductor: int, labels: list[str] | None = None):
        self.dim = dim
        self.conductor = conductor
        self._labels = labels
        self._mult_memo: dict[tuple[int, int], Elem] = {}
        self._comult_memo: dict[int, Tensor] = {}
        self._antipode_memo: dict[int, Elem] = {}
        self._antipode_inv_memo: dict[int, Elem] = {}

    # --------------------------------------------------------------- scalars
    def scalar(self, x) -> CycNum:
        if isinstance(x, CycNum):
            return x if x.n == self.conductor else x.embed(self.conductor)
        return CycNum.rational(x, self.conductor)

    def label(self, i: int) -> str:
        return self._labels[i] if self._labels else f"b{i}"

    # ------------------------------------------------------ basis primitives
    def _mult(self, i: int, j: int) -> Elem:
        raise NotImplementedError

    def _comult(self, i: int) -> Tensor:
        raise NotImplementedError

    def _counit(self, i: int) -> CycNum:
        raise NotImplementedError

    def _antipode(self, i: int) -> Elem:
        raise NotImplementedError

    def _antipode_inv(self, i: int) -> Elem:
        raise NotImplementedError

    def unit(self) -> Elem:
        raise NotImplementedError

    def mult_basis(self, i: int, j: int) -> Elem:
        key = (i, j)
        r = self._mult_memo.get(key)
        if r is None:
            r = self._mult_memo[key] = self._mult(i, j)
        return r

    def comult_basis(self, i: int) -> Tensor:
        r = self._comult_memo.get(i)
        if r is None:
            r = self._comult_memo[i] = self._comult(i)
        return r

    def counit_basis(self, i: int) -> CycNum:
        return self._counit(i)

    def antipode_basis(self, i: int) -> Elem:
        r = self._antipode_memo.get(i)
        if r is None:
            r = self._antipode_memo[i] = self._antipode(i)
        return r

    def antipode_inv_basis(self, i: int) -> Elem:
        r = self._antipode_inv_memo.get(i)
        if r is None:
            r = self._antipode_inv_memo[i] = self._antipode_inv(i)
        return r

    # ------------------------------------------------------- bilinear extension
    def one(self) -> Elem:
        return dict(self.unit())

    def basis(self, i: int) -> Elem:
        return {i: self.scalar(1)}

    def multiply(self, a: Mapping, b: Mapping) -> Elem:
        acc: Elem = {}
        for i, x in a.items():
            for j, y in b.items():
                add_into(acc, self.mult_basis(i, j), x * y)
        return acc

    def product(self, *elems: Mapping) -> Elem:
        acc = self.one()
        for e in elems:
            acc = self.multiply(acc, e)
        return acc

    def power(self, a: Mapping, n: int) -> Elem:
        acc = self.one()
        for _ in range(n):
            acc = self.multiply(acc, a)
        return acc

    def comultiply(self, a: Mapping) -> Tensor:
        acc: Tensor = {}
        for i, x in a.items():
            add_into(acc, self.comult_basis(i), x)
        return acc

    def counit(self, a: Mapping) -> CycNum:
        acc = self.scalar(0)
        for i, x in a.items():
            c = self.counit_basis(i)
            if c:
                acc = acc + x * c
        return acc

    def antipode(self, a: Mapping) -> Elem:
        acc: Elem = {}
        for i, x in a.items():
            add_into(acc, self.antipode_basis(i), x)
        return acc

    def antipode_inv(self, a: Mapping) -> Elem:
        acc: Elem = {}
        for i, x in a.items():
            add_into(acc, self.antipode_inv_basis(i), x)
        return acc

    def add(self, *elems: Mapping, coeffs: Iterable | None = None) -> Elem:
        acc: Elem = {}
        coeffs = list(coeffs) if coeffs is not None else [1] * len(elems)
        for c, e in zip(coeffs, elems):
            add_into(acc, e, c)
        return acc

    def commutator(self, a: Mapping, b: Mapping) -> Elem:
        return add_into(self.multiply(a, b), self.multiply(b, a), -1)

    def hopf_ad(self, a: Mapping, b: Mapping) -> Elem:
        """ad(a)(b) = a_1 b S(a_2)."""
        acc: Elem = {}
        for (i, j), c in self.comultiply(a).items():
            add_into(acc, self.multiply(self.multiply(self.basis(i), b), self.antipode_basis(j)), c)
        return acc

    # ----------------------------------------------------------- tensors
    def tensor_multiply(self, s: Mapping, t: Mapping) -> Tensor:
        """Product in the n-fold tensor power (componentwise)."""
        acc: Tensor = {}
        for ks, x in s.items():
            for kt, y in t.items():
                c = x * y
                parts = [self.mult_basis(a, b) for a, b in zip(ks, kt)]
                _accumulate_product(acc, parts, c)
        return acc

    def tensor_map(self, t: Mapping, maps: list[Callable[[int], Mapping] | None]) -> Tensor:
        """Apply basis maps factorwise (None = identity)."""
        acc: Tensor = {}
        for key, c in t.items():
            parts = [({k: 1} if f is None else f(k)) for f, k in zip(maps, key)]
            _accumulate_product(acc, parts, c)
        return acc

    def comultiply_at(self, t: Mapping, pos: int) -> Tensor:
        """Apply Δ to tensor factor ``pos``."""
        acc: Tensor = {}
        for key, c in t.items():
            for (a, b), d in self.comult_basis(key[pos]).items():
                nk = key[:pos] + (a, b) + key[pos + 1 :]
                add_into(acc, {nk: c * d})
        return acc

    def flip(self, t: Mapping) -> Tensor:
        return {(b, a): c for (a, b), c in t.items()}

    def element_str(self, a: Mapping) -> str:
        if not a:
            return "0"
        parts = []
        for i in sorted(a):
            parts.append(f"({a[i]})*{self.label(i)}")
        return " + ".join(parts)

    # -------------------------------------------------------------- export
    def to_json(self, meta: dict | None = None) -> dict:
        """Full structure constants (only sensible for small dim)."""
        mult = []
        for i in range(self.dim):
            for j in range(self.dim):
                for k, c in sorted(self.mult_basis(i, j).items()):
                    mult.append([i, j, k, c.to_json()])
        comult = []
        for i in range(self.dim):
            for (a, b), c in sorted(self.comult_basis(i).items()):
                comult.append([i, a, b, c.to_json()])
        counit = []
        for i in range(self.dim):
            c = self.counit_basis(i)
            if c:
                counit.append([i, c.to_json()])
        antipode = []
        for i in range(self.dim):
            for k, c in sorted(self.antipode_basis(i).items()):
                antipode.append([i, k, c.to_json()])
        return {
            "format": "hopf-structure-constants/1",
            "dim": self.dim,
            "conductor": self.conductor,
            "labels": [self.label(i) for i in range(self.dim)],
            "unit": [[k, c.to_json()] for k, c in sorted(self.unit().items())],
            "mult": mult,
            "comult": comult,
            "counit": counit,
            "antipode": antipode,
            "meta": meta or {},
        }


def _accumulate_product(acc: Tensor, parts: list[Mapping], c) -> None:
    keys: list[tuple[tuple, object]] = [((), c)]
    for part in parts:
        keys = [(k + (i,), x * y) for k, x in keys for i, y in part.items()]
    for k, x in keys:
        cur = acc.get(k)
        if cur is None:
            if x:
                acc[k] = x
        else:
            s = cur + x
            if s:
                acc[k] = s
            else:
                del acc[k]


class TabulatedHopf(StructureTables):
    """Structure constants held in explicit tables."""

    def __init__(
        self,
        dim: int,
        conductor: int,
        mult: dict[tuple[int, int], Elem],
        comult: list[Tensor],
        counit: list[CycNum],
        antipode: list[Elem],
        unit: Elem,
        labels: list[str] | None = None,
        antipode_inv: list[Elem] | None = None,
    ):
        super().__init__(dim, conductor, labels)
        self._mult_table = mult
        self._comult_table = comult
        self._counit_table = counit
        self._antipode_table = antipode
        self._antipode_inv_table = antipode_inv
        self._unit = unit

    def _mult(self, i, j):
        return self._mult_table.get((i, j), {})

    def _comult(self, i):
        return self._comult_table[i]

    def _counit(self, i):
        return self._counit_table[i]

    def _antipode(self, i):
        return self._antipode_table[i]

    def _antipode_inv(self, i):
        if self._antipode_inv_table is None:
            self._antipode_inv_table = invert_antipode(self)
        return self._antipode_inv_table[i]

    def unit(self):
        return self._unit

    @classmethod
    def tabulate(cls, h: StructureTables) -> TabulatedHopf:
        mult = {}
        for i in range(h.dim):
            for j in range(h.dim):
                r = h.mult_basis(i, j)
                if r:
                    mult[(i, j)] = r
        return cls(
            h.dim,
            h.conductor,
            mult,
            [h.comult_basis(i) for i in range(h.dim)],
            [h.counit_basis(i) for i in range(h.dim)],
            [h.antipode_basis(i) for i in range(h.dim)],
            h.unit(),
            [h.label(i) for i in range(h.dim)],
        )

    @classmethod
    def from_json(cls, data: dict | str) -> TabulatedHopf:
        if isinstance(data, str):
            data = json.loads(data)
        dim = data["dim"]
        cyc = CycNum.from_json
        mult: dict[tuple[int, int], Elem] = {}
        for i, j, k, c in data["mult"]:
            mult.setdefault((i, j), {})[k] = cyc(c)
        comult: list[Tensor] = [{} for _ in range(dim)]
        for i, a, b, c in data["comult"]:
            comult[i][(a, b)] = cyc(c)
        counit = [CycNum.rational(0, data["conductor"]) for _ in range(dim)]
        for i, c in data["counit"]:
            counit[i] = cyc(c)
        antipode: list[Elem] = [{} for _ in range(dim)]
        for i, k, c in data["antipode"]:
            antipode[i][k] = cyc(c)
        unit = {k: cyc(c) for k, c in data["unit"]}
        return cls(dim, data["conductor"], mult, comult, counit, antipode, unit, data.get("labels"))


def invert_antipode(h: StructureTables) -> list[Elem]:
    """Columns of S^{-1} by exact linear solve."""
    from ..linalg import Echelon

    ech = Echelon(track=True)
    for i in range(h.dim):
        ech.insert(h.antipode_basis(i), label=i)
    if ech.rank != h.dim:
        raise ArithmeticError("antipode is not invertible")
    out = []
    for i in range(h.dim):
        out.append(ech.express({i: h.scalar(1)}))
    return out
