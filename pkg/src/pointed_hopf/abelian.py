"""Finite abelian groups in invariant-factor form and their characters."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .cyclotomic import CycNum, zeta

DEFAULT_ENUMERATION_CAP = 10**6


class GroupMismatch(ValueError):
    pass


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Z_{m_1} x ... x Z_{m_r}; the trivial group has no invariants."""

    invariants: tuple[int, ...] = ()

    def __post_init__(self):
        inv = tuple(int(m) for m in self.invariants)
        if any(m < 2 for m in inv):
            raise ValueError(f"invariants must be >= 2, got {inv}")
        object.__setattr__(self, "invariants", inv)

    @property
    def rank(self) -> int:
        return len(self.invariants)

    @property
    def order(self) -> int:
        return math.prod(self.invariants)

    @property
    def exponent(self) -> int:
        return math.lcm(*self.invariants) if self.invariants else 1

    def element(self, exps: Sequence[int]) -> GroupElement:
        return GroupElement(self, self._reduce(exps))

    def character(self, exps: Sequence[int]) -> Character:
        return Character(self, self._reduce(exps))

    def identity(self) -> GroupElement:
        return GroupElement(self, (0,) * self.rank)

    def trivial_character(self) -> Character:
        return Character(self, (0,) * self.rank)

    def _reduce(self, exps: Sequence[int]) -> tuple[int, ...]:
        exps = tuple(int(e) for e in exps)
        if len(exps) != self.rank:
            raise GroupMismatch(f"expected {self.rank} exponents for {self}, got {exps}")
        return tuple(e % m for e, m in zip(exps, self.invariants))

    def exponent_tuples(self, cap: int = DEFAULT_ENUMERATION_CAP) -> Iterator[tuple[int, ...]]:
        if self.order > cap:
            raise OverflowError(f"group order {self.order} exceeds enumeration cap {cap}")
        return itertools.product(*(range(m) for m in self.invariants))

    def index(self, exps: Sequence[int]) -> int:
        """Position in the lexicographic enumeration."""
        idx = 0
        for e, m in zip(exps, self.invariants):
            idx = idx * m + e % m
        return idx

    def from_index(self, idx: int) -> tuple[int, ...]:
        out = []
        for m in reversed(self.invariants):
            idx, r = divmod(idx, m)
            out.append(r)
        return tuple(reversed(out))

    def product(self, other: FiniteAbelianGroup) -> FiniteAbelianGroup:
        return FiniteAbelianGroup(self.invariants + other.invariants)

    def __str__(self) -> str:
        return " x ".join(f"Z{m}" for m in self.invariants) or "1"


def enumerate_group(group: FiniteAbelianGroup, cap: int = DEFAULT_ENUMERATION_CAP) -> list[GroupElement]:
    return [GroupElement(group, e) for e in group.exponent_tuples(cap)]


def enumerate_characters(group: FiniteAbelianGroup, cap: int = DEFAULT_ENUMERATION_CAP) -> list[Character]:
    return [Character(group, e) for e in group.exponent_tuples(cap)]


@dataclass(frozen=True)
class _Exps:
    group: FiniteAbelianGroup
    exps: tuple[int, ...]

    def _check(self, other: _Exps) -> None:
        if type(other) is not type(self) or other.group != self.group:
            raise GroupMismatch(f"cannot combine {self!r} and {other!r}")

    def __mul__(self, other):
        self._check(other)
        return type(self)(self.group, self.group._reduce(a + b for a, b in zip(self.exps, other.exps)))

    def __pow__(self, k: int):
        return type(self)(self.group, self.group._reduce(a * k for a in self.exps))

    def inverse(self):
        return self**-1

    def is_identity(self) -> bool:
        return not any(self.exps)

    def order(self) -> int:
        o = 1
        for e, m in zip(self.exps, self.group.invariants):
            o = math.lcm(o, m // math.gcd(m, e))
        return o

    @property
    def index(self) -> int:
        return self.group.index(self.exps)

    def __iter__(self):
        return iter(self.exps)

    def __repr__(self) -> str:
        return f"{type(self).__name__}{list(self.exps)}"


class GroupElement(_Exps):
    """An element of G as an exponent vector."""


class Character(_Exps):
    """A character of G; exponent c_j means generator j goes to zeta_{m_j}^{c_j}."""

    def __call__(self, g: GroupElement) -> CycNum:
        return pair(self, g)


def pair_exponent(group: FiniteAbelianGroup, chi: Sequence[int], g: Sequence[int]) -> int:
    """k with chi(g) = zeta_e^k, e the exponent of the group."""
    e = group.exponent
    return sum(c * x * (e // m) for c, x, m in zip(chi, g, group.invariants)) % e


def pair(chi: Character, g: GroupElement) -> CycNum:
    """chi(g) in Q(zeta_e), e the group exponent."""
    if chi.group != g.group:
        raise GroupMismatch(f"{chi!r} and {g!r} live over different groups")
    return zeta(chi.group.exponent, pair_exponent(chi.group, chi.exps, g.exps))


def hat(g: GroupElement) -> Character:
    """The character chi -> chi(g) of G^, written against the same invariants."""
    return Character(g.group, g.exps)


def unhat(chi: Character) -> GroupElement:
    return GroupElement(chi.group, chi.exps)
