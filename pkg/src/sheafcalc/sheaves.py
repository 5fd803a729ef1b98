"""Formal sheaf presentations: atoms, direct sums, exact complexes.

Complexes carry no differentials, only shapes; every downstream
computation is either shape-determined (Chern classes, chi) or guarded
(h0).  Twisting is componentwise, and resolutions of bundles are built
from curve resolutions by a mapping cone that adjoins trivial summands.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .betti import BettiTable, max_gen_degree


class Kind(enum.IntEnum):
    # sort order fixes the canonical display: T(-2) + O(-1), 5O + O(1)
    TANGENT = 0
    COTANGENT = 1
    LINE = 2


_SYMBOL = {Kind.TANGENT: "T", Kind.COTANGENT: "Om", Kind.LINE: "O"}


@dataclass(frozen=True, order=True)
class SheafAtom:
    kind: Kind
    twist: int

    def twisted(self, t: int) -> "SheafAtom":
        return SheafAtom(self.kind, self.twist + t)

    def rank(self, dim: int = 3) -> int:
        return 1 if self.kind is Kind.LINE else dim

    def __add__(self, other):
        return SheafSum([self]) + other

    def __str__(self):
        sym = _SYMBOL[self.kind]
        return sym if self.twist == 0 else f"{sym}({self.twist})"


def line(a: int) -> SheafAtom:
    return SheafAtom(Kind.LINE, a)


def tangent(a: int) -> SheafAtom:
    return SheafAtom(Kind.TANGENT, a)


def cotangent(a: int) -> SheafAtom:
    return SheafAtom(Kind.COTANGENT, a)


@dataclass(frozen=True)
class SheafSum:
    """Multiset of atoms with multiplicities, kept in canonical order."""

    terms: tuple = ()

    def __init__(self, terms=()):
        merged = {}
        for item in terms:
            if isinstance(item, SheafAtom):
                atom, mult = item, 1
            else:
                atom, mult = item
            if mult == 0:
                continue
            if mult < 0:
                raise ValueError(f"multiplicity must be positive, got {mult}")
            merged[atom] = merged.get(atom, 0) + mult
        canon = tuple(sorted(merged.items()))
        object.__setattr__(self, "terms", canon)

    def __add__(self, other) -> "SheafSum":
        if isinstance(other, SheafAtom):
            other = SheafSum([other])
        return SheafSum(self.terms + other.terms)

    def twisted(self, t: int) -> "SheafSum":
        return SheafSum(tuple((a.twisted(t), m) for a, m in self.terms))

    def rank(self, dim: int = 3) -> int:
        return sum(m * a.rank(dim) for a, m in self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(
            (str(a) if m == 1 else f"{m}{a}") for a, m in self.terms
        )


@dataclass(frozen=True)
class FreeComplex:
    """Exact sequence 0 -> F_k -> ... -> F_0 -> presented -> 0.

    ``terms`` is in written order (F_k first); position 0 is the term
    adjacent to the presented sheaf.
    """

    terms: tuple
    presented: str = "E"
    exact: bool = True

    def __post_init__(self):
        if not self.terms:
            raise ValueError("complex must have at least one term")
        object.__setattr__(self, "terms", tuple(self.terms))

    def positions(self):
        """Yield (i, F_i) with i = 0 nearest the presented sheaf."""
        n = len(self.terms)
        for idx, s in enumerate(self.terms):
            yield n - 1 - idx, s

    def term(self, i: int) -> SheafSum:
        return self.terms[len(self.terms) - 1 - i]

    @property
    def length(self) -> int:
        return len(self.terms) - 1

    def __str__(self):
        from .grammar import format_complex

        return format_complex(self)


def twist_complex(C: FreeComplex, t: int) -> FreeComplex:
    """Twist every term by t; presents the t-twist of the presented sheaf."""
    return FreeComplex(tuple(s.twisted(t) for s in C.terms), C.presented, C.exact)


def complex_from_betti(B: BettiTable, presented: str = "I_Y") -> FreeComplex:
    """Free complex of the ideal sheaf: F_i = sum_j beta_{i,j} O(-j)."""
    by_i = {}
    for i, j, mult in B.entries:
        by_i.setdefault(i, []).append((line(-j), mult))
    top = max(by_i)
    terms = tuple(SheafSum(by_i.get(i, ())) for i in range(top, -1, -1))
    return FreeComplex(terms, presented)


def mapping_cone_bundle(B: BettiTable, r: int) -> FreeComplex:
    """Resolution of the rank-r bundle built on a curve with cubic ideal.

    Twist the curve-ideal resolution by 3 and adjoin (r-1) trivial
    summands in position 0, per the dependency-locus sequence
    0 -> (r-1)O -> E -> I_Y(3) -> 0.
    """
    if r < 2:
        raise ValueError(f"rank must be at least 2, got {r}")
    mgd = max_gen_degree(B)
    if mgd > 3:
        raise ValueError(
            f"ideal has a generator of degree {mgd} > 3; "
            "the twisted ideal sheaf cannot be globally generated"
        )
    tw = twist_complex(complex_from_betti(B), 3)
    terms = list(tw.terms)
    terms[-1] = terms[-1] + SheafSum([(line(0), r - 1)])
    return FreeComplex(tuple(terms), "E")
