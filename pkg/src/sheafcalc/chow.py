"""Exact arithmetic in the Chow ring Z[h]/(h^{n+1}) of P^n.

Total Chern classes of line bundles, tangent/cotangent twists, and
shape-determined Chern classes of presented sheaves via the Whitney
formula.  Everything is arbitrary-precision integer arithmetic except
`hrr_chi`, which reduces an exact rational to an integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .sheaves import FreeComplex, Kind, SheafAtom, SheafSum


class DimensionMismatchError(ValueError):
    pass


class MalformedComplexError(ValueError):
    pass


@dataclass(frozen=True)
class ChowClass:
    """Sum c_0 + c_1 h + ... + c_n h^n with integer coefficients."""

    coeffs: tuple
    dim: int = 3

    def __init__(self, coeffs, dim: int = 3):
        if dim < 1:
            raise ValueError(f"ambient dimension must be positive, got {dim}")
        cs = [int(c) for c in coeffs]
        if len(cs) > dim + 1:
            raise ValueError(f"{len(cs)} coefficients for P^{dim}")
        cs.extend([0] * (dim + 1 - len(cs)))
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "dim", dim)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __mul__(self, other):
        return mul(self, other)

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0 and k > 0:
                continue
            sign = "- " if c < 0 else ("+ " if parts else "")
            mag = abs(c)
            if k == 0:
                body = str(c)
            else:
                v = "h" if k == 1 else f"h^{k}"
                body = v if mag == 1 else f"{mag}{v}"
            parts.append(sign + body if c >= 0 else f"- {body}")
        return " ".join(parts)


def one(dim: int = 3) -> ChowClass:
    return ChowClass([1], dim)


def mul(a: ChowClass, b: ChowClass) -> ChowClass:
    """Truncated convolution in Z[h]/(h^{dim+1})."""
    if a.dim != b.dim:
        raise DimensionMismatchError(f"P^{a.dim} vs P^{b.dim}")
    n = a.dim
    out = [0] * (n + 1)
    for i, ai in enumerate(a.coeffs):
        if ai == 0:
            continue
        for j in range(n + 1 - i):
            out[i + j] += ai * b.coeffs[j]
    return ChowClass(out, n)


def inv(c: ChowClass) -> ChowClass:
    """Unique u with c * u = 1; requires constant term 1."""
    if c[0] != 1:
        raise ValueError(f"constant term must be 1 to invert, got {c[0]}")
    n = c.dim
    u = [1] + [0] * n
    for k in range(1, n + 1):
        u[k] = -sum(c.coeffs[j] * u[k - j] for j in range(1, k + 1))
    return ChowClass(u, n)


def chern_of_atom(atom: SheafAtom, dim: int = 3) -> ChowClass:
    """O(a) -> 1+ah; T(a) via the twisted Euler sequence; Om(a) dual to T(-a)."""
    a = atom.twist
    if atom.kind is Kind.LINE:
        return ChowClass([1, a], dim)
    if dim != 3:
        raise DimensionMismatchError("tangent/cotangent atoms only supported on P^3")
    if atom.kind is Kind.TANGENT:
        c = one(dim)
        for _ in range(dim + 1):
            c = mul(c, ChowClass([1, a + 1], dim))
        return mul(c, inv(ChowClass([1, a], dim)))
    # cotangent: c_k(Om(a)) = (-1)^k c_k(T(-a))
    t = chern_of_atom(SheafAtom(Kind.TANGENT, -a), dim)
    return ChowClass([(-1) ** k * ck for k, ck in enumerate(t.coeffs)], dim)


def chern_of_sum(s: SheafSum, dim: int = 3) -> ChowClass:
    c = one(dim)
    for atom, m in s.terms:
        ca = chern_of_atom(atom, dim)
        for _ in range(m):
            c = mul(c, ca)
    return c


def chern_from_complex(C: FreeComplex, dim: int = 3) -> ChowClass:
    """Alternating Whitney product over positions (0 nearest the sheaf)."""
    if not C.exact:
        raise MalformedComplexError("Chern classes require an exact complex")
    even = one(dim)
    odd = one(dim)
    for i, s in C.positions():
        c = chern_of_sum(s, dim)
        if i % 2 == 0:
            even = mul(even, c)
        else:
            odd = mul(odd, c)
    return mul(even, inv(odd))


def rank_of_complex(C: FreeComplex, dim: int = 3) -> int:
    r = sum((-1) ** i * s.rank(dim) for i, s in C.positions())
    if r < 0:
        raise MalformedComplexError(f"alternating rank sum is {r} < 0")
    return r


def _binom(m: int, j: int) -> int:
    # generalized binomial: falling factorial over j!, valid for virtual
    # ranks where m may be smaller than j or negative
    if j < 0:
        return 0
    num = 1
    for s in range(j):
        num *= m - s
    return num // factorial(j)


def twist(c: ChowClass, rank: int, t: int) -> ChowClass:
    """Chern class of the t-twist: c_k(E(t)) = sum C(rank-i, k-i) c_i t^{k-i}."""
    if c[0] != 1:
        raise ValueError("twist requires a total Chern class (c_0 = 1)")
    if rank < 0:
        raise ValueError(f"rank must be nonnegative, got {rank}")
    n = c.dim
    out = []
    for k in range(n + 1):
        out.append(
            sum(
                _binom(rank - i, k - i) * c.coeffs[i] * t ** (k - i)
                for i in range(k + 1)
            )
        )
    return ChowClass(out, n)


def hrr_chi(rank: int, c: ChowClass) -> int:
    """Euler characteristic on P^3 by Riemann-Roch; exact, integer-checked."""
    if c.dim != 3:
        raise DimensionMismatchError("Riemann-Roch oracle is for P^3 only")
    if c[0] != 1:
        raise ValueError("total Chern class must have c_0 = 1")
    c1, c2, c3 = c.coeffs[1], c.coeffs[2], c.coeffs[3]
    ch1 = Fraction(c1)
    ch2 = Fraction(c1 * c1 - 2 * c2, 2)
    ch3 = Fraction(c1 ** 3 - 3 * c1 * c2 + 3 * c3, 6)
    # td(P^3) = 1 + 2h + (11/6)h^2 + h^3
    chi = rank + ch1 * Fraction(11, 6) + ch2 * 2 + ch3
    if chi.denominator != 1:
        raise ValueError(f"non-integral chi {chi} for rank {rank}, c = {c}")
    return int(chi)


def factor_line(c: ChowClass, rank: int, bound: int = 10):
    """All a with |a| <= bound such that c = (1+ah) * (class of rank-1 lower degree).

    Returns (a, quotient) pairs ascending in a; quotient coefficients
    vanish above degree rank-1.
    """
    if c[0] != 1:
        raise ValueError("factor_line requires c_0 = 1")
    if rank < 2:
        raise ValueError(f"rank must be at least 2, got {rank}")
    found = []
    for a in range(-bound, bound + 1):
        q = mul(inv(ChowClass([1, a], c.dim)), c)
        if all(q.coeffs[k] == 0 for k in range(rank, c.dim + 1)):
            found.append((a, q))
    return found
