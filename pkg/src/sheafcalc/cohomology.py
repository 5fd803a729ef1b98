"""Exact cohomology of atoms on P^n and guarded h0 from resolutions.

Line-bundle dimensions are the standard binomial counts; tangent and
cotangent twists on P^3 come from the Euler sequence and Serre duality.
h0 of a presented sheaf is shape-determined only when the long exact
sequences collapse; otherwise the computation reports Indeterminate.
"""

from __future__ import annotations

from math import comb

from .polynomial import Poly, chi_line_poly
from .sheaves import FreeComplex, Kind, SheafAtom


class _Indeterminate:
    """Sentinel: the shape of the resolution does not determine h0."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Indeterminate"

    def __bool__(self):
        return False


INDETERMINATE = _Indeterminate()


def h_line(n: int, i: int, a: int) -> int:
    """h^i(P^n, O(a)); nonzero only at i = 0 and i = n."""
    if n < 1:
        raise ValueError(f"ambient dimension must be positive, got {n}")
    if not 0 <= i <= n:
        raise ValueError(f"cohomological index {i} out of range for P^{n}")
    if i == 0:
        return comb(a + n, n) if a >= 0 else 0
    if i == n:
        return comb(-a - 1, n) if a <= -n - 1 else 0
    return 0


def _h0_tangent(a: int) -> int:
    # Euler sequence 0 -> O(a) -> 4O(a+1) -> T(a) -> 0 with h^1(O) = 0
    return max(0, 4 * h_line(3, 0, a + 1) - h_line(3, 0, a))


def _h0_cotangent(a: int) -> int:
    # dual Euler sequence 0 -> Om(a) -> 4O(a-1) -> O(a) -> 0
    return max(0, 4 * h_line(3, 0, a - 1) - h_line(3, 0, a))


def _h_tangent(i: int, a: int) -> int:
    if i == 0:
        return _h0_tangent(a)
    if i == 1:
        return 0
    if i == 2:
        # Serre-dual of h^1(Om) = 1 exactly at the untwisted cotangent bundle
        return 1 if a == -4 else 0
    return _h0_cotangent(-a - 4)


def h_atom(i: int, atom: SheafAtom) -> int:
    """h^i(P^3, atom)."""
    if atom.kind is Kind.LINE:
        return h_line(3, i, atom.twist)
    if not 0 <= i <= 3:
        raise ValueError(f"cohomological index {i} out of range for P^3")
    if atom.kind is Kind.TANGENT:
        return _h_tangent(i, atom.twist)
    # h^i(Om(a)) = h^{3-i}(T(-a-4)) by Serre duality
    return _h_tangent(3 - i, -atom.twist - 4)


def h0_sum(s, t: int = 0) -> int:
    return sum(m * h_atom(0, a.twisted(t)) for a, m in s.terms)


def chi_atom_poly(atom: SheafAtom) -> Poly:
    """chi(atom(t)) as an exact polynomial in t."""
    a = atom.twist
    if atom.kind is Kind.LINE:
        return chi_line_poly(a)
    if atom.kind is Kind.TANGENT:
        return 4 * chi_line_poly(a + 1) - chi_line_poly(a)
    return 4 * chi_line_poly(a - 1) - chi_line_poly(a)


def chi_complex_poly(C: FreeComplex) -> Poly:
    """chi of the presented sheaf twisted by t: alternating sum over terms."""
    if not C.exact:
        raise ValueError("chi requires an exact complex")
    p = Poly()
    for i, s in C.positions():
        for atom, m in s.terms:
            p = p + (-1) ** i * m * chi_atom_poly(atom)
    return p


def _guard_ok(C: FreeComplex, t: int) -> bool:
    # h0 of the presented sheaf is determined by the shape when the long
    # exact sequences collapse: h^j(F_i(t)) = 0 for 1 <= j <= i suffices
    # (higher cohomology of F_0 and of F_i above index i never enters).
    for i, s in C.positions():
        if i == 0:
            continue
        for atom, _ in s.terms:
            shifted = atom.twisted(t)
            for j in range(1, min(i, 3) + 1):
                if h_atom(j, shifted) != 0:
                    return False
    return True


def h0_from_resolution(C: FreeComplex, t: int):
    """h0 of the presented sheaf at twist t, or INDETERMINATE.

    Returns sum (-1)^i h0(F_i(t)) when the vanishing guard certifies the
    collapse of the long exact sequences.
    """
    if not C.exact:
        raise ValueError("h0 requires an exact complex")
    if not _guard_ok(C, t):
        return INDETERMINATE
    val = sum((-1) ** i * h0_sum(s, t) for i, s in C.positions())
    if val < 0:
        raise ValueError(f"negative h0 = {val}; complex cannot be exact")
    return val
