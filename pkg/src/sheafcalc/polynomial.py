"""Exact univariate polynomials over the rationals.

Used for Euler characteristics and Hilbert polynomials, which must be
bit-exact; coefficients are `fractions.Fraction`, never floats.
"""

from __future__ import annotations

from fractions import Fraction


class Poly:
    """Polynomial in one variable t, low-degree coefficients first.

    Immutable; trailing zero coefficients are stripped on construction.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[k] + other[k] for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.coeffs])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __getitem__(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __call__(self, t):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"

    def __str__(self):
        return format_poly(self)


def _as_poly(x):
    if isinstance(x, Poly):
        return x
    return Poly([x])


def format_poly(p: Poly, var: str = "t") -> str:
    """Render e.g. ``3t+6``, ``9t-9``, ``t^3/6+t^2+11t/6+1``."""
    if not p.coeffs:
        return "0"
    parts = []
    for d in range(p.degree, -1, -1):
        c = p[d]
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if parts else "")
        mag = abs(c)
        if d == 0:
            body = str(mag)
        else:
            v = var if d == 1 else f"{var}^{d}"
            body = v if mag.numerator == 1 else f"{mag.numerator}{v}"
            if mag.denominator != 1:
                body += f"/{mag.denominator}"
        parts.append(sign + body)
    return "".join(parts)


def chi_line_poly(a: int) -> Poly:
    """chi(O_P3(t+a)) = (t+a+1)(t+a+2)(t+a+3)/6 as an exact polynomial."""
    p = Poly([1])
    for k in (1, 2, 3):
        p = p * Poly([a + k, 1])
    return p * Fraction(1, 6)
