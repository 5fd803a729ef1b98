"""Numeric invariants of space curves.

Hilbert polynomials, complete intersections, the rank-2 Serre genus
relation, liaison residues computed by two independent routes, multiple
line structures, and the locally Cohen-Macaulay existence criterion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .polynomial import Poly, chi_line_poly


class LiaisonInconsistencyError(ValueError):
    """The two internal liaison routes disagree; the input data is bad."""


@dataclass(frozen=True)
class CurveClass:
    """Degree, arithmetic genus, and the dualizing twist when it exists.

    omega_twist = e records omega_Y = O_Y(e), which forces 2p_a - 2 = d e.
    """

    degree: int
    genus: int
    omega_twist: int | None = None

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError(f"degree must be positive, got {self.degree}")
        e = self.omega_twist
        if e is not None and 2 * self.genus - 2 != self.degree * e:
            raise ValueError(
                f"omega twist {e} inconsistent: 2*{self.genus}-2 != {self.degree}*{e}"
            )


@dataclass(frozen=True)
class MultipleLineStructure:
    """Filtration of a non-reduced structure on a line, quotients O_L(s_i)."""

    twists: tuple

    def __init__(self, twists):
        ts = tuple(int(s) for s in twists)
        if not ts:
            raise ValueError("at least one filtration quotient required")
        object.__setattr__(self, "twists", ts)


def hilbert_poly(Y: CurveClass) -> Poly:
    """chi(O_Y(t)) = dt + 1 - p_a."""
    return Poly([1 - Y.genus, Y.degree])


def ci_curve(d1: int, d2: int) -> CurveClass:
    """Complete intersection of type (d1, d2): degree, genus, dualizing twist."""
    if d1 < 1 or d2 < 1:
        raise ValueError("complete intersection degrees must be positive")
    d = d1 * d2
    e = d1 + d2 - 4
    pa2 = d * e  # = 2 p_a - 2, always even since d e is
    assert pa2 % 2 == 0
    return CurveClass(d, 1 + pa2 // 2, e)


def ci_chi_poly(d1: int, d2: int) -> Poly:
    """chi(O_Z(t)) of a complete intersection curve, via the Koszul complex."""
    return (
        chi_line_poly(0)
        - chi_line_poly(-d1)
        - chi_line_poly(-d2)
        + chi_line_poly(-d1 - d2)
    )


def serre_rank2_genus(c1: int, c2: int) -> Fraction:
    """Genus of the zero scheme of a rank-2 bundle: p_a = 1 + c2(c1-4)/2.

    Returned exactly; the caller checks integrality.
    """
    return 1 + Fraction(c2 * (c1 - 4), 2)


def c3_from_curve(c1: int, Y: CurveClass) -> int:
    """Top Chern class of the rank-3 bundle with dependency locus Y."""
    if c1 != 3:
        raise ValueError(f"only c1 = 3 is supported, got {c1}")
    return 2 * Y.genus - 2 + Y.degree * (4 - c1)


def union_genus(components) -> tuple:
    """(degree, genus) of a disjoint union: genera add, minus (k-1)."""
    comps = [
        (c.degree, c.genus) if isinstance(c, CurveClass) else tuple(c)
        for c in components
    ]
    d = sum(c[0] for c in comps)
    pa = sum(c[1] for c in comps) - (len(comps) - 1)
    return d, pa


def liaison_residue(d1: int, d2: int, Y: CurveClass) -> CurveClass:
    """Residue of Y in a complete intersection of type (d1, d2).

    Computed by the liaison genus formula and independently by Euler
    characteristic bookkeeping through the dualizing sheaf; the two
    routes must agree.
    """
    dd = d1 * d2
    if Y.degree >= dd:
        raise ValueError(f"degree {Y.degree} leaves no residual curve in ({d1},{d2})")
    e_z = d1 + d2 - 4
    d_res = dd - Y.degree

    # route 1: the genus formula
    shift = Fraction(e_z * (d_res - Y.degree), 2)
    pa1 = Y.genus + shift
    if pa1.denominator != 1:
        raise LiaisonInconsistencyError(
            f"non-integral residue genus {pa1} for ({d1},{d2}) and {Y}"
        )
    pa1 = int(pa1)

    # route 2: chi_{Y'}(t) = chi_Z(t) - chi(omega_Y tensor omega_Z^{-1}(t))
    if Y.omega_twist is not None:
        dual = Poly([Y.degree * (Y.omega_twist - e_z) + 1 - Y.genus, Y.degree])
    else:
        # Serre duality on Y: chi(omega_Y(s)) = -chi(O_Y(-s))
        dual = Poly([Y.genus - 1 - Y.degree * e_z, Y.degree])
    chi_res = ci_chi_poly(d1, d2) - dual

    if chi_res != Poly([1 - pa1, d_res]):
        raise LiaisonInconsistencyError(
            f"liaison routes disagree: genus formula gives ({d_res},{pa1}), "
            f"chi bookkeeping gives {chi_res}"
        )
    return CurveClass(d_res, pa1)


def multiple_line_chi(M: MultipleLineStructure) -> Poly:
    """chi of the filtered structure: sum of (t + s_i + 1)."""
    return Poly([sum(M.twists) + len(M.twists), len(M.twists)])


def cm_exists(d: int, p_a: int) -> bool:
    """Existence of a locally Cohen-Macaulay curve of degree d, genus p_a."""
    if d < 1:
        raise ValueError(f"degree must be positive, got {d}")
    if 2 * p_a == (d - 1) * (d - 2):
        return True
    return d > 1 and 2 * p_a <= (d - 2) * (d - 3)


def section_count_rational(embedding_degree: int, k: int) -> int:
    """h0(O_Y(k)) for a smooth rational curve embedded with the given degree."""
    if embedding_degree < 1:
        raise ValueError("embedding degree must be positive")
    return max(0, k * embedding_degree + 1)
