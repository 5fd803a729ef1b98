"""Chern class, cohomology and liaison calculus for globally generated
vector bundles on P^3 with first Chern class 3."""

from .betti import (
    BettiTable,
    GgStatus,
    GgVerdict,
    gg_twist_check,
    hilb_from_betti,
    max_gen_degree,
    regularity,
)
from .chow import (
    ChowClass,
    chern_from_complex,
    chern_of_atom,
    factor_line,
    hrr_chi,
    inv,
    mul,
    rank_of_complex,
    twist,
)
from .cohomology import (
    INDETERMINATE,
    chi_atom_poly,
    chi_complex_poly,
    h0_from_resolution,
    h_atom,
    h_line,
)
from .curves import (
    CurveClass,
    MultipleLineStructure,
    c3_from_curve,
    ci_curve,
    cm_exists,
    hilbert_poly,
    liaison_residue,
    multiple_line_chi,
    section_count_rational,
    serre_rank2_genus,
)
from .grammar import format_complex, parse_complex
from .polynomial import Poly, chi_line_poly, format_poly
from .sheaves import (
    FreeComplex,
    Kind,
    SheafAtom,
    SheafSum,
    cotangent,
    line,
    mapping_cone_bundle,
    tangent,
    twist_complex,
)

__version__ = "0.1.0"
