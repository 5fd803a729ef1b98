"""Parser and printer for the complex grammar.

    0 -> <sum> -> ... -> <sum> -> <name> -> 0

A <sum> is a +-separated list of terms kO(a), O(a), kT(a), kOm(a);
a bare O, T or Om means twist 0.  Whitespace insensitive.  The leftmost
written sum sits at the highest homological position.
"""

from __future__ import annotations

import re

from .sheaves import FreeComplex, Kind, SheafAtom, SheafSum

_TERM_RE = re.compile(r"^\s*(?:(\d+)\s*)?(Om|O|T)\s*(?:\(\s*(-?\d+)\s*\))?\s*$")
_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_']*$")

_KIND = {"O": Kind.LINE, "T": Kind.TANGENT, "Om": Kind.COTANGENT}


class GrammarError(ValueError):
    def __init__(self, message: str, column: int):
        super().__init__(f"column {column}: {message}")
        self.column = column


def _parse_term(term: str, column: int, dim: int) -> tuple:
    m = _TERM_RE.match(term)
    if m is None:
        raise GrammarError(f"cannot parse term {term.strip()!r}", column)
    mult_s, sym, twist_s = m.groups()
    mult = 1 if mult_s is None else int(mult_s)
    if mult == 0:
        raise GrammarError(f"zero multiplicity in {term.strip()!r}", column)
    kind = _KIND[sym]
    if kind is not Kind.LINE and dim != 3:
        raise GrammarError(f"{sym} atoms require ambient dimension 3", column)
    twist = 0 if twist_s is None else int(twist_s)
    return SheafAtom(kind, twist), mult


def _parse_sum(segment: str, offset: int, dim: int) -> SheafSum:
    terms = []
    pos = 0
    for piece in segment.split("+"):
        if not piece.strip():
            raise GrammarError("empty term in sum", offset + pos + 1)
        terms.append(_parse_term(piece, offset + pos + 1, dim))
        pos += len(piece) + 1
    return SheafSum(terms)


def parse_complex(text: str, dim: int = 3) -> FreeComplex:
    """Parse the grammar into a FreeComplex (marked exact)."""
    segments = text.split("->")
    offsets = []
    pos = 0
    for seg in segments:
        offsets.append(pos)
        pos += len(seg) + 2
    if len(segments) < 4:
        raise GrammarError("expected 0 -> <sum> -> ... -> <name> -> 0", 1)
    if segments[0].strip() != "0":
        raise GrammarError("complex must start with 0", offsets[0] + 1)
    if segments[-1].strip() != "0":
        raise GrammarError("complex must end with 0", offsets[-1] + 1)
    name = segments[-2].strip()
    if not _NAME_RE.match(name):
        raise GrammarError(f"invalid presented-sheaf name {name!r}", offsets[-2] + 1)
    sums = tuple(
        _parse_sum(seg, offsets[k + 1], dim)
        for k, seg in enumerate(segments[1:-2])
    )
    return FreeComplex(sums, presented=name)


def format_complex(C: FreeComplex) -> str:
    middle = " -> ".join(str(s) for s in C.terms)
    return f"0 -> {middle} -> {C.presented} -> 0"
