"""Graded Betti tables of curve ideals in P3.

Hilbert polynomials, Castelnuovo-Mumford regularity, generator degrees,
and the three-valued global-generation verdict.  Tables are assumed
minimal; minimality is not checked.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .polynomial import Poly, chi_line_poly


@dataclass(frozen=True)
class BettiTable:
    """Entries (i, j, beta_{i,j}) of a minimal free resolution of I_Y.

    Alternating rank sum must be 1 (ideal-sheaf convention).
    """

    entries: tuple = ()
    subject: str = ""

    def __init__(self, entries=(), subject: str = ""):
        merged = {}
        for i, j, mult in entries:
            if mult == 0:
                continue
            if i < 0 or i > 3:
                raise ValueError(f"homological index {i} out of range for P3")
            if mult < 0:
                raise ValueError(f"negative multiplicity beta_{{{i},{j}}}")
            merged[(i, j)] = merged.get((i, j), 0) + mult
        canon = tuple((i, j, m) for (i, j), m in sorted(merged.items()))
        alt = sum((-1) ** i * m for i, j, m in canon)
        if alt != 1:
            raise ValueError(f"alternating rank sum is {alt}, expected 1")
        object.__setattr__(self, "entries", canon)
        object.__setattr__(self, "subject", subject)


class GgStatus(enum.Enum):
    GG_CERTIFIED = "GgCertified"
    NOT_GG = "NotGg"
    UNKNOWN = "Unknown"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class GgVerdict:
    status: GgStatus
    reason: str

    def __str__(self):
        return f"{self.status} ({self.reason})"


def hilb_from_betti(B: BettiTable) -> Poly:
    """Hilbert polynomial chi(O_Y(t)) from the resolution of I_Y."""
    p = chi_line_poly(0)
    for i, j, mult in B.entries:
        p = p - (-1) ** i * mult * chi_line_poly(-j)
    return p


def regularity(B: BettiTable) -> int:
    """Castelnuovo-Mumford regularity: max (j - i) over the table."""
    return max(j - i for i, j, _ in B.entries)


def max_gen_degree(B: BettiTable) -> int:
    """Largest degree of a minimal generator (i = 0 row)."""
    return max(j for i, j, _ in B.entries if i == 0)


def gg_twist_check(B: BettiTable, m: int, ci_hint: bool = False) -> GgVerdict:
    """Is the twisted ideal sheaf I_Y(m) globally generated?

    Generator degree > m is an obstruction; m >= regularity is a
    certificate.  The gap is real: a complete-intersection ideal is
    sheaf-generated in its generator degrees (ci_hint) even when its
    regularity exceeds m.
    """
    if max_gen_degree(B) > m:
        return GgVerdict(GgStatus.NOT_GG, "generator-degree-exceeds-twist")
    if m >= regularity(B):
        return GgVerdict(GgStatus.GG_CERTIFIED, "twist-at-least-regularity")
    if ci_hint:
        return GgVerdict(GgStatus.GG_CERTIFIED, "generated-in-generator-degrees")
    return GgVerdict(GgStatus.UNKNOWN, "between-necessary-and-sufficient")


def parse_betti(text: str, subject: str = "") -> BettiTable:
    """Parse the ``i j beta`` record format; ``#`` starts a comment.

    A comment ``# subject: name`` sets the subject tag.
    """
    entries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped.startswith("#"):
            body = stripped[1:].strip()
            if body.startswith("subject:"):
                subject = body[len("subject:"):].strip()
            continue
        if not stripped:
            continue
        fields = stripped.split()
        if len(fields) != 3:
            raise ValueError(f"line {lineno}: expected 'i j beta', got {raw!r}")
        try:
            i, j, mult = (int(f) for f in fields)
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer field in {raw!r}") from None
        entries.append((i, j, mult))
    return BettiTable(entries, subject)


def format_betti(B: BettiTable) -> str:
    lines = []
    if B.subject:
        lines.append(f"# subject: {B.subject}")
    lines.extend(f"{i} {j} {m}" for i, j, m in B.entries)
    return "\n".join(lines) + "\n"
