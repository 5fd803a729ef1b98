"""Registry of the nine classified bundles and every excluded case.

The registry is a data file; this module loads it, replays each recorded
computation against the engines, and assembles deterministic reports.
Liaison results that diverge from the source text are annotations by
default and failures under strict mode.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from . import betti as bt
from . import chow, cohomology, curves
from .grammar import format_complex, parse_complex
from .polynomial import Poly, format_poly
from .sheaves import FreeComplex, Kind, mapping_cone_bundle

RULES = (
    "GeneratorDegree",
    "NoSections",
    "CmNonexistence",
    "LiaisonResidue",
    "QuadricContainmentAxiom",
)


class RegistryError(ValueError):
    pass


@dataclass(frozen=True)
class ClassificationEntry:
    id: int
    complex: FreeComplex
    expected_chern: chow.ChowClass
    expected_chern_tw: chow.ChowClass
    curve: curves.CurveClass | None = None
    table: bt.BettiTable | None = None
    gg_hint: bool = False
    factorizations: tuple = ()


@dataclass(frozen=True)
class ExclusionCase:
    label: str
    rule: str
    tag: str
    m: int | None = None
    curve: curves.CurveClass | None = None
    table: bt.BettiTable | None = None
    mline: curves.MultipleLineStructure | None = None
    mchi: Poly | None = None
    sections: tuple | None = None  # (embedding_degree, k)
    cm_pairs: tuple = ()
    ci: tuple | None = None  # (d1, d2)
    reported_chi: Poly | None = None
    computed_chi: Poly | None = None
    note: str = ""


@dataclass(frozen=True)
class Registry:
    entries: tuple
    exclusions: tuple

    def entry(self, id: int) -> ClassificationEntry:
        for e in self.entries:
            if e.id == id:
                return e
        raise RegistryError(f"no entry {id}")


# ---------------------------------------------------------------------------
# reports

PASS, FAIL, NOTE = "PASS", "FAIL", "NOTE"


@dataclass(frozen=True)
class CheckItem:
    name: str
    status: str
    detail: str


@dataclass
class Report:
    items: list = field(default_factory=list)

    def add(self, name: str, ok: bool, detail: str):
        self.items.append(CheckItem(name, PASS if ok else FAIL, detail))

    def annotate(self, name: str, detail: str, strict: bool = False):
        self.items.append(CheckItem(name, FAIL if strict else NOTE, detail))

    def extend(self, other: "Report"):
        self.items.extend(other.items)

    @property
    def ok(self) -> bool:
        return all(item.status != FAIL for item in self.items)

    def counts(self):
        c = {PASS: 0, FAIL: 0, NOTE: 0}
        for item in self.items:
            c[item.status] += 1
        return c

    def as_text(self) -> str:
        lines = [f"[{it.status}] {it.name}: {it.detail}" for it in self.items]
        c = self.counts()
        lines.append(
            f"{c[PASS]} passed, {c[FAIL]} failed, {c[NOTE]} annotations"
        )
        return "\n".join(lines) + "\n"

    def as_structured(self) -> str:
        lines = [
            f"check={it.name} status={it.status} detail={it.detail}"
            for it in self.items
        ]
        c = self.counts()
        lines.append(f"summary pass={c[PASS]} fail={c[FAIL]} note={c[NOTE]}")
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# file format

def _parse_int_list(s: str):
    return [int(x) for x in s.split()]


def _parse_poly(fields):
    # "a b" encodes at + b
    a, b = (int(x) for x in fields.split())
    return Poly([b, a])


def _format_linear(p: Poly) -> str:
    return f"{int(p[1])} {int(p[0])}"


def _parse_curve(fields):
    vals = _parse_int_list(fields)
    if len(vals) == 2:
        return curves.CurveClass(vals[0], vals[1])
    if len(vals) == 3:
        return curves.CurveClass(vals[0], vals[1], vals[2])
    raise RegistryError(f"curve record needs 'd pa [e]', got {fields!r}")


def _parse_blocks(text: str):
    """Split the file into (kind, header, fieldlines) blocks."""
    blocks = []
    current = None
    betti_lines = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, _, rest = line.partition(" ")
        if betti_lines is not None:
            if line == "end":
                current[2].append(("betti", betti_lines))
                betti_lines = None
            else:
                betti_lines.append(line)
            continue
        if key in ("entry", "exclusion"):
            if current is not None:
                raise RegistryError(f"line {lineno}: unterminated block")
            current = (key, rest.strip(), [])
            continue
        if current is None:
            raise RegistryError(f"line {lineno}: {line!r} outside any block")
        if line == "end":
            blocks.append(current)
            current = None
        elif key == "betti":
            betti_lines = []
        else:
            current[2].append((key, rest.strip()))
    if current is not None:
        raise RegistryError("unterminated block at end of file")
    return blocks


def _build_entry(header, fields) -> ClassificationEntry:
    eid = int(header)
    data = dict(
        complex=None, chern=None, chern_tw=None, curve=None,
        table=None, gg_hint=False,
    )
    factors = []
    for key, val in fields:
        if key == "complex":
            data["complex"] = parse_complex(val)
        elif key == "chern":
            data["chern"] = chow.ChowClass(_parse_int_list(val))
        elif key == "chern_tw":
            data["chern_tw"] = chow.ChowClass(_parse_int_list(val))
        elif key == "curve":
            data["curve"] = _parse_curve(val)
        elif key == "gg_hint":
            data["gg_hint"] = val == "ci"
        elif key == "betti":
            data["table"] = bt.BettiTable(
                [tuple(_parse_int_list(ln)) for ln in val], subject=f"entry {eid}"
            )
        elif key == "factor":
            vals = _parse_int_list(val)
            factors.append((vals[0], chow.ChowClass(vals[1:])))
        else:
            raise RegistryError(f"entry {eid}: unknown field {key!r}")
    for req in ("complex", "chern", "chern_tw"):
        if data[req] is None:
            raise RegistryError(f"entry {eid}: missing {req}")
    return ClassificationEntry(
        eid, data["complex"], data["chern"], data["chern_tw"],
        data["curve"], data["table"], data["gg_hint"], tuple(factors),
    )


def _build_exclusion(header, fields) -> ExclusionCase:
    data = dict(
        rule=None, tag="", m=None, curve=None, table=None, mline=None,
        mchi=None, sections=None, ci=None, reported_chi=None,
        computed_chi=None, note="",
    )
    cm_pairs = []
    for key, val in fields:
        if key == "rule":
            if val not in RULES:
                raise RegistryError(f"exclusion {header}: unknown rule {val!r}")
            data["rule"] = val
        elif key == "tag":
            data["tag"] = val
        elif key == "m":
            data["m"] = int(val)
        elif key == "curve":
            data["curve"] = _parse_curve(val)
        elif key == "betti":
            data["table"] = bt.BettiTable(
                [tuple(_parse_int_list(ln)) for ln in val], subject=header
            )
        elif key == "mline":
            data["mline"] = curves.MultipleLineStructure(_parse_int_list(val))
        elif key == "mchi":
            data["mchi"] = _parse_poly(val)
        elif key == "sections":
            deg, k = _parse_int_list(val)
            data["sections"] = (deg, k)
        elif key == "cm":
            d, pa = _parse_int_list(val)
            cm_pairs.append((d, pa))
        elif key == "ci":
            d1, d2 = _parse_int_list(val)
            data["ci"] = (d1, d2)
        elif key == "reported_chi":
            data["reported_chi"] = _parse_poly(val)
        elif key == "computed_chi":
            data["computed_chi"] = _parse_poly(val)
        elif key == "note":
            data["note"] = val
        else:
            raise RegistryError(f"exclusion {header}: unknown field {key!r}")
    if data["rule"] is None:
        raise RegistryError(f"exclusion {header}: missing rule")
    return ExclusionCase(label=header, cm_pairs=tuple(cm_pairs), **data)


def parse_registry(text: str) -> Registry:
    entries = []
    exclusions = []
    for kind, header, fields in _parse_blocks(text):
        if kind == "entry":
            entries.append(_build_entry(header, fields))
        else:
            exclusions.append(_build_exclusion(header, fields))
    ids = sorted(e.id for e in entries)
    if ids != list(range(1, 10)):
        raise RegistryError(f"expected entries 1..9, found {ids}")
    entries.sort(key=lambda e: e.id)
    return Registry(tuple(entries), tuple(exclusions))


def _chow_fields(c: chow.ChowClass) -> str:
    return " ".join(str(x) for x in c.coeffs)


def dump_registry(reg: Registry) -> str:
    out = []
    for e in reg.entries:
        out.append(f"entry {e.id}")
        out.append(f"complex {format_complex(e.complex)}")
        out.append(f"chern {_chow_fields(e.expected_chern)}")
        out.append(f"chern_tw {_chow_fields(e.expected_chern_tw)}")
        if e.curve is not None:
            c = e.curve
            tail = "" if c.omega_twist is None else f" {c.omega_twist}"
            out.append(f"curve {c.degree} {c.genus}{tail}")
        if e.gg_hint:
            out.append("gg_hint ci")
        if e.table is not None:
            out.append("betti")
            out.extend(f"{i} {j} {m}" for i, j, m in e.table.entries)
            out.append("end")
        for a, q in e.factorizations:
            out.append(f"factor {a} {_chow_fields(q)}")
        out.append("end")
        out.append("")
    for x in reg.exclusions:
        out.append(f"exclusion {x.label}")
        out.append(f"rule {x.rule}")
        if x.tag:
            out.append(f"tag {x.tag}")
        if x.m is not None:
            out.append(f"m {x.m}")
        if x.curve is not None:
            c = x.curve
            tail = "" if c.omega_twist is None else f" {c.omega_twist}"
            out.append(f"curve {c.degree} {c.genus}{tail}")
        if x.table is not None:
            out.append("betti")
            out.extend(f"{i} {j} {m}" for i, j, m in x.table.entries)
            out.append("end")
        if x.mline is not None:
            out.append("mline " + " ".join(str(s) for s in x.mline.twists))
        if x.mchi is not None:
            out.append(f"mchi {_format_linear(x.mchi)}")
        if x.sections is not None:
            out.append(f"sections {x.sections[0]} {x.sections[1]}")
        for d, pa in x.cm_pairs:
            out.append(f"cm {d} {pa}")
        if x.ci is not None:
            out.append(f"ci {x.ci[0]} {x.ci[1]}")
        if x.reported_chi is not None:
            out.append(f"reported_chi {_format_linear(x.reported_chi)}")
        if x.computed_chi is not None:
            out.append(f"computed_chi {_format_linear(x.computed_chi)}")
        if x.note:
            out.append(f"note {x.note}")
        out.append("end")
        out.append("")
    return "\n".join(out)


def default_registry_path() -> Path:
    override = os.environ.get("SHEAFCALC_REGISTRY")
    if override:
        return Path(override)
    return Path(str(resources.files("sheafcalc").joinpath("data/registry.txt")))


def load_registry(path=None) -> Registry:
    if path is None:
        path = default_registry_path()
    return parse_registry(Path(path).read_text())


# ---------------------------------------------------------------------------
# verification

def _has_nonline_atoms(C: FreeComplex) -> bool:
    return any(
        atom.kind is not Kind.LINE for s in C.terms for atom, _ in s.terms
    )


def verify_entry_obj(e: ClassificationEntry, strict: bool = False) -> Report:
    rep = Report()
    pre = f"entry.{e.id}"

    c = chow.chern_from_complex(e.complex)
    rep.add(
        f"{pre}.chern", c == e.expected_chern,
        f"computed {c}; expected {e.expected_chern}",
    )
    ctw = chow.twist(c, 3, -1)
    rep.add(
        f"{pre}.chern_tw", ctw == e.expected_chern_tw,
        f"computed {ctw}; expected {e.expected_chern_tw}",
    )
    r = chow.rank_of_complex(e.complex)
    rep.add(f"{pre}.rank", r == 3, f"rank {r}")
    rep.add(f"{pre}.c3_positive", c[3] > 0, f"c3 = {c[3]}")

    # no sections after untwisting by c1 = 3 (split bundles are excluded)
    h0m3 = cohomology.h0_from_resolution(e.complex, -3)
    rep.add(f"{pre}.h0_untwisted", h0m3 == 0, f"h0(E(-3)) = {h0m3!r}")

    if e.curve is not None and e.table is not None:
        cone = mapping_cone_bundle(e.table, 3)
        if _has_nonline_atoms(e.complex):
            same = (
                chow.chern_from_complex(cone) == c
                and chow.rank_of_complex(cone) == 3
            )
            detail = f"cone {format_complex(cone)} matches on Chern classes and rank"
        else:
            same = cone.terms == e.complex.terms
            detail = f"cone {format_complex(cone)}"
        rep.add(f"{pre}.mapping_cone", same, detail)

        c3 = curves.c3_from_curve(3, e.curve)
        rep.add(
            f"{pre}.c3_from_curve", c3 == c[3],
            f"curve relation gives {c3}, complex gives {c[3]}",
        )
        hp = bt.hilb_from_betti(e.table)
        expected_hp = curves.hilbert_poly(e.curve)
        rep.add(
            f"{pre}.hilbert", hp == expected_hp,
            f"table gives {format_poly(hp)}; curve gives {format_poly(expected_hp)}",
        )
        verdict = bt.gg_twist_check(e.table, 3, ci_hint=e.gg_hint)
        rep.add(
            f"{pre}.gg", verdict.status is bt.GgStatus.GG_CERTIFIED,
            str(verdict),
        )

    if e.factorizations:
        found = chow.factor_line(c, 3, bound=10)
        want = [(a, q) for a, q in e.factorizations]
        rep.add(
            f"{pre}.factor", found == want,
            f"found {[(a, str(q)) for a, q in found]}",
        )

    chi_poly = cohomology.chi_complex_poly(e.complex)
    hrr_ok = all(
        chow.hrr_chi(3, chow.twist(c, 3, t)) == chi_poly(t)
        for t in range(-4, 5)
    )
    rep.add(f"{pre}.hrr_chi", hrr_ok, f"chi(E(t)) = {format_poly(chi_poly)} on [-4,4]")
    return rep


def replay_exclusion(x: ExclusionCase, strict: bool = False) -> Report:
    rep = Report()
    pre = f"exclusion.{x.label}"

    if x.table is not None and x.curve is not None:
        hp = bt.hilb_from_betti(x.table)
        expected = curves.hilbert_poly(x.curve)
        rep.add(
            f"{pre}.hilbert", hp == expected,
            f"table gives {format_poly(hp)}; curve gives {format_poly(expected)}",
        )
    if x.table is not None:
        rep.add(
            f"{pre}.reg_vs_gens",
            bt.regularity(x.table) >= bt.max_gen_degree(x.table),
            f"regularity {bt.regularity(x.table)}, "
            f"max generator degree {bt.max_gen_degree(x.table)}",
        )

    if x.rule == "GeneratorDegree":
        verdict = bt.gg_twist_check(x.table, x.m)
        rep.add(
            f"{pre}.not_gg", verdict.status is bt.GgStatus.NOT_GG,
            f"at twist {x.m}: {verdict}",
        )
    elif x.rule == "NoSections":
        if x.mline is not None:
            chi = curves.multiple_line_chi(x.mline)
            rep.add(
                f"{pre}.chi", chi == x.mchi,
                f"computed {format_poly(chi)}; recorded {format_poly(x.mchi)}",
            )
        deg, k = x.sections
        n = curves.section_count_rational(deg, k)
        rep.add(f"{pre}.no_sections", n == 0, f"h0 = {n} for twist {k}, degree {deg}")
    elif x.rule == "CmNonexistence":
        for d, pa in x.cm_pairs:
            rep.add(
                f"{pre}.cm({d},{pa})", not curves.cm_exists(d, pa),
                f"no locally CM curve of degree {d}, genus {pa}",
            )
    elif x.rule == "LiaisonResidue":
        d1, d2 = x.ci
        res = curves.liaison_residue(d1, d2, x.curve)
        chi = curves.hilbert_poly(res)
        rep.add(
            f"{pre}.residue", chi == x.computed_chi,
            f"residue ({res.degree},{res.genus}), chi = {format_poly(chi)}",
        )
        if x.reported_chi != x.computed_chi:
            rep.annotate(
                f"{pre}.divergence",
                f"recorded source value is {format_poly(x.reported_chi)}, "
                f"both computation routes give {format_poly(x.computed_chi)}",
                strict=strict,
            )
    elif x.rule == "QuadricContainmentAxiom":
        rep.annotate(f"{pre}.axiom", x.note or "recorded without computation")
    return rep


def verify_entry(reg: Registry, id: int, strict: bool = False) -> Report:
    return verify_entry_obj(reg.entry(id), strict)


def list_exclusions(reg: Registry, strict: bool = False) -> Report:
    rep = Report()
    for x in reg.exclusions:
        rep.extend(replay_exclusion(x, strict))
    return rep


def verify_all(reg: Registry, strict: bool = False) -> Report:
    rep = Report()
    for e in reg.entries:
        rep.extend(verify_entry_obj(e, strict))
    rep.extend(list_exclusions(reg, strict))

    # the Trautmann-Vetter quotient of 0 -> T(-2) -> 5O -> TV(4) -> 0
    tv = chow.inv(chow.chern_of_atom(chow.SheafAtom(Kind.TANGENT, -2)))
    rep.add(
        "trautmann_vetter",
        tv == chow.ChowClass([1, 2, 2, 0]),
        f"inv(c(T(-2))) = {tv}",
    )

    axioms = sum(
        1 for x in reg.exclusions if x.rule == "QuadricContainmentAxiom"
    )
    rep.add("single_axiom", axioms == 1, f"{axioms} axiom-tagged exclusions")
    return rep
