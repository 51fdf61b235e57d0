"""Thickness bounds, surgery constraints, candidate slopes and the verdict gate.

Inputs ``g`` (Seifert genus) and ``b`` (braid index) are trusted exact
values.  Quantities read off a braid or band word (diagram Turaev
genus, crossing changes to an alternating diagram, Jones span) are
valid thickness upper bounds for the knot the word closes to, so they
may sharpen ``th_upper``; the word's own genus and strand count are only
upper bounds on ``g`` and ``b`` and are never substituted for them here.
"""

from __future__ import annotations

import logging
import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .braid import BraidWord, component_count, writhe
from .bennequin import BandWord, bennequin_genus, expand
from .dealternation import Bound, dealternation_upper_word, thm4_bound
from .diagram import closure_diagram, turaev_genus_diagram
from .jones import EvaluatorLimitError, jones_span

__all__ = [
    "Bound",
    "KnotProfile",
    "SlopeSet",
    "Verdict",
    "ObstructionReport",
    "GateOptions",
    "lemma3_bound",
    "crossing_bound",
    "eqn3",
    "eqn4",
    "foliation_bounds",
    "hanselman_slopes",
    "gate",
    "word_invariants",
    "EXCLUDED",
    "UNDECIDED",
    "SPECIAL_GENUS_2",
    "KNOWN_RESULT_B3",
]

log = logging.getLogger(__name__)

EXCLUDED = "Excluded"
UNDECIDED = "Undecided"
SPECIAL_GENUS_2 = "SpecialGenus2"
KNOWN_RESULT_B3 = "KnownResultB3"


def lemma3_bound(g: int, b: int) -> Bound:
    """Thickness bound (2b - 5)(2g - 1 + b) / 2 for braid index >= 4."""
    if b < 4:
        raise ValueError(f"thickness bound needs braid index >= 4, got {b}")
    return Bound.of(Fraction((2 * b - 5) * (2 * g - 1 + b), 2))


def _crossing_coefficient(b: int) -> Fraction:
    if b == 2:
        return Fraction(1)
    if b == 3:
        return Fraction(5, 3)
    return Fraction(2 * b - 5)


def crossing_bound(g: int, b: int) -> Fraction:
    """Upper bound on the crossing number from genus and braid index."""
    if b < 2:
        raise ValueError(f"crossing bound needs braid index >= 2, got {b}")
    return _crossing_coefficient(b) * (2 * g - 1 + b)


def eqn3(g: int, b: int) -> int:
    """4g^2 + (2 - 4b)g + (2b - 5)(1 - b); a positive value rules out
    purely cosmetic surgeries (b >= 4, g != 2)."""
    return 4 * g * g + (2 - 4 * b) * g + (2 * b - 5) * (1 - b)


def eqn4(g: int, b: int, span: int) -> int:
    """2g^2 + (6 - 4b)g + (2b - 5)(1 - b) + span, the Jones-span variant."""
    return 2 * g * g + (6 - 4 * b) * g + (2 * b - 5) * (1 - b) + span


def foliation_bounds(r_aa: int, r_ab: int, g: int, b: int, c: int) -> tuple[bool, bool]:
    """Literal truth of c <= (2b-5) R_aa + (b-3) R_ab and
    2 R_aa + R_ab <= 2(2g - 1 + b) for supplied tile counts."""
    if min(r_aa, r_ab, g, b, c) < 0:
        raise ValueError("tile counts, genus, braid index and crossings must be >= 0")
    if b < 4:
        warnings.warn(f"tile inequalities evaluated literally for braid index {b} < 4", stacklevel=2)
    crossing_ok = c <= (2 * b - 5) * r_aa + (b - 3) * r_ab
    genus_ok = 2 * r_aa + r_ab <= 2 * (2 * g - 1 + b)
    return crossing_ok, genus_ok


@dataclass(frozen=True)
class SlopeSet:
    slopes: tuple[Fraction, ...] = ()
    unbounded: bool = False

    def __post_init__(self):
        object.__setattr__(self, "slopes", tuple(sorted(set(Fraction(s) for s in self.slopes))))

    @property
    def empty(self) -> bool:
        return not self.slopes and not self.unbounded

    def as_strings(self) -> list[str]:
        return [str(s) for s in self.slopes]

    def union(self, other: "SlopeSet") -> "SlopeSet":
        return SlopeSet(self.slopes + other.slopes, self.unbounded or other.unbounded)


def hanselman_slopes(g: int, th: Optional[int]) -> SlopeSet:
    """Slopes r that could still pair with -r in a purely cosmetic surgery.

    ``{2, -2}`` only for genus 2; otherwise ``+-1/q`` for
    ``0 < q <= (th + 2g) / (2g(g - 1))``.  Genus 1 (zero denominator) and
    an unknown thickness give the unbounded flag.
    """
    if g < 1:
        raise ValueError(f"genus must be >= 1 for a non-trivial knot, got {g}")
    special = (Fraction(2), Fraction(-2)) if g == 2 else ()
    if g == 1 or th is None:
        return SlopeSet(special, unbounded=True)
    q_max = (th + 2 * g) // (2 * g * (g - 1))
    family = tuple(Fraction(sgn, q) for q in range(1, q_max + 1) for sgn in (1, -1))
    return SlopeSet(special + family)


@dataclass(frozen=True)
class KnotProfile:
    name: str
    g: int
    b: int
    th: Optional[int] = None
    span: Optional[int] = None
    braid: Optional[BraidWord] = None
    bands: Optional[BandWord] = None

    def __post_init__(self):
        if self.g < 1:
            raise ValueError(f"genus must be >= 1 (the unknot is excluded), got {self.g}")
        if self.b < 1:
            raise ValueError(f"braid index must be >= 1, got {self.b}")
        if self.th is not None and self.th < 0:
            raise ValueError(f"thickness must be >= 0, got {self.th}")
        if self.span is not None and self.span < 0:
            raise ValueError(f"Jones span must be >= 0, got {self.span}")


@dataclass(frozen=True)
class GateOptions:
    known_results: bool = False
    oracle: bool = False
    max_crossings: int = 16
    max_strands: int = 12


@dataclass(frozen=True)
class Verdict:
    status: str
    route: str
    slopes: SlopeSet = field(default_factory=SlopeSet)

    def as_dict(self) -> dict:
        return {
            "status": self.status,
            "route": self.route,
            "slopes": self.slopes.as_strings(),
            "unbounded": self.slopes.unbounded,
        }


@dataclass(frozen=True)
class ObstructionReport:
    profile: KnotProfile
    lemma3: Optional[Bound]
    thm4: Optional[Bound]
    crossing: Fraction
    eqn3: Optional[int]
    eqn4: Optional[int]
    th_upper: Optional[int]
    th_sources: dict
    verdict: Verdict
    invariants: dict = field(default_factory=dict)

    @property
    def excluded(self) -> bool:
        return self.verdict.status in (EXCLUDED, KNOWN_RESULT_B3)

    def as_dict(self) -> dict:
        p = self.profile
        inputs = {"g": p.g, "b": p.b}
        if p.th is not None:
            inputs["th"] = p.th
        if p.span is not None:
            inputs["span"] = p.span
        if p.braid is not None:
            inputs["braid"] = str(p.braid)
        if p.bands is not None:
            inputs["bands"] = str(p.bands)

        def bound(x: Optional[Bound]):
            return None if x is None else {"exact": str(x.exact), "floor": x.floor}

        constraints = {"eqn3": self.eqn3}
        if self.eqn4 is not None:
            constraints["eqn4"] = self.eqn4
        return {
            "name": p.name,
            "inputs": inputs,
            "bounds": {
                "lemma3": bound(self.lemma3),
                "thm4": bound(self.thm4),
                "crossing": str(self.crossing),
            },
            "constraints": constraints,
            "th_upper": self.th_upper,
            "th_sources": dict(self.th_sources),
            "invariants": dict(self.invariants),
            "verdict": self.verdict.as_dict(),
        }


def word_invariants(
    braid: Optional[BraidWord], bands: Optional[BandWord], opts: GateOptions = GateOptions()
) -> dict:
    """Diagram invariants of a knot given by a braid and/or band word.

    The braid word takes precedence for diagram quantities.  A braid word
    is read as a band word of adjacent bands for the Bennequin genus and
    the crossing-change count.
    """
    inv: dict = {}
    word = braid if braid is not None else (expand(bands) if bands is not None else None)
    if word is None:
        return inv
    d = closure_diagram(word)
    inv["crossings"] = d.crossing_count
    inv["writhe"] = writhe(word)
    inv["components"] = component_count(word)
    if inv["components"] != 1:
        return inv
    inv["turaev_genus_diagram"] = turaev_genus_diagram(d)
    try:
        inv["jones_span"] = jones_span(
            word, oracle=opts.oracle, max_crossings=opts.max_crossings, max_strands=opts.max_strands
        )
    except EvaluatorLimitError as exc:
        log.info("Jones span skipped: %s", exc)
    if bands is None:
        bands = BandWord(word.n, tuple((abs(x), abs(x) + 1, 1 if x > 0 else -1) for x in word.letters))
    inv["bennequin_genus"] = bennequin_genus(bands)
    if bands.n >= 4:
        inv["dealternation_upper"] = dealternation_upper_word(bands).total
    return inv


def gate(
    p: KnotProfile, opts: GateOptions = GateOptions(), invariants: Optional[dict] = None
) -> ObstructionReport:
    """Decide whether the bounds available for ``p`` rule out purely
    cosmetic surgery, and otherwise list the surviving slopes.

    ``invariants`` may carry precomputed :func:`word_invariants` of the
    profile's words.
    """
    g, b = p.g, p.b
    if b < 2:
        raise ValueError(f"braid index must be >= 2 for a non-trivial knot, got {b}")

    inv = word_invariants(p.braid, p.bands, opts) if invariants is None else invariants
    span = p.span if p.span is not None else inv.get("jones_span")

    lemma3 = lemma3_bound(g, b) if b >= 4 else None
    thm4 = thm4_bound(g, b) if b >= 4 else None
    crossing = crossing_bound(g, b)
    e3 = eqn3(g, b)
    e4 = eqn4(g, b, span) if span is not None and b >= 4 else None

    sources: dict[str, int] = {}
    if p.th is not None:
        sources["input"] = p.th
    if lemma3 is not None:
        sources["lemma3"] = lemma3.floor
        sources["thm4"] = thm4.floor
        if span is not None:
            # Turaev genus <= c - span with c bounded from g and b
            sources["jones_span"] = math.floor(crossing) - span
    if "turaev_genus_diagram" in inv:
        sources["turaev_genus_diagram"] = inv["turaev_genus_diagram"]
    if "dealternation_upper" in inv:
        sources["dealternation_upper"] = inv["dealternation_upper"]
    th_upper = min(sources.values()) if sources else None

    def report(verdict: Verdict) -> ObstructionReport:
        return ObstructionReport(p, lemma3, thm4, crossing, e3, e4, th_upper, sources, verdict, inv)

    if b == 3 and opts.known_results:
        return report(Verdict(KNOWN_RESULT_B3, "known result: knots of braid index 3 have no purely cosmetic surgery"))

    slopes = hanselman_slopes(g, th_upper)
    if g == 2:
        return report(Verdict(SPECIAL_GENUS_2, "genus 2: slopes {2, -2} cannot be ruled out", slopes))

    lhs = 2 * g * (g - 2)
    if th_upper is None or lhs <= th_upper:
        why = "genus 1: no bound on q" if g == 1 else (
            "no thickness bound available" if th_upper is None
            else f"2g(g-2) = {lhs} <= thickness bound {th_upper}"
        )
        return report(Verdict(UNDECIDED, why, slopes))

    return report(Verdict(EXCLUDED, _route(lhs, b, e3, e4, thm4, span, sources, inv)))


def _route(lhs, b, e3, e4, thm4, span, sources, inv) -> str:
    """Name the first (weakest) bound that already excludes the knot."""
    if b >= 4 and e3 > 0:
        return f"crossing-number constraint: 4g^2+(2-4b)g+(2b-5)(1-b) = {e3} > 0"
    if thm4 is not None and lhs > thm4.exact:
        return f"dealternation bound: 2g(g-2) = {lhs} > {_decimal(thm4.exact)}"
    if e4 is not None and e4 > 0:
        return f"Jones span constraint: 2g^2+(6-4b)g+(2b-5)(1-b)+span = {e4} > 0 (span {span})"
    for key, label in (
        ("input", "thickness input"),
        ("turaev_genus_diagram", "diagram Turaev genus"),
        ("dealternation_upper", "word dealternation count"),
    ):
        if key in sources and lhs > sources[key]:
            return f"{label}: 2g(g-2) = {lhs} > {sources[key]}"
    raise AssertionError("excluded without an excluding bound")


def _decimal(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    text = f"{float(x):.6f}".rstrip("0")
    return text
