"""Crossing-change counts that make braid words alternating.

A crossing change is a sign flip of one letter.  The cost of a word
against a :class:`~cosmetic.braid.Pattern` is the number of letters
whose sign disagrees with it.

Band generators are costed over a family of equal words: the two
conjugated forms of a_{i,j} and everything reachable from them by far
commutation and the rewriting rule

    s_a^e s_b^h s_a^-e  =  s_b^-e s_a^h s_b^e        (|a - b| = 1)

within a bounded number of moves.  Every move is a braid group identity,
so each representative is the same braid as the band it replaces.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Optional

from .braid import BraidWord, Pattern, component_count
from .bennequin import Band, BandWord, bennequin_genus, expand, minimize_wrap, wrap_shift

__all__ = [
    "Bound",
    "CostReport",
    "BandCost",
    "violations",
    "rewrite_neighbors",
    "band_representatives",
    "band_alternating_cost",
    "gamma_word",
    "gamma_alternating_cost",
    "dealternation_upper_word",
    "thm4_bound",
]


class Bound(NamedTuple):
    exact: Fraction
    floor: int

    @classmethod
    def of(cls, value) -> "Bound":
        value = Fraction(value)
        return cls(value, math.floor(value))


def violations(w: BraidWord, p: Pattern) -> int:
    return sum(1 for x in w.letters if not p.accepts(x))


def _letters_violations(letters: tuple[int, ...], p: Pattern) -> int:
    return sum(1 for x in letters if not p.accepts(x))


def rewrite_neighbors(letters: tuple[int, ...]):
    """Words one move away: a far commutation or one rewriting-rule step."""
    m = len(letters)
    for k in range(m - 1):
        x, y = letters[k], letters[k + 1]
        if abs(abs(x) - abs(y)) >= 2:
            yield letters[:k] + (y, x) + letters[k + 2:]
    for k in range(m - 2):
        x, y, z = letters[k], letters[k + 1], letters[k + 2]
        if z == -x and abs(abs(x) - abs(y)) == 1:
            e = 1 if x > 0 else -1
            h = 1 if y > 0 else -1
            a, b = abs(x), abs(y)
            yield letters[:k] + (-e * b, h * a, e * b) + letters[k + 3:]


def _seed_forms(i: int, j: int, sign: int) -> list[tuple[int, ...]]:
    left_conj = tuple(range(i, j - 1))
    left = left_conj + (sign * (j - 1),) + tuple(-k for k in reversed(left_conj))
    right_conj = tuple(-k for k in range(j - 1, i, -1))
    right = right_conj + (sign * i,) + tuple(-k for k in reversed(right_conj))
    return [left] if left == right else [left, right]


@lru_cache(maxsize=None)
def band_representatives(i: int, j: int, sign: int, depth: Optional[int] = None) -> tuple[tuple[int, ...], ...]:
    """Words equal to a_{i,j}^sign, in breadth-first discovery order.

    Seeds are the left form (s_i..s_{j-2}) s_{j-1} (..)^-1 and the right
    form (s_{j-1}^-1..s_{i+1}^-1) s_i (..)^-1; ``depth`` defaults to 2(j-i).
    """
    if depth is None:
        depth = 2 * (j - i)
    seeds = _seed_forms(i, j, sign)
    seen = {s: 0 for s in seeds}
    order = list(seeds)
    queue = deque(seeds)
    while queue:
        word = queue.popleft()
        dist = seen[word]
        if dist >= depth:
            continue
        for nxt in rewrite_neighbors(word):
            if nxt not in seen:
                seen[nxt] = dist + 1
                order.append(nxt)
                queue.append(nxt)
    return tuple(order)


def band_alternating_cost(
    i: int, j: int, n: int, sign: int, p: Pattern, depth: Optional[int] = None
) -> tuple[int, BraidWord]:
    """Fewest crossing changes that make some representative of a_{i,j}^sign
    conform to ``p``, and the representative achieving it."""
    if n < 4:
        raise ValueError(f"band costs are defined for n >= 4, got n={n}")
    if not 1 <= i < j <= n:
        raise ValueError(f"band ({i},{j}) out of range for {n} strands")
    best = None
    for word in band_representatives(i, j, sign, depth):
        v = _letters_violations(word, p)
        if best is None or v < best[0]:
            best = (v, word)
            if v == 0:
                break
    return best[0], BraidWord(n, best[1])


def gamma_word(i: int, j: int, n: int) -> BraidWord:
    """s_i s_{i+1} ... s_j when i <= j, else s_i s_{i-1} ... s_j."""
    if not (1 <= i <= n - 1 and 1 <= j <= n - 1):
        raise ValueError(f"gamma indices ({i},{j}) out of range for {n} strands")
    step = 1 if j >= i else -1
    return BraidWord(n, tuple(range(i, j + step, step)))


def gamma_alternating_cost(i: int, j: int, n: int) -> int:
    if abs(i - j) > n - 3:
        raise ValueError(f"gamma_({i},{j}) needs |i - j| <= n - 3")
    w = gamma_word(i, j, n)
    # violations of w^-1 under p equal those of w under the mirror pattern,
    # so minimizing over both patterns covers both signs
    return min(violations(w, p) for p in Pattern)


@dataclass(frozen=True)
class BandCost:
    band: Band
    cost: int
    representative: BraidWord


@dataclass(frozen=True)
class CostReport:
    n: int
    shift: int
    bands: BandWord
    pattern: Pattern
    per_band: tuple[BandCost, ...]
    total: int
    wrap_count: int
    formula_value: int
    genus: int
    thm4: Bound
    other_pattern_total: int = field(default=0)

    @property
    def word(self) -> BraidWord:
        """Concatenated representatives; a braid word for the same closure."""
        letters: list[int] = []
        for bc in self.per_band:
            letters.extend(bc.representative.letters)
        return BraidWord(self.n, tuple(letters))

    def flipped_positions(self) -> list[int]:
        return [k for k, x in enumerate(self.word.letters) if not self.pattern.accepts(x)]

    def alternating_word(self) -> BraidWord:
        """``word`` with every reported crossing change applied."""
        return BraidWord(self.n, tuple(
            x if self.pattern.accepts(x) else -x for x in self.word.letters
        ))

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "shift": self.shift,
            "bands": str(self.bands),
            "pattern": self.pattern.value,
            "per_band": [
                {"band": str(bc.band), "cost": bc.cost, "representative": str(bc.representative)}
                for bc in self.per_band
            ],
            "total": self.total,
            "other_pattern_total": self.other_pattern_total,
            "wrap_count": self.wrap_count,
            "formula_value": self.formula_value,
            "genus": self.genus,
            "thm4": {"exact": str(self.thm4.exact), "floor": self.thm4.floor},
        }


def dealternation_upper_word(b: BandWord, depth: Optional[int] = None) -> CostReport:
    """Crossing changes making the closure of ``b`` alternating, band by band.

    The word is first delta-shifted to minimize a_{1,n} bands; one global
    pattern is then chosen for all bands.
    """
    n = b.n
    if n < 4:
        raise ValueError(f"dealternation bound needs n >= 4 strands, got n={n}")
    if component_count(expand(b)) != 1:
        raise ValueError("band word closure is not a knot")
    genus = bennequin_genus(b)
    shifted, wraps = minimize_wrap(b)
    shift = wrap_shift(b)
    totals = {}
    for p in Pattern:
        costs = []
        for band in shifted.bands:
            cost, rep = band_alternating_cost(band.i, band.j, n, band.sign, p, depth)
            costs.append(BandCost(band, cost, rep))
        totals[p] = (sum(c.cost for c in costs), tuple(costs))
    pattern = min(Pattern, key=lambda p: (totals[p][0], p is not Pattern.PLUS_ODD))
    total, per_band = totals[pattern]
    k = len(b)
    return CostReport(
        n=n,
        shift=shift,
        bands=shifted,
        pattern=pattern,
        per_band=per_band,
        total=total,
        wrap_count=wraps,
        formula_value=(n - 3) * k + wraps,
        genus=genus,
        thm4=thm4_bound(genus, n),
        other_pattern_total=totals[pattern.opposite][0],
    )


def thm4_bound(g: int, b: int) -> Bound:
    """(b - 3 + 1/b)(2g - 1 + b), an upper bound on the dealternation number."""
    if b < 4:
        raise ValueError(f"dealternation bound needs braid index >= 4, got {b}")
    if g < 0:
        raise ValueError(f"genus must be >= 0, got {g}")
    return Bound.of((b - 3 + Fraction(1, b)) * (2 * g - 1 + b))
