"""Band-generator words, Bennequin surfaces and delta-conjugation.

The band generator joining strands ``i < j`` is

    a_{i,j} = (s_i s_{i+1} ... s_{j-2}) s_{j-1} (s_i ... s_{j-2})^-1

so ``a_{i,i+1} = s_i``.  Band indices are 1-based like the strands.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional

from .braid import BraidWord, component_count

__all__ = [
    "Band",
    "BandWord",
    "BandCensus",
    "BandParseError",
    "parse_bands",
    "expand_band",
    "expand",
    "bennequin_genus",
    "band_census",
    "delta_conjugate",
    "delta_shift",
    "minimize_wrap",
    "wrap_shift",
]


class BandParseError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Band:
    i: int
    j: int
    sign: int = 1

    def __str__(self) -> str:
        return f"{'-' if self.sign < 0 else ''}({self.i},{self.j})"


@dataclass(frozen=True)
class BandWord:
    n: int
    bands: tuple[Band, ...] = ()

    def __post_init__(self):
        bands = tuple(b if isinstance(b, Band) else Band(*b) for b in self.bands)
        for b in bands:
            if not 1 <= b.i < b.j <= self.n:
                raise ValueError(f"band {b} out of range for {self.n} strands")
            if b.sign not in (1, -1):
                raise ValueError(f"band sign must be +1 or -1, got {b.sign}")
        object.__setattr__(self, "bands", bands)

    def __len__(self) -> int:
        return len(self.bands)

    def __iter__(self):
        return iter(self.bands)

    def __str__(self) -> str:
        return " ".join(str(b) for b in self.bands)

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable) -> "BandWord":
        return cls(n, tuple(Band(*p) for p in pairs))


@dataclass(frozen=True)
class BandCensus:
    """Unsigned band counts r_{i,j}, keyed by ``(i, j)`` with ``i < j``."""

    n: int
    counts: dict[tuple[int, int], int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def __getitem__(self, pair: tuple[int, int]) -> int:
        i, j = pair
        return self.counts.get((min(i, j), max(i, j)), 0)

    def cyclic_adjacent_total(self) -> int:
        """r_{1,2} + r_{2,3} + ... + r_{n-1,n} + r_{1,n}."""
        return sum(self[k, k + 1] for k in range(1, self.n)) + self[1, self.n]


_BAND = re.compile(r"(-?)\(\s*(\d+)\s*,\s*(\d+)\s*\)")


def parse_bands(text: str, n: Optional[int] = None) -> BandWord:
    """Parse ``"(1,4) -(1,2) (2,3)"``; ``n`` defaults to the largest ``j``."""
    bands = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _BAND.match(text, pos)
        if not m:
            raise BandParseError(f"malformed band token at {text[pos:pos + 12]!r}")
        i, j = int(m.group(2)), int(m.group(3))
        if not 1 <= i < j:
            raise BandParseError(f"band ({i},{j}) needs 1 <= i < j")
        bands.append(Band(i, j, -1 if m.group(1) else 1))
        pos = m.end()
    if n is None:
        n = max((b.j for b in bands), default=1)
    if any(b.j > n for b in bands):
        raise BandParseError(f"band index exceeds strand count {n}")
    return BandWord(n, tuple(bands))


def expand_band(i: int, j: int, n: int, sign: int = 1) -> BraidWord:
    if not 1 <= i < j <= n:
        raise ValueError(f"band ({i},{j}) out of range for {n} strands")
    conj = tuple(range(i, j - 1))
    core = sign * (j - 1)
    return BraidWord(n, conj + (core,) + tuple(-k for k in reversed(conj)))


def expand(b: BandWord) -> BraidWord:
    letters: list[int] = []
    for band in b.bands:
        letters.extend(expand_band(band.i, band.j, b.n, band.sign).letters)
    return BraidWord(b.n, tuple(letters))


def bennequin_genus(b: BandWord) -> int:
    """Genus (k + 1 - n) / 2 of the Bennequin surface of a knot band word."""
    k = len(b)
    if (k - b.n - 1) % 2:
        raise ValueError(f"{k} bands on {b.n} strands cannot close to a knot (parity)")
    if component_count(expand(b)) != 1:
        raise ValueError("band word closure is not a knot")
    return (k + 1 - b.n) // 2


def band_census(b: BandWord) -> BandCensus:
    counts = Counter((band.i, band.j) for band in b.bands)
    return BandCensus(b.n, dict(sorted(counts.items())))


def _shift_band(band: Band, n: int, by: int = 1) -> Band:
    i = (band.i - 1 + by) % n + 1
    j = (band.j - 1 + by) % n + 1
    return Band(min(i, j), max(i, j), band.sign)


def delta_shift(b: BandWord, times: int) -> BandWord:
    return BandWord(b.n, tuple(_shift_band(band, b.n, times) for band in b.bands))


def delta_conjugate(b: BandWord) -> BandWord:
    """Shift every band a_{i,j} to a_{i+1,j+1}, indices taken mod n."""
    return delta_shift(b, 1)


def wrap_shift(b: BandWord) -> int:
    """Smallest delta-shift minimizing the number of a_{1,n} bands."""
    counts = [band_census(delta_shift(b, s))[1, b.n] for s in range(max(b.n, 1))]
    return counts.index(min(counts))


def minimize_wrap(b: BandWord) -> tuple[BandWord, int]:
    """The delta-shift with the fewest a_{1,n} bands, and that count.

    Ties go to the smallest shift.
    """
    shifted = delta_shift(b, wrap_shift(b))
    return shifted, band_census(shifted)[1, b.n]
