"""Braid words over the Artin generators of B_n.

A word is stored as a tuple of nonzero integers: ``k`` stands for
sigma_k and ``-k`` for its inverse, the same convention used by the
text syntax ``"1 -2 1 -2"``.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable, Optional

__all__ = [
    "BraidWord",
    "BraidParseError",
    "Pattern",
    "parse_braid",
    "permutation",
    "cycles",
    "component_count",
    "writhe",
    "mirror",
    "is_alternating_word",
]


class BraidParseError(ValueError):
    pass


class Pattern(enum.Enum):
    """Target alphabet of an alternating braid.

    ``PLUS_ODD`` is {sigma_1, sigma_2^-1, sigma_3, sigma_4^-1, ...};
    ``MINUS_ODD`` is its mirror.
    """

    PLUS_ODD = "PlusOdd"
    MINUS_ODD = "MinusOdd"

    def expected_sign(self, index: int) -> int:
        sign = 1 if index % 2 == 1 else -1
        return sign if self is Pattern.PLUS_ODD else -sign

    def accepts(self, letter: int) -> bool:
        return (1 if letter > 0 else -1) == self.expected_sign(abs(letter))

    @property
    def opposite(self) -> "Pattern":
        return Pattern.MINUS_ODD if self is Pattern.PLUS_ODD else Pattern.PLUS_ODD


@dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"strand count must be >= 1, got {self.n}")
        letters = tuple(int(x) for x in self.letters)
        for x in letters:
            if x == 0 or abs(x) > self.n - 1:
                raise ValueError(f"generator {x} out of range for B_{self.n}")
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if not isinstance(other, BraidWord):
            return NotImplemented
        return BraidWord(max(self.n, other.n), self.letters + other.letters)

    def __pow__(self, k: int) -> "BraidWord":
        if k < 0:
            return self.inverse() ** (-k)
        return BraidWord(self.n, self.letters * k)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.n, tuple(-x for x in reversed(self.letters)))

    def with_strands(self, n: int) -> "BraidWord":
        return BraidWord(n, self.letters)

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.letters)

    @classmethod
    def from_letters(cls, letters: Iterable[int], n: Optional[int] = None) -> "BraidWord":
        letters = tuple(letters)
        if n is None:
            n = 1 + max((abs(x) for x in letters), default=0)
        return cls(n, letters)


_TOKEN = re.compile(r"[+-]?\d+")


def parse_braid(text: str, n_hint: Optional[int] = None) -> BraidWord:
    """Parse ``"1 -2 1"`` (whitespace or comma separated) into a word.

    Without ``n_hint`` the strand count is one more than the largest
    generator index, so the empty string is the identity in B_1.
    """
    letters = []
    for token in re.split(r"[\s,]+", text.strip()):
        if not token:
            continue
        if not _TOKEN.fullmatch(token):
            raise BraidParseError(f"malformed braid token {token!r}")
        value = int(token)
        if value == 0:
            raise BraidParseError("braid generator 0 does not exist")
        if n_hint is not None and abs(value) >= n_hint:
            raise BraidParseError(f"generator {value} needs more than {n_hint} strands")
        letters.append(value)
    if n_hint is not None and n_hint < 1:
        raise BraidParseError(f"strand count must be >= 1, got {n_hint}")
    return BraidWord.from_letters(letters, n_hint)


def permutation(w: BraidWord) -> tuple[int, ...]:
    """Strand permutation as a 1-based tuple ``perm`` with ``perm[k-1]``
    the bottom position of the strand starting at top position ``k``."""
    # pos[p] = which starting strand currently occupies position p
    pos = list(range(w.n + 1))
    for x in w.letters:
        i = abs(x)
        pos[i], pos[i + 1] = pos[i + 1], pos[i]
    perm = [0] * w.n
    for p in range(1, w.n + 1):
        perm[pos[p] - 1] = p
    return tuple(perm)


def cycles(perm: tuple[int, ...]) -> list[tuple[int, ...]]:
    seen = set()
    out = []
    for start in range(1, len(perm) + 1):
        if start in seen:
            continue
        cyc = []
        k = start
        while k not in seen:
            seen.add(k)
            cyc.append(k)
            k = perm[k - 1]
        out.append(tuple(cyc))
    return out


def component_count(w: BraidWord) -> int:
    return len(cycles(permutation(w)))


def writhe(w: BraidWord) -> int:
    return sum(1 if x > 0 else -1 for x in w.letters)


def mirror(w: BraidWord) -> BraidWord:
    return BraidWord(w.n, tuple(-x for x in w.letters))


def is_alternating_word(w: BraidWord) -> Optional[Pattern]:
    """Return the pattern every letter of ``w`` conforms to, if any.

    The empty word conforms to both; ``PLUS_ODD`` is reported then.
    """
    for pattern in Pattern:
        if all(pattern.accepts(x) for x in w.letters):
            return pattern
    return None
