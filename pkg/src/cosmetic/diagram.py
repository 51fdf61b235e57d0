"""Closure diagrams of braid words, smoothing states and the Turaev genus.

Smoothing convention: for a positive crossing sigma_i the A-smoothing
keeps the two strands vertical and the B-smoothing is the cup-cap
e_i.  Negative crossings swap the two.  Under this convention the
Kauffman expansion reads sigma_i -> A * 1 + A^-1 * e_i.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .braid import BraidWord

__all__ = [
    "A",
    "B",
    "Crossing",
    "ClosureDiagram",
    "DiagramError",
    "DisjointSet",
    "closure_diagram",
    "state_circles",
    "all_a",
    "all_b",
    "split_components",
    "turaev_genus_diagram",
    "is_alternating_diagram",
]

A = "A"
B = "B"


class DiagramError(RuntimeError):
    """Raised when a diagram identity that must hold is violated."""


class DisjointSet:
    """Array-backed union-find with path halving and union by size."""

    __slots__ = ("parent", "size", "count")

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n
        self.count = n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]
        self.count -= 1
        return True


@dataclass(frozen=True)
class Crossing:
    level: int  # position of the letter in the word
    position: int  # left strand position i of sigma_i
    sign: int


@dataclass(frozen=True)
class ClosureDiagram:
    """Trace closure of a braid: top position k is joined to bottom position k.

    Arc endpoints are indexed as ``(level, position)`` with ``level`` in
    ``0..c``; level ``c`` is glued back onto level ``0`` by the closure.
    """

    n: int
    crossings: tuple[Crossing, ...]

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def arcs(self) -> list[tuple[tuple[int, int], tuple[int, int]]]:
        """Strand segments between consecutive levels plus closure arcs.

        Segments entering or leaving a crossing end at that crossing's
        endpoints; the four endpoints of crossing ``l`` at position ``i``
        are ``(l, i), (l, i+1), (l+1, i), (l+1, i+1)``.
        """
        c = self.crossing_count
        out = []
        for cr in self.crossings:
            for p in range(1, self.n + 1):
                if p not in (cr.position, cr.position + 1):
                    out.append(((cr.level, p), (cr.level + 1, p)))
        for p in range(1, self.n + 1):
            out.append(((c, p), (0, p)))
        return out

    def node(self, level: int, position: int) -> int:
        return level * self.n + (position - 1)


def closure_diagram(w: BraidWord) -> ClosureDiagram:
    crossings = tuple(
        Crossing(level, abs(x), 1 if x > 0 else -1) for level, x in enumerate(w.letters)
    )
    return ClosureDiagram(w.n, crossings)


def all_a(d: ClosureDiagram) -> tuple[str, ...]:
    return (A,) * d.crossing_count


def all_b(d: ClosureDiagram) -> tuple[str, ...]:
    return (B,) * d.crossing_count


def _vertical(cr: Crossing, choice: str) -> bool:
    return (choice == A) == (cr.sign > 0)


def state_circles(d: ClosureDiagram, s: Sequence[str]) -> int:
    """Number of circles after smoothing every crossing of ``d`` per ``s``."""
    if len(s) != d.crossing_count:
        raise ValueError(
            f"state has {len(s)} entries but the diagram has {d.crossing_count} crossings"
        )
    n = d.n
    c = d.crossing_count
    uf = DisjointSet((c + 1) * n)
    for cr, choice in zip(d.crossings, s):
        top = cr.level * n
        bot = top + n
        i = cr.position - 1
        for p in range(n):
            if p != i and p != i + 1:
                uf.union(top + p, bot + p)
        if _vertical(cr, choice):
            uf.union(top + i, bot + i)
            uf.union(top + i + 1, bot + i + 1)
        else:
            uf.union(top + i, top + i + 1)
            uf.union(bot + i, bot + i + 1)
    for p in range(n):
        uf.union(c * n + p, p)
    return uf.count


def split_components(d: ClosureDiagram) -> int:
    """Connected components of the projected diagram (as a plane graph).

    Positions p and p+1 are joined exactly when some crossing sits
    between them, so a braid closure is connected iff every generator
    occurs.  A knot closure is always connected.
    """
    used = {cr.position for cr in d.crossings}
    return 1 + sum(1 for i in range(1, d.n) if i not in used)


def turaev_genus_diagram(d: ClosureDiagram) -> int:
    """Turaev genus (c + 2 - |s_A| - |s_B|) / 2 of a connected diagram.

    A split closure is treated as the disjoint union of its pieces, so
    the ``+2`` becomes ``+2k`` for ``k`` split components.
    """
    s_a = state_circles(d, all_a(d))
    s_b = state_circles(d, all_b(d))
    twice = d.crossing_count + 2 * split_components(d) - s_a - s_b
    if twice < 0 or twice % 2:
        raise DiagramError(
            f"c + 2k - |s_A| - |s_B| = {twice} is negative or odd; diagram is corrupt"
        )
    return twice // 2


def over_under_sequences(d: ClosureDiagram) -> list[list[bool]]:
    """Per closure component, the over (True) / under (False) sequence met
    while traversing it downward through the braid and around the closure."""
    n = d.n
    c = d.crossing_count
    by_level = d.crossings
    visited = [False] * (n + 1)
    out = []
    for start in range(1, n + 1):
        if visited[start]:
            continue
        seq = []
        p = start
        while not visited[p]:
            visited[p] = True
            for cr in by_level:
                if p == cr.position:
                    seq.append(cr.sign > 0)
                    p += 1
                elif p == cr.position + 1:
                    seq.append(cr.sign < 0)
                    p -= 1
        out.append(seq)
    assert c == 0 or sum(len(s) for s in out) == 2 * c
    return out


def is_alternating_diagram(d: ClosureDiagram) -> bool:
    """True iff every component meets crossings strictly over, under, over, ...

    Components with no crossings are vacuously alternating.
    """
    for seq in over_under_sequences(d):
        m = len(seq)
        if any(seq[k] == seq[(k + 1) % m] for k in range(m)):
            return False
    return True
