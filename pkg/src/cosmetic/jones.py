"""Kauffman bracket and Jones polynomial of braid closures.

Two independent bracket evaluators are provided.  ``bracket_state_sum``
enumerates all 2^c smoothing states of the closure diagram and serves
as the oracle.  ``bracket_tl`` pushes the word through the
Temperley-Lieb algebra in the planar-pairing basis (Catalan(n)
elements), which is polynomial in the word length.
"""

from __future__ import annotations

import itertools
from collections import Counter

from .braid import BraidWord, component_count, writhe
from .diagram import A, B, ClosureDiagram, closure_diagram, state_circles
from .laurent import LaurentPoly

__all__ = [
    "DEFAULT_MAX_CROSSINGS",
    "DEFAULT_MAX_STRANDS",
    "EvaluatorLimitError",
    "LOOP",
    "bracket_state_sum",
    "bracket_tl",
    "bracket",
    "jones",
    "jones_span",
]

DEFAULT_MAX_CROSSINGS = 16
DEFAULT_MAX_STRANDS = 12

# d = -A^2 - A^-2, the value of a trivial circle
LOOP = LaurentPoly({2: -1, -2: -1}, "A")


class EvaluatorLimitError(ValueError):
    pass


def _loop_power(k: int, cache: dict[int, LaurentPoly] = {}) -> LaurentPoly:
    if k not in cache:
        cache[k] = LOOP ** k
    return cache[k]


def bracket_state_sum(d: ClosureDiagram, max_crossings: int = DEFAULT_MAX_CROSSINGS) -> LaurentPoly:
    """Sum of A^(#A - #B) d^(|s| - 1) over every smoothing state of ``d``."""
    c = d.crossing_count
    if c > max_crossings:
        raise EvaluatorLimitError(
            f"state-sum oracle limited to {max_crossings} crossings, diagram has {c}"
        )
    tally: Counter[tuple[int, int]] = Counter()
    for state in itertools.product((A, B), repeat=c):
        n_a = state.count(A)
        tally[(2 * n_a - c, state_circles(d, state))] += 1
    total = LaurentPoly(var="A")
    for (exponent, circles), mult in sorted(tally.items()):
        total = total + _loop_power(circles - 1).shift(exponent) * mult
    return total


def _identity_pairing(n: int) -> tuple[int, ...]:
    return tuple(range(n, 2 * n)) + tuple(range(n))


def _cap_cup(pairing: tuple[int, ...], n: int, i: int) -> tuple[tuple[int, ...], int]:
    """Stack e_{i+1} (0-based position ``i``) under ``pairing``.

    Returns the new pairing and the number of closed loops created.
    """
    lo, hi = n + i, n + i + 1
    a, b = pairing[lo], pairing[hi]
    if a == hi:
        return pairing, 1
    out = list(pairing)
    out[a], out[b] = b, a
    out[lo], out[hi] = hi, lo
    return tuple(out), 0


def _trace_loops(pairing: tuple[int, ...], n: int) -> int:
    """Circles in the trace closure: top k is joined to bottom k."""
    seen = [False] * (2 * n)
    loops = 0
    for start in range(n):
        if seen[start]:
            continue
        loops += 1
        x = start
        while not seen[x]:
            seen[x] = True
            y = pairing[x]
            seen[y] = True
            x = y - n if y >= n else y + n
    return loops


def bracket_tl(w: BraidWord, max_strands: int = DEFAULT_MAX_STRANDS) -> LaurentPoly:
    """Kauffman bracket of the closure of ``w`` via Temperley-Lieb multiplication."""
    n = w.n
    if n > max_strands:
        raise EvaluatorLimitError(f"Temperley-Lieb evaluator limited to {max_strands} strands, word has {n}")
    state: dict[tuple[int, ...], LaurentPoly] = {_identity_pairing(n): LaurentPoly.constant(1, "A")}
    for x in w.letters:
        i = abs(x) - 1
        s = 1 if x > 0 else -1
        nxt: dict[tuple[int, ...], LaurentPoly] = {}
        for pairing, coeff in state.items():
            # sigma_i^s = A^s * 1 + A^-s * e_i
            vert = coeff.shift(s)
            nxt[pairing] = nxt[pairing] + vert if pairing in nxt else vert
            cup, loops = _cap_cup(pairing, n, i)
            term = coeff.shift(-s)
            if loops:
                term = term * LOOP
            nxt[cup] = nxt[cup] + term if cup in nxt else term
        state = {p: c for p, c in nxt.items() if c}
    total = LaurentPoly(var="A")
    for pairing, coeff in sorted(state.items()):
        total = total + coeff * _loop_power(_trace_loops(pairing, n) - 1)
    return total


def bracket(
    w: BraidWord,
    *,
    oracle: bool = False,
    max_crossings: int = DEFAULT_MAX_CROSSINGS,
    max_strands: int = DEFAULT_MAX_STRANDS,
) -> LaurentPoly:
    """Bracket of the closure, via the basis evaluator unless ``oracle`` is
    set or the strand count exceeds its limit."""
    if oracle or w.n > max_strands:
        return bracket_state_sum(closure_diagram(w), max_crossings)
    return bracket_tl(w, max_strands)


def jones(w: BraidWord, **kwargs) -> LaurentPoly:
    """Jones polynomial V = (-A)^(-3 writhe) <closure>.

    Knots come back in ``t = A^-4``.  Links keep the variable ``A``
    because their exponents in ``t`` are half-integers.
    """
    wr = writhe(w)
    v = bracket(w, **kwargs).shift(-3 * wr) * (-1) ** (wr % 2)
    if component_count(w) == 1:
        return v.substitute("t", -4)
    return v


def jones_span(w: BraidWord, **kwargs) -> int:
    if component_count(w) != 1:
        raise ValueError("Jones span is only reported for knots")
    return jones(w, **kwargs).span
