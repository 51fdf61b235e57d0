import random
from fractions import Fraction

import pytest

from cosmetic.bennequin import expand, expand_band, parse_bands
from cosmetic.braid import BraidWord, Pattern, is_alternating_word, permutation, writhe
from cosmetic.dealternation import (
    band_alternating_cost,
    band_representatives,
    dealternation_upper_word,
    gamma_alternating_cost,
    gamma_word,
    rewrite_neighbors,
    thm4_bound,
    violations,
)
from cosmetic.jones import jones

from oracles import random_knot_band_word, same_braid_burau
from test_bennequin import SEVEN

PLUS, MINUS = Pattern.PLUS_ODD, Pattern.MINUS_ODD


def test_violations_examples():
    assert violations(BraidWord(3, (1, 2, -1)), PLUS) == 2
    assert violations(BraidWord(2, (1, 1, 1)), PLUS) == 0
    assert violations(BraidWord(2, (1, 1, 1)), MINUS) == 3


def test_band_cost_examples():
    cost, word = band_alternating_cost(1, 3, 4, 1, PLUS)
    assert cost == 1
    assert word == BraidWord(4, (-2, 1, 2))
    assert band_alternating_cost(2, 4, 4, 1, PLUS) == (1, BraidWord(4, (2, 3, -2)))
    assert band_alternating_cost(1, 4, 4, 1, PLUS) == (2, BraidWord(4, (1, 2, 3, -2, -1)))


def test_band_cost_requires_four_strands():
    with pytest.raises(ValueError):
        band_alternating_cost(1, 2, 3, 1, PLUS)
    with pytest.raises(ValueError):
        band_alternating_cost(2, 5, 4, 1, PLUS)


@pytest.mark.parametrize(
    "triple",
    [(a, b, c) for a in (1, -1) for b in (2, -2) for c in (-a,)]
    + [(a, b, c) for a in (2, -2) for b in (1, -1) for c in (-a,)],
)
def test_rewrite_rule_is_braid_identity(triple):
    (moved,) = [w for w in rewrite_neighbors(triple)]
    assert moved != triple
    assert same_braid_burau(3, triple, moved)


def test_far_commutation_move():
    assert (3, 1) in set(rewrite_neighbors((1, 3)))
    assert not list(rewrite_neighbors((1, 2)))


@pytest.mark.parametrize("n", [4, 5, 6])
def test_representatives_are_the_band(n):
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            for s in (1, -1):
                seed = expand_band(i, j, n, s).letters
                reps = band_representatives(i, j, s)
                assert reps[0] == seed
                step = max(1, len(reps) // 12)
                for rep in reps[::step]:
                    assert permutation(BraidWord(n, rep)) == permutation(BraidWord(n, seed))
                    assert writhe(BraidWord(n, rep)) == writhe(BraidWord(n, seed))
                    assert same_braid_burau(n, rep, seed)


def test_cost_bounds_small_exhaustive():
    for n in (4, 5, 6):
        for i in range(1, n):
            for j in range(i + 1, n + 1):
                limit = n - 2 if (i, j) == (1, n) else n - 3
                for s in (1, -1):
                    for p in Pattern:
                        cost, _ = band_alternating_cost(i, j, n, s, p)
                        assert cost <= limit, (n, i, j, s, p)
                        # minimum over the family: inner strands each cost one change
                        assert cost >= j - i - 1


def test_gamma_words():
    assert gamma_word(1, 3, 5) == BraidWord(5, (1, 2, 3))
    assert gamma_word(3, 1, 5) == BraidWord(5, (3, 2, 1))
    assert gamma_word(2, 2, 5) == BraidWord(5, (2,))
    with pytest.raises(ValueError):
        gamma_word(0, 2, 5)


def test_gamma_costs():
    assert gamma_alternating_cost(1, 3, 5) == 1
    assert gamma_alternating_cost(2, 2, 5) == 0
    assert gamma_alternating_cost(1, 2, 4) == 1
    with pytest.raises(ValueError):
        gamma_alternating_cost(1, 4, 5)


def test_gamma_cost_matches_enumeration():
    for n in range(4, 8):
        for i in range(1, n):
            for j in range(1, n):
                if abs(i - j) > n - 3:
                    continue
                w = gamma_word(i, j, n)
                brute = min(
                    violations(x, p) for x in (w, w.inverse()) for p in Pattern
                )
                assert gamma_alternating_cost(i, j, n) == brute


def test_upper_word_examples():
    r = dealternation_upper_word(parse_bands("(1,2) (2,3) (3,4)"))
    assert r.total == 1 and r.pattern is PLUS
    assert r.formula_value == 3
    seven = dealternation_upper_word(parse_bands(SEVEN))
    assert seven.formula_value == 8
    assert seven.thm4.exact == Fraction(35, 4)
    assert seven.total <= seven.formula_value
    with pytest.raises(ValueError):
        dealternation_upper_word(parse_bands("(1,2) (1,2) (1,2)"))


def test_upper_word_rejects_links():
    with pytest.raises(ValueError):
        dealternation_upper_word(parse_bands("(1,2) (1,2) (3,4) (2,3)"))


def test_upper_word_end_to_end():
    rng = random.Random(8)
    for _ in range(40):
        b = random_knot_band_word(rng, rng.randint(4, 6))
        r = dealternation_upper_word(b)
        alt = r.alternating_word()
        assert is_alternating_word(alt) is r.pattern
        assert len(r.flipped_positions()) == r.total
        assert r.total == sum(bc.cost for bc in r.per_band)
        assert r.total <= r.other_pattern_total


def test_upper_word_is_same_knot():
    rng = random.Random(9)
    for _ in range(15):
        b = random_knot_band_word(rng, 4, max_len=7)
        r = dealternation_upper_word(b)
        assert jones(r.word) == jones(expand(b))


def test_thm4_bound_examples():
    assert thm4_bound(3, 4) == (Fraction(45, 4), 11)
    assert thm4_bound(2, 4) == (Fraction(35, 4), 8)
    assert thm4_bound(1, 4) == (Fraction(25, 4), 6)
    with pytest.raises(ValueError):
        thm4_bound(3, 3)
