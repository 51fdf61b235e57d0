import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cosmetic.bennequin import (
    Band,
    BandParseError,
    BandWord,
    band_census,
    bennequin_genus,
    delta_conjugate,
    delta_shift,
    expand,
    expand_band,
    minimize_wrap,
    parse_bands,
)
from cosmetic.braid import BraidWord, component_count, cycles, permutation
from cosmetic.jones import jones

from oracles import random_knot_band_word, same_braid_burau

SEVEN = "(1,4) (1,4) (1,2) (2,3) (3,4) (1,2) (2,3)"


def band_words(min_n=2, max_n=6, max_len=10):
    @st.composite
    def build(draw):
        n = draw(st.integers(min_n, max_n))
        pair = st.tuples(st.integers(1, n - 1), st.integers(2, n)).filter(lambda p: p[0] < p[1])
        bands = draw(st.lists(st.tuples(pair, st.sampled_from((1, -1))), max_size=max_len))
        return BandWord(n, tuple(Band(i, j, s) for (i, j), s in bands))

    return build()


def test_expand_examples():
    assert expand_band(1, 2, 5) == BraidWord(5, (1,))
    assert expand_band(2, 4, 4) == BraidWord(4, (2, 3, -2))
    assert expand_band(1, 4, 4) == BraidWord(4, (1, 2, 3, -2, -1))
    assert expand_band(1, 4, 4, -1) == BraidWord(4, (1, 2, -3, -2, -1))


def test_expand_range():
    with pytest.raises(ValueError):
        expand_band(2, 2, 4)
    with pytest.raises(ValueError):
        expand_band(1, 5, 4)


def test_parse_bands():
    b = parse_bands(SEVEN)
    assert b.n == 4 and len(b) == 7
    assert parse_bands("-(1,3)  (2,3)", 5) == BandWord(5, (Band(1, 3, -1), Band(2, 3, 1)))
    assert parse_bands(str(b), 4) == b
    for bad in ("(1,1)", "(2,1)", "(1,2", "1,2"):
        with pytest.raises(BandParseError):
            parse_bands(bad)
    with pytest.raises(BandParseError):
        parse_bands("(1,5)", 4)


def test_bennequin_genus_examples():
    assert bennequin_genus(parse_bands("(1,2) (1,2) (1,2)")) == 1
    assert bennequin_genus(parse_bands("(1,2) (2,3) (3,4)")) == 0
    seven = parse_bands(SEVEN)
    assert len(cycles(permutation(expand(seven)))) == 1
    assert bennequin_genus(seven) == 2


def test_bennequin_genus_errors():
    with pytest.raises(ValueError, match="parity"):
        bennequin_genus(parse_bands("(1,2) (1,2)"))
    with pytest.raises(ValueError, match="not a knot"):
        bennequin_genus(parse_bands("(1,2) (1,2) (3,4)"))


def test_census_examples():
    assert band_census(parse_bands("(1,2) (1,2) (1,2)"))[1, 2] == 3
    c = band_census(parse_bands(SEVEN))
    assert (c[1, 2], c[2, 3], c[3, 4], c[1, 4]) == (2, 2, 1, 2)
    assert c.total == 7
    empty = band_census(BandWord(4))
    assert empty.total == 0 and empty[1, 4] == 0


def test_delta_conjugate_examples():
    assert delta_conjugate(BandWord(4, (Band(1, 2),))) == BandWord(4, (Band(2, 3),))
    assert delta_conjugate(BandWord(4, (Band(3, 4),))) == BandWord(4, (Band(1, 4),))
    assert delta_conjugate(BandWord(4, (Band(1, 4),))) == BandWord(4, (Band(1, 2),))
    assert delta_conjugate(BandWord(4, (Band(2, 4, -1),))) == BandWord(4, (Band(1, 3, -1),))


def test_delta_shift_full_turn_is_identity():
    b = parse_bands(SEVEN)
    assert delta_shift(b, 4) == b


def test_minimize_wrap_examples():
    shifted, wraps = minimize_wrap(parse_bands(SEVEN))
    assert wraps == 1
    assert shifted == delta_shift(parse_bands(SEVEN), 1)
    assert wraps <= 7 / 4
    # on two strands a_{1,2} is also the wrap band, whatever the shift
    assert minimize_wrap(parse_bands("(1,2) (1,2) (1,2)"))[1] == 3
    assert minimize_wrap(BandWord(4)) == (BandWord(4), 0)


def test_minimize_wrap_enumeration_oracle():
    rng = random.Random(3)
    for _ in range(100):
        b = random_knot_band_word(rng, rng.randint(4, 6))
        counts = [band_census(delta_shift(b, s))[1, b.n] for s in range(b.n)]
        shifted, wraps = minimize_wrap(b)
        assert wraps == min(counts)
        assert shifted == delta_shift(b, counts.index(wraps))


@pytest.mark.parametrize("n", [4, 5, 6])
def test_delta_is_conjugation_on_single_bands(n):
    # delta a_{i,j} delta^-1 == a_{i+1,j+1} in the braid group (Burau check)
    delta = tuple(range(1, n))
    delta_inv = tuple(-k for k in reversed(delta))
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            for s in (1, -1):
                band = BandWord(n, (Band(i, j, s),))
                lhs = delta + expand(band).letters + delta_inv
                rhs = expand(delta_conjugate(band)).letters
                assert same_braid_burau(n, lhs, rhs)


def test_delta_conjugate_preserves_closure_jones():
    rng = random.Random(5)
    for _ in range(25):
        b = random_knot_band_word(rng, rng.randint(4, 5), max_len=8)
        assert jones(expand(delta_conjugate(b))) == jones(expand(b))


@given(band_words())
def test_component_count_invariant_under_delta(b):
    assert component_count(expand(delta_conjugate(b))) == component_count(expand(b))


def test_component_count_invariant_under_delta_random():
    rng = random.Random(500)
    for _ in range(500):
        n = rng.randint(2, 7)
        bands = []
        for _ in range(rng.randint(0, 10)):
            i, j = sorted(rng.sample(range(1, n + 1), 2))
            bands.append(Band(i, j, rng.choice((1, -1))))
        b = BandWord(n, tuple(bands))
        assert component_count(expand(delta_conjugate(b))) == component_count(expand(b))


@given(band_words(min_n=4))
def test_genus_invariant_under_delta(b):
    try:
        g = bennequin_genus(b)
    except ValueError:
        return
    assert bennequin_genus(delta_conjugate(b)) == g


@given(band_words(min_n=4))
def test_minimize_wrap_at_most_average(b):
    _, wraps = minimize_wrap(b)
    assert wraps * b.n <= band_census(b).cyclic_adjacent_total()


@pytest.mark.parametrize("i,j,n", [(1, 2, 3), (1, 4, 4), (2, 5, 6), (1, 6, 6)])
def test_band_times_inverse_trivial_permutation(i, j, n):
    w = expand_band(i, j, n)
    assert permutation(w * w.inverse()) == tuple(range(1, n + 1))
    assert len(w) == 2 * (j - i) - 1
