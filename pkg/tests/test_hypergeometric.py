from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from qstirling import hypergeometric as hg


def test_examples():
    assert hg.pfq_eval(hg.HypSeries((0, 3, 4), (5, 6))) == 1
    assert hg.pfq_eval(hg.HypSeries((-1, 1), (2,))) == Fraction(1, 2)
    assert hg.pfq_eval(hg.HypSeries((-1, 1, 2), (4, -1))) == Fraction(3, 2)


def test_lemma_examples():
    assert hg.summation_lemma_check("saalschutz", 1, 1, 2, 4)
    assert hg.summation_lemma_check("gauss", 2, 1, 3)
    assert hg.summation_lemma_check("contiguity", (-3, 2, 5, 5), (7, Fraction(1, 2), 4))
    with pytest.raises(ValueError):
        hg.summation_lemma_check("kummer", 1)


def test_series_validation():
    with pytest.raises(ValueError):
        hg.HypSeries((1, 2), (3,))  # does not terminate
    with pytest.raises(ValueError):
        hg.HypSeries((-1, 2, 3), (3,))
    with pytest.raises(hg.PoleError):
        hg.HypSeries((-3, 1), (-1,))
    assert hg.HypSeries((-2, 1), (-2,)).length == 2


def test_pochhammer():
    assert hg.pochhammer(3, 0) == 1
    assert hg.pochhammer(3, 2) == 12
    assert hg.pochhammer(-2, 3) == 0


def test_grids_are_large_enough():
    assert sum(1 for _ in hg.saalschutz_grid()) >= 100
    assert sum(1 for _ in hg.gauss_grid()) >= 100
    assert sum(1 for _ in hg.contiguity_grid()) >= 100


fracs = st.fractions(min_value=-8, max_value=8, max_denominator=4)


@given(st.integers(0, 6), fracs, fracs, fracs)
def test_saalschutz_random(m, a, b, c):
    try:
        ok = hg.saalschutz_check(m, a, b, c)
    except hg.PoleError:
        assume(False)
    assert ok


@given(st.integers(0, 6), fracs, fracs)
def test_gauss_random(m, a, c):
    try:
        ok = hg.gauss_check(m, a, c)
    except hg.PoleError:
        assume(False)
    assert ok
