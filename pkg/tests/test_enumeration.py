import itertools
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qstirling import enumeration as en
from qstirling.exactmath import QPoly
from qstirling.qcomb import stirling_classical

FIG = en.SetPartition.parse("156|24|38|79A")
SIGMA = (8, 6, 9, 2, 3, 7, 5, 1, 4)
FIG_WEIGHTS = (None, 1, None, 2, None, None, 1, 1, 0)


def test_partition_parsing_and_rendering():
    assert FIG.n == 10
    assert str(FIG) == "156|24|38|79A"
    assert FIG.arcs == ((1, 5), (2, 4), (3, 8), (5, 6), (7, 9), (9, 10))
    with pytest.raises(ValueError):
        en.SetPartition(3, ((1, 2), (2, 3)))


def test_crossings():
    assert en.crossings(FIG) == 3
    assert en.crossings(en.SetPartition.parse("1|2|3|4")) == 0
    assert en.crossings(en.SetPartition.parse("13|24")) == 1


def test_rook_image_of_figure_partition():
    r = en.partition_to_rooks(FIG)
    assert r.n == 9 and len(r.rooks) == 6
    assert en.rook_inversions(r) == 3
    assert en.rooks_to_partition(r) == FIG


def test_small_rook_cases():
    assert en.partition_to_rooks(en.SetPartition.parse("1|2|3")).rooks == frozenset()
    single = en.partition_to_rooks(en.SetPartition.parse("12"))
    assert single.n == 1 and len(single.rooks) == 1 and en.rook_inversions(single) == 0
    assert en.rook_inversions(en.RookPlacement(4, frozenset())) == 0
    with pytest.raises(ValueError):
        en.RookPlacement(3, frozenset({(1, 1), (2, 1)}))
    with pytest.raises(ValueError):
        en.RookPlacement(3, frozenset({(3, 2)}))


@pytest.mark.parametrize("n", range(1, 8))
def test_partition_rook_bijection(n):
    images = {en.partition_to_rooks(p) for p in en.set_partitions(n)}
    all_placements = {r for m in range(n) for r in en.rook_placements(n - 1, m)}
    assert images == all_placements


@pytest.mark.parametrize("n,k,expected", [(4, 2, "q + 6"), (5, 2, "q^2 + 4*q + 10"), (6, 6, "1")])
def test_s2_enum_examples(n, k, expected):
    assert str(en.s2_enum(n, k)) == expected


@pytest.mark.parametrize("n", range(9))
def test_s2_enum_two_ways(n):
    for k in range(n + 1):
        assert en.s2_enum(n, k) == en.s2_enum_rooks(n, k)
        assert en.s2_enum(n, k)(1) == stirling_classical(2, n, k)


def test_perm_stats():
    assert en.perm_stats(SIGMA) == (5, 4)
    # only the last entry of the identity beats everything to its right
    assert en.perm_stats(tuple(range(1, 7))) == (0, 1)
    assert en.perm_stats(tuple(range(6, 0, -1))) == (0, 6)
    assert len(en.special_inversion_cells(SIGMA)) == 5


@pytest.mark.parametrize("n,k,expected", [(4, 1, "q^3 + 2*q^2 + 2*q + 1"),
                                           (5, 2, "7*q^3 + 15*q^2 + 18*q + 10"), (5, 5, "1")])
def test_s1_enum_examples(n, k, expected):
    assert str(en.s1_enum(n, k)) == expected


@pytest.mark.parametrize("n", range(9))
def test_s1_enum_totals(n):
    assert sum(en.s1_enum(n, k)(1) for k in range(n + 1)) == math.factorial(n)


def test_bounds():
    with pytest.raises(en.BoundExceededError):
        en.s1_enum(11, 2)
    with pytest.raises(en.BoundExceededError):
        en.s2_enum(13, 2)
    with pytest.raises(ValueError):
        en.s1_enum(3, 4)


def test_phi_on_figure_permutation():
    path = en.phi(SIGMA)
    assert path.steps == en.bounding_path(SIGMA)
    assert path.weights == FIG_WEIGHTS
    assert path.weight() == (5, 4)
    assert en.phi_inverse(path) == SIGMA


def test_phi_trivial():
    path = en.phi((1,))
    assert path.steps == (1, -1) and path.weights == (None,)
    assert en.phi_inverse(path) == (1,)


def test_phi_inverse_rejects_bad_weights():
    with pytest.raises(en.InvalidWeightError):
        en.phi_inverse(en.WeightedDyckPath((1, -1), (0,)))
    with pytest.raises(en.InvalidWeightError):
        en.phi_inverse(en.WeightedDyckPath((1, 1, -1, -1), (None, 1)))


@pytest.mark.parametrize("n", range(7))
def test_weighted_paths_count_permutations(n):
    assert sum(1 for _ in en.weighted_dyck_paths(n)) == math.factorial(n)


@given(st.permutations(range(1, 10)))
def test_phi_round_trip_random(sigma):
    sigma = tuple(sigma)
    path = en.phi(sigma)
    assert path.weight() == en.perm_stats(sigma)
    assert en.phi_inverse(path) == sigma


@given(st.integers(1, 12).flatmap(lambda n: st.lists(st.integers(0, n - 1), min_size=n, max_size=n)))
def test_random_partitions_cro_equals_inv(labels):
    # turn arbitrary labels into a restricted growth string
    seen = {}
    rgs = [seen.setdefault(x, len(seen)) for x in labels]
    p = en.SetPartition.from_rgs(rgs)
    assert en.crossings(p) == en.rook_inversions(en.partition_to_rooks(p))
