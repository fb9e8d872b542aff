import pytest

from qstirling import paths as pa
from qstirling.exactmath import ONE, Q, QPoly, XQPoly

X = XQPoly.x()


def test_path_counts_with_unit_weights():
    one = lambda h: 1  # noqa: E731
    assert pa.path_gf(pa.WeightSpec(pa.MOTZKIN, one, one), 3) == XQPoly((4,))
    assert pa.path_gf(pa.WeightSpec(pa.DYCK_T, one, one), 3) == XQPoly((5,))
    assert pa.path_gf(pa.WeightSpec(pa.SCHRODER, one, one), 2) == XQPoly((6,))
    with pytest.raises(ValueError):
        pa.WeightSpec("hexagonal", one, one)


def test_jfraction_rows():
    assert pa.s2_via_jfraction(0) == XQPoly((1,))
    assert pa.s2_via_jfraction(3) == X ** 3 + 3 * X ** 2 + X
    assert pa.s2_via_jfraction(4).coeff(2) == Q + 6


def test_tfraction_rows():
    assert pa.s1_via_tfraction(0) == XQPoly((1,))
    assert pa.s1_via_tfraction(3) == X ** 3 + 3 * X ** 2 + (Q + 1) * X
    assert pa.s1_via_tfraction(4).coeff(1) == QPoly.parse("q^3 + 2*q^2 + 2*q + 1")


def test_schroder_rows():
    assert pa.s1_scaled_via_schroder(0) == XQPoly((1,))
    assert pa.s1_scaled_via_schroder(1) == X
    assert pa.s1_scaled_via_schroder(2) == X ** 2 + (ONE - Q) * X


@pytest.mark.parametrize("fn", [pa.mu_dp, pa.mu_closed])
def test_mu_examples(fn):
    assert fn(1, 1) == ONE
    assert fn(2, 0) == ONE - Q
    assert fn(3, 1) == QPoly.parse("-q^2 - q + 2")
    assert fn(7, 7) == ONE


def test_mu_parity():
    with pytest.raises(pa.ParityError):
        pa.mu_dp(3, 0)
    with pytest.raises(pa.ParityError):
        pa.mu_closed(2, 3)


@pytest.mark.parametrize("n", range(13))
def test_mu_dp_matches_closed(n):
    for k in range(n % 2, n + 1, 2):
        assert pa.mu_dp(n, k) == pa.mu_closed(n, k)


@pytest.mark.parametrize("n", [0, 3, 6])
def test_qstsum(n):
    assert pa.qstsum_check(n)


def test_qstsum_with_dp_mu():
    for n in range(6):
        assert pa.qstsum_rhs(n, pa.mu_dp) == pa.qstsum_lhs(n)


@pytest.mark.parametrize("kind,spec", [(pa.MOTZKIN, pa.s2_jfraction_spec()),
                                       (pa.DYCK_T, pa.s1_tfraction_spec()),
                                       (pa.SCHRODER, pa.s1_schroder_spec())])
def test_continued_fraction_matches_paths(kind, spec):
    series = pa.continued_fraction_series(kind, spec, 6)
    assert series == [pa.path_gf(spec, n) for n in range(7)]


def test_shallow_truncation_differs():
    spec = pa.s2_jfraction_spec()
    assert pa.continued_fraction_series(pa.MOTZKIN, spec, 6, depth=2)[6] != pa.path_gf(spec, 6)
