import pytest

from qstirling import formulas as fm
from qstirling.enumeration import BoundExceededError
from qstirling.exactmath import QPoly


def P(text):
    return QPoly.parse(text)


@pytest.mark.parametrize("fn,n,k,expected", [
    (fm.s2_closed, 2, 1, "1"), (fm.s2_closed, 4, 2, "q + 6"), (fm.s2_closed, 6, 6, "1"),
    (fm.s2_closed_alt, 4, 2, "q + 6"), (fm.s2_closed_alt, 1, 1, "1"), (fm.s2_closed_alt, 5, 3, "5*q + 20"),
    (fm.s1_closed, 3, 1, "q + 1"), (fm.s1_closed, 4, 1, "q^3 + 2*q^2 + 2*q + 1"), (fm.s1_closed, 5, 5, "1"),
    (fm.s1_closed_alt, 3, 1, "q + 1"), (fm.s1_closed_alt, 5, 2, "7*q^3 + 15*q^2 + 18*q + 10"),
    (fm.s1_closed_alt, 4, 4, "1"),
])
def test_closed_examples(fn, n, k, expected):
    assert str(fn(n, k)) == expected


def test_scaled_sum_before_division():
    assert fm.s2_closed_scaled(2, 1) == P("-q + 1")


def test_invalid_arguments():
    with pytest.raises(ValueError):
        fm.s1_closed(3, 4)
    with pytest.raises(ValueError):
        fm.s2_closed_alt(0, 0)
    with pytest.raises(ValueError):
        fm.s1(3, 1, method="bogus")
    with pytest.raises(BoundExceededError):
        fm.s1(11, 3, method="enum")


@pytest.mark.parametrize("method", ["enum", "closed", "closed-alt", "path", "identity"])
def test_every_method_agrees_on_small_rows(method):
    for n in range(7):
        for k in range(n + 1):
            assert fm.s1(n, k, method) == fm.s1_closed(n, k)
            assert fm.s2(n, k, method) == fm.s2_closed(n, k)


def test_identity_examples():
    assert fm.identity_first(3, 1) == P("q + 1")
    assert fm.identity_first(4, 1) == P("q^3 + 2*q^2 + 2*q + 1")
    assert fm.identity_second(3, 2) == P("3")
    assert fm.identity_second(4, 2) == P("q + 6")
    for n in range(8):
        assert fm.identity_first(n, n) == 1 and fm.identity_second(n, n) == 1


def test_identity_first_terms_for_3_1():
    # weights on S2[2,0], S2[3,1], S2[4,2]
    assert [fm.identity_weight(3, 1, j) for j in range(3)] == [10, -5, 1]


@pytest.mark.parametrize("n,k", [(4, 2), (5, 3), (6, 6), (0, 0)])
def test_narayana_identity(n, k):
    assert fm.narayana_identity_check(n, k)


def test_enumeration_sourced_identities_within_bounds():
    # every cell whose inputs stay inside the brute-force bounds
    for n in range(10):
        for k in range(n + 1):
            if 2 * (n - k) <= 12 or k == 0:
                assert fm.identity_first(n, k, "enum") == fm.s1_closed(n, k)
            if 2 * (n - k) <= 10 or k == 0:
                assert fm.identity_second(n, k, "enum") == fm.s2_closed(n, k)


def test_proof_step_examples():
    assert fm.coeff_D(3, 2, 0, 0) == -1
    assert fm.coeff_D(2, 2, 0, 0) == 1
    assert fm.coeff_D(4, 2, 1, 1) == 3
    assert fm.coeff_Cbar(3, 2, 1, 1) == -3
    assert fm.coeff_Cbar(3, 2, 2, 1) == 0
    assert fm.coeff_Cbar(3, 2, 1, 0) == -3  # the closed form would give +3 at i = 0
    assert fm.coeff_C_check(4, 2, 1, 1)
    assert fm.coeff_C_check(5, 2, 2, 1)
    with pytest.raises(ValueError):
        fm.coeff_C_check(3, 3, 0, 0)
    assert fm.coeff_E(3, 1, 0, 0) == 9
    assert fm.coeff_E(2, 1, 0, 1) == 3
    assert fm.coeff_E(3, 3, 1, 0) == 0 == fm.coeff_E_closed(3, 3, 1, 0)


def test_direct_C_equals_Cbar_difference():
    for n in range(9):
        for k in range(n + 1):
            for h in range(n - k + 1):
                for i in range(h + 1):
                    assert fm.coeff_C(n, k, h, i) == fm.coeff_Cbar(n, k, h, i) - fm.coeff_Cbar(n, k, h + 1, i + 1)
