"""
Integer and q-analog combinatorial primitives.

Binomials here follow an extended convention so that the four-parameter
families A and B are total over all integer arguments:

>>> binom_ext(-1, -1), binom_ext(-2, -2), binom_ext(-3, -3), binom_ext(-1, 0)
(1, 1, 0, 0)
"""
from __future__ import annotations

import math
from functools import lru_cache

from .exactmath import ONE, ZERO, QPoly

__all__ = [
    "binom_ext", "binom_general", "qbinom", "qbinom_alt", "narayana", "catalan",
    "stirling_classical", "coeff_A", "coeff_B", "coeff_A_factored",
    "coeff_B_factored", "coeff_A_four_term", "coeff_B_four_term",
    "signed_matrix_inverse_check",
]


def binom_ext(u: int, v: int) -> int:
    if (u, v) in ((-1, -1), (-2, -2)):
        return 1
    if v < 0 or u < v:
        return 0
    return math.comb(u, v)


def binom_general(u: int, v: int) -> int:
    """``u (u-1) ... (u-v+1) / v!`` for v >= 0, else 0; so ``binom_general(-1, 0) == 1``."""
    if v < 0:
        return 0
    if u >= 0:
        return math.comb(u, v)
    return (-1) ** v * math.comb(v - u - 1, v)


@lru_cache(maxsize=None)
def qbinom(n: int, k: int) -> QPoly:
    """Gaussian binomial via ``[n,k] = [n-1,k-1] + q^k [n-1,k]``.

    >>> str(qbinom(4, 2))
    'q^4 + q^3 + 2*q^2 + q + 1'
    """
    if k < 0 or k > n:
        return ZERO
    if k == 0 or k == n:
        return ONE
    return qbinom(n - 1, k - 1) + QPoly.monomial(k) * qbinom(n - 1, k)


@lru_cache(maxsize=None)
def qbinom_alt(n: int, k: int) -> QPoly:
    """Gaussian binomial via the mirrored recurrence ``q^(n-k) [n-1,k-1] + [n-1,k]``."""
    if k < 0 or k > n:
        return ZERO
    if k == 0 or k == n:
        return ONE
    return QPoly.monomial(n - k) * qbinom_alt(n - 1, k - 1) + qbinom_alt(n - 1, k)


def narayana(n: int, k: int) -> int:
    if n < 0 or k < 0:
        raise ValueError("narayana requires n, k >= 0")
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0 or k > n:
        return 0
    num = math.comb(n, k - 1) * math.comb(n, k)
    assert num % n == 0
    return num // n


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


@lru_cache(maxsize=None)
def _stirling1(n: int, k: int) -> int:
    if n == 0:
        return 1 if k == 0 else 0
    if k <= 0 or k > n:
        return 0
    return _stirling1(n - 1, k - 1) + (n - 1) * _stirling1(n - 1, k)


def _stirling2(n: int, k: int) -> int:
    total = sum((-1) ** (k - j) * math.comb(k, j) * j**n for j in range(k + 1))
    f = math.factorial(k)
    if total % f:
        raise ArithmeticError(f"exact formula for S2({n},{k}) is not integral")
    return total // f


def stirling_classical(kind: int, n: int, k: int) -> int:
    """Unsigned Stirling numbers.

    The first kind uses the recurrence ``c(n,k) = c(n-1,k-1) + (n-1) c(n-1,k)``;
    the second kind uses the alternating-sum formula with ``0^0 = 1``.
    """
    if n < 0 or k < 0:
        raise ValueError("stirling_classical requires n, k >= 0")
    if kind == 1:
        return _stirling1(n, k)
    if kind == 2:
        return _stirling2(n, k) if k <= n else 0
    raise ValueError(f"kind must be 1 or 2, not {kind!r}")


def coeff_A(n: int, k: int, i: int, j: int) -> int:
    b = binom_ext
    return b(n, k + i) * b(n, k - j) - b(n, k + i + 1) * b(n, k - j - 1)


def coeff_B(n: int, k: int, i: int, j: int) -> int:
    b = binom_ext
    return b(n + j - 1, k - 1) * b(n - i - 1, k - 1) - b(n + j, k - 1) * b(n - i - 2, k - 1)


def coeff_A_factored(n: int, k: int, i: int, j: int) -> int:
    """``(i+j+1)/(n+1) * C(n+1, k-j) * C(n+1, k+i+1)``, division checked."""
    num = (i + j + 1) * binom_ext(n + 1, k - j) * binom_ext(n + 1, k + i + 1)
    den = n + 1
    if den == 0:
        raise ZeroDivisionError("factored form of A undefined at n = -1")
    quo, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"factored A^{n},{k}_{i},{j} is not integral")
    return quo


def coeff_B_factored(n: int, k: int, i: int, j: int) -> int:
    """``(i+j+1)/(n+j) * C(n+j, k-1) * C(n-i-2, k-2)``, division checked."""
    num = (i + j + 1) * binom_ext(n + j, k - 1) * binom_ext(n - i - 2, k - 2)
    den = n + j
    if den == 0:
        raise ZeroDivisionError("factored form of B undefined at n + j = 0")
    quo, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"factored B^{n},{k}_{i},{j} is not integral")
    return quo


def coeff_A_four_term(n: int, k: int, i: int, j: int) -> int:
    """Four neighbouring A^{n-1,k-1} values; equals A^{n,k}_{i,j} for 0 <= j <= i <= n-k."""
    a = lambda ii, jj: coeff_A(n - 1, k - 1, ii, jj)  # noqa: E731
    return a(i, j - 1) + a(i, j) + a(i + 1, j - 1) + a(i + 1, j)


def coeff_B_four_term(n: int, k: int, i: int, j: int) -> int:
    """Signed four neighbouring B^{n+1,k+1} values; equals B^{n,k}_{i,j} on the same range."""
    b = lambda ii, jj: coeff_B(n + 1, k + 1, ii, jj)  # noqa: E731
    return -b(i, j - 1) + b(i, j) + b(i + 1, j - 1) - b(i + 1, j)


def signed_matrix_inverse_check(N: int) -> bool:
    """True iff the N x N lower-triangular matrices ``(-1)^(i-j) c(i,j)`` and
    ``S(i,j)`` multiply to the identity.

    The sign sits on one kind only; with signs on both the product is the
    signed Lah matrix instead.  Conjugating by ``diag((-1)^i)`` moves the sign
    to the other kind, so this covers both placements.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    first = [[(-1) ** (i - j) * stirling_classical(1, i, j) if i >= j else 0
              for j in range(N)] for i in range(N)]
    second = [[stirling_classical(2, i, j) if i >= j else 0 for j in range(N)] for i in range(N)]
    for i in range(N):
        for j in range(N):
            entry = sum(first[i][t] * second[t][j] for t in range(N))
            if entry != (1 if i == j else 0):
                return False
    return True
