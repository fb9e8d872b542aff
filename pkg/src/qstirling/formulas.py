"""
Closed double-sum formulas for the q-Stirling numbers, the two cross-kind
identities, and the integer sums that appear while proving them.

Every closed formula produces ``(1-q)^(n-k) S[n,k]`` first and then divides
exactly by ``(1-q)^(n-k)``; a nonzero remainder raises
``NonExactDivisionError``.

>>> str(s2_closed(4, 2)), str(s1_closed(3, 1))
('q + 6', 'q + 1')
>>> str(identity_first(3, 1)), str(identity_second(4, 2))
('q + 1', 'q + 6')
"""
from __future__ import annotations

from functools import lru_cache
from typing import Callable

from .enumeration import s1_enum, s2_enum
from .exactmath import ZERO, QPoly, one_minus_q_pow
from .paths import s1_via_tfraction, s2_via_jfraction
from .qcomb import binom_ext, binom_general, coeff_A, coeff_B, narayana, qbinom

__all__ = [
    "s2_closed_scaled", "s2_closed", "s2_closed_alt_scaled", "s2_closed_alt",
    "s1_closed_scaled", "s1_closed", "s1_closed_alt_scaled", "s1_closed_alt",
    "identity_weight", "identity_first", "identity_second",
    "narayana_identity_check", "coeff_D", "coeff_C", "coeff_Cbar",
    "coeff_C_check", "coeff_E", "coeff_E_closed", "s1", "s2",
    "S1_METHODS", "S2_METHODS",
]


def _check(n: int, k: int):
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")


def _shifted_qbinom(i: int, j: int, extra: int, coef: int) -> QPoly:
    """``coef * q^(extra) * [i choose j]_q``."""
    if coef == 0:
        return ZERO
    return QPoly.monomial(extra, coef) * qbinom(i, j)


@lru_cache(maxsize=None)
def s2_closed_scaled(n: int, k: int) -> QPoly:
    _check(n, k)
    total = ZERO
    for j in range(k + 1):
        for i in range(j, n - k + 1):
            total += _shifted_qbinom(i, j, j * (j + 1) // 2, (-1) ** i * coeff_A(n, k, i, j))
    return total


@lru_cache(maxsize=None)
def s2_closed(n: int, k: int) -> QPoly:
    return s2_closed_scaled(n, k).divide_exact(one_minus_q_pow(n - k))


@lru_cache(maxsize=None)
def s2_closed_alt_scaled(n: int, k: int) -> QPoly:
    _check(n, k)
    if n == 0:
        raise ValueError("the alternative S2 formula needs n > 0")
    total = ZERO
    for j in range(k):
        for i in range(j, n - k + 1):
            total += _shifted_qbinom(i, j, i + j * (j - 1) // 2,
                                     (-1) ** i * coeff_A(n - 1, k - 1, i, j))
    return total


def s2_closed_alt(n: int, k: int) -> QPoly:
    return s2_closed_alt_scaled(n, k).divide_exact(one_minus_q_pow(n - k))


@lru_cache(maxsize=None)
def s1_closed_scaled(n: int, k: int) -> QPoly:
    _check(n, k)
    total = ZERO
    for j in range(n - k + 1):
        for i in range(j, n - k + 1):
            total += _shifted_qbinom(i, j, j * (j + 1) // 2, (-1) ** j * coeff_B(n, k, i, j))
    return total


@lru_cache(maxsize=None)
def s1_closed(n: int, k: int) -> QPoly:
    return s1_closed_scaled(n, k).divide_exact(one_minus_q_pow(n - k))


@lru_cache(maxsize=None)
def s1_closed_alt_scaled(n: int, k: int) -> QPoly:
    _check(n, k)
    total = ZERO
    for j in range(n - k + 1):
        for i in range(j, n - k + 1):
            total += _shifted_qbinom(i, j, i + j * (j - 1) // 2,
                                     (-1) ** j * coeff_B(n + 1, k + 1, i, j))
    return total


def s1_closed_alt(n: int, k: int) -> QPoly:
    return s1_closed_alt_scaled(n, k).divide_exact(one_minus_q_pow(n - k))


# ---------------------------------------------------------------------------
# method dispatch


def _s1_path(n: int, k: int) -> QPoly:
    _check(n, k)
    return s1_via_tfraction(n).coeff(k)


def _s2_path(n: int, k: int) -> QPoly:
    _check(n, k)
    return s2_via_jfraction(n).coeff(k)


def _s1_identity(n: int, k: int) -> QPoly:
    return identity_first(n, k, "closed")


def _s2_identity(n: int, k: int) -> QPoly:
    return identity_second(n, k, "closed")


S1_METHODS: dict[str, Callable[[int, int], QPoly]] = {
    "enum": s1_enum,
    "closed": s1_closed,
    "closed-alt": s1_closed_alt,
    "path": _s1_path,
    "identity": _s1_identity,
}

S2_METHODS: dict[str, Callable[[int, int], QPoly]] = {
    "enum": s2_enum,
    "closed": s2_closed,
    "closed-alt": lambda n, k: s2_closed_alt(n, k) if n > 0 else s2_closed(n, k),
    "path": _s2_path,
    "identity": _s2_identity,
}
S2_METHODS["jfraction"] = S2_METHODS["path"]
S1_METHODS["tfraction"] = S1_METHODS["path"]


def _method(table: dict, name: str) -> Callable[[int, int], QPoly]:
    try:
        return table[name]
    except KeyError:
        raise ValueError(f"unknown method {name!r}; choose from {sorted(table)}") from None


def s1(n: int, k: int, method: str = "closed") -> QPoly:
    return _method(S1_METHODS, method)(n, k)


def s2(n: int, k: int, method: str = "closed") -> QPoly:
    return _method(S2_METHODS, method)(n, k)


# ---------------------------------------------------------------------------
# the two identities


def identity_weight(n: int, k: int, j: int) -> int:
    """Signed integer weight of the j-th term, including the overall (-1)^(n-k)."""
    return (-1) ** (n - k) * _outer(n, k, j)


def _identity(n: int, k: int, source: Callable[[int, int], QPoly]) -> QPoly:
    _check(n, k)
    total = ZERO
    for j in range(n - k + 1):
        w = identity_weight(n, k, j)
        if w:
            total += source(n - k + j, j) * w
    return total


def identity_first(n: int, k: int, s2source: str = "closed") -> QPoly:
    """S1[n,k] expressed through S2 values taken from ``s2source``."""
    return _identity(n, k, _method(S2_METHODS, s2source))


def identity_second(n: int, k: int, s1source: str = "closed") -> QPoly:
    """S2[n,k] expressed through S1 values taken from ``s1source``."""
    return _identity(n, k, _method(S1_METHODS, s1source))


def narayana_identity_check(n: int, k: int) -> bool:
    _check(n, k)
    rhs = sum(identity_weight(n, k, j) * narayana(n - k + j, j) for j in range(n - k + 1))
    return rhs == narayana(n, k)


# ---------------------------------------------------------------------------
# proof-step sums


def _proof_range(n: int, k: int, h: int, i: int, lo_i: int = 0):
    if not (0 <= k <= n and lo_i <= i <= h <= n - k):
        raise ValueError(f"need {lo_i} <= i <= h <= n-k, got n={n}, k={k}, h={h}, i={i}")


def _outer(n: int, k: int, j: int) -> int:
    # The generalized binomial makes C(-1, 0) = 1, which n = k = 0 needs.
    return (-1) ** j * binom_general(n - 1 + j, n - k + j) * binom_general(2 * n - k, n - k - j)


def coeff_D(n: int, k: int, h: int, i: int) -> int:
    _proof_range(n, k, h, i)
    return sum(_outer(n, k, j) * coeff_A(n - k + j, j, h, i) for j in range(i, n - k + 1))


def coeff_C(n: int, k: int, h: int, i: int) -> int:
    """Direct sum over j of the outer weights times B^{n-k+j, j}_{h, i}."""
    _proof_range(n, k, h, i)
    return sum(_outer(n, k, j) * coeff_B(n - k + j, j, h, i) for j in range(n - k + 1))


def coeff_Cbar(n: int, k: int, h: int, i: int) -> int:
    if not (0 <= k <= n and 0 <= h <= n - k + 1 and i >= 0):
        raise ValueError(f"need 0 <= h <= n-k+1 and i >= 0, got n={n}, k={k}, h={h}, i={i}")
    return sum(_outer(n, k, j) * binom_ext(n - k + j + i - 1, j - 1)
               * binom_ext(n - k + j - h - 1, j - 1) for j in range(n - k + 1))


def coeff_C_check(n: int, k: int, h: int, i: int) -> bool:
    """``Cbar_{h,i} - Cbar_{h+1,i+1} == (-1)^(n+k+h+i) A^{n,k}_{h,i}`` for i >= 1."""
    _proof_range(n, k, h, i, lo_i=1)
    c = coeff_Cbar(n, k, h, i) - coeff_Cbar(n, k, h + 1, i + 1)
    return c == (-1) ** (n + k + h + i) * coeff_A(n, k, h, i)


def coeff_E(n: int, k: int, i: int, u: int) -> int:
    if min(n, k, i, u) < 0:
        raise ValueError("coeff_E needs nonnegative arguments")
    return sum(binom_ext(2 * n - i - j, j) * (-1) ** (j - k) * binom_ext(j, k)
               * binom_ext(2 * n - 2 * j - i, n - j - i - u)
               for j in range(k, n - i - u + 1))


def coeff_E_closed(n: int, k: int, i: int, u: int) -> int:
    return binom_ext(n + u, k) * binom_ext(n - i - u, k)
