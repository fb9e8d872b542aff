"""
Terminating hypergeometric series at unit argument, in exact rationals.

>>> pfq_eval(HypSeries((-1, 1), (2,)))
Fraction(1, 2)
>>> pfq_eval(HypSeries((-1, 1, 2), (4, -1)))
Fraction(3, 2)
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence, Union

__all__ = [
    "PoleError", "HypSeries", "pochhammer", "pfq_eval",
    "saalschutz_check", "gauss_check", "contiguity_check", "summation_lemma_check",
    "saalschutz_grid", "gauss_grid", "contiguity_grid",
]

Number = Union[int, Fraction]


class PoleError(ValueError):
    """A lower parameter or right-hand-side denominator vanishes in the summation range."""


def pochhammer(a: Number, m: int) -> Fraction:
    """Rising factorial ``a (a+1) ... (a+m-1)``."""
    out = Fraction(1)
    for t in range(m):
        out *= a + t
    return out


def _nonpos_int(a: Fraction) -> bool:
    return a.denominator == 1 and a <= 0


@dataclass(frozen=True)
class HypSeries:
    upper: tuple[Fraction, ...]
    lower: tuple[Fraction, ...]

    def __init__(self, upper: Sequence[Number], lower: Sequence[Number]):
        up = tuple(Fraction(a) for a in upper)
        lo = tuple(Fraction(b) for b in lower)
        if len(lo) < 1 or len(up) != len(lo) + 1:
            raise ValueError("need r+1 upper and r lower parameters with r >= 1")
        if not any(_nonpos_int(a) for a in up):
            raise ValueError("series does not terminate: no nonpositive integer upper parameter")
        object.__setattr__(self, "upper", up)
        object.__setattr__(self, "lower", lo)
        m = self.length
        for b in lo:
            if _nonpos_int(b) and -b <= m - 1:
                raise PoleError(f"lower parameter {b} vanishes within the {m + 1} terms")

    @property
    def length(self) -> int:
        """Index m of the last possibly nonzero term."""
        return int(min(-a for a in self.upper if _nonpos_int(a)))


def pfq_eval(s: HypSeries) -> Fraction:
    total = Fraction(0)
    term = Fraction(1)
    for t in range(s.length + 1):
        total += term
        num = Fraction(1)
        for a in s.upper:
            num *= a + t
        den = Fraction(t + 1)
        for b in s.lower:
            den *= b + t
        if num == 0:
            break
        term = term * num / den
    return total


def _rhs(num: Sequence[Fraction], den: Sequence[Fraction]) -> Fraction:
    d = Fraction(1)
    for x in den:
        d *= x
    if d == 0:
        raise PoleError("right-hand side denominator vanishes")
    n = Fraction(1)
    for x in num:
        n *= x
    return n / d


def saalschutz_check(m: int, alpha: Number, beta: Number, gamma: Number) -> bool:
    """Balanced 3F2 summation, both sides exact."""
    a, b, c = Fraction(alpha), Fraction(beta), Fraction(gamma)
    lhs = pfq_eval(HypSeries((-m, a, b), (c, a + b - c - m + 1)))
    rhs = _rhs((pochhammer(c - a, m), pochhammer(c - b, m)),
               (pochhammer(c, m), pochhammer(c - a - b, m)))
    return lhs == rhs


def gauss_check(m: int, alpha: Number, gamma: Number) -> bool:
    a, c = Fraction(alpha), Fraction(gamma)
    lhs = pfq_eval(HypSeries((-m, a), (c,)))
    rhs = _rhs((pochhammer(c - a, m),), (pochhammer(c, m),))
    return lhs == rhs


def contiguity_check(upper: Sequence[Number], lower: Sequence[Number]) -> bool:
    """``(a3 - a4) F = a3 F[a3+1] - a4 F[a4+1]`` on the last two upper parameters."""
    up = [Fraction(a) for a in upper]
    *rest, a3, a4 = up
    lhs = (a3 - a4) * pfq_eval(HypSeries(up, lower))
    rhs = (a3 * pfq_eval(HypSeries(rest + [a3 + 1, a4], lower))
           - a4 * pfq_eval(HypSeries(rest + [a3, a4 + 1], lower)))
    return lhs == rhs


def summation_lemma_check(lemma: str, *params) -> bool:
    if lemma == "saalschutz":
        return saalschutz_check(*params)
    if lemma == "gauss":
        return gauss_check(*params)
    if lemma == "contiguity":
        return contiguity_check(*params)
    raise ValueError(f"unknown lemma {lemma!r}")


# ---------------------------------------------------------------------------
# deterministic admissible parameter grids

_VALUES = [Fraction(v) for v in range(-6, 10)] + [Fraction(-7, 2), Fraction(1, 2), Fraction(5, 2)]


def _admissible(fn, *params) -> bool:
    try:
        fn(*params)
    except PoleError:
        return False
    return True


def saalschutz_grid(mmax: int = 6, stride: int = 3) -> Iterator[tuple]:
    """Admissible (m, alpha, beta, gamma) tuples; ``stride`` thins the value list."""
    vals = _VALUES[::stride] + _VALUES[-3:]
    for m in range(mmax + 1):
        for a, b, c in itertools.product(vals, repeat=3):
            if _admissible(saalschutz_check, m, a, b, c):
                yield (m, a, b, c)


def gauss_grid(mmax: int = 6) -> Iterator[tuple]:
    for m in range(mmax + 1):
        for a, c in itertools.product(_VALUES, repeat=2):
            if _admissible(gauss_check, m, a, c):
                yield (m, a, c)


def contiguity_grid(mmax: int = 6, stride: int = 4) -> Iterator[tuple]:
    vals = _VALUES[::stride] + _VALUES[-3:]
    lowers = [(Fraction(1), Fraction(3), Fraction(5, 2)), (Fraction(2), Fraction(-7, 2), Fraction(9)),
              (Fraction(1, 2), Fraction(4), Fraction(7))]
    for m in range(mmax + 1):
        for a2, a3, a4 in itertools.product(vals, repeat=3):
            for lo in lowers:
                up = (Fraction(-m), a2, a3, a4)
                if _admissible(contiguity_check, up, lo):
                    yield (up, lo)
