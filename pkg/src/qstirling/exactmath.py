"""
Exact polynomial arithmetic in q, and polynomials in x with coefficients in Z[q].

A ``QPoly`` is a dense tuple of Python integers, constant term first, with
trailing zeros trimmed, so the zero polynomial is the empty tuple.

>>> p = QPoly((1, 1))
>>> str(p * p)
'q^2 + 2*q + 1'
>>> str(QPoly((1, -1)) * QPoly((1, 1, 1)))
'-q^3 + 1'
"""
from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

__all__ = [
    "QPoly", "XQPoly", "QRational", "NonExactDivisionError",
    "ZERO", "ONE", "Q",
    "poly_add", "poly_mul", "poly_divide_exact", "poly_eval_int", "xqpoly_coeff",
    "qint", "one_minus_q_pow",
]

# Terminating hypergeometric sums are evaluated with the standard library's
# exact rationals; they are always reduced with a positive denominator.
QRational = Fraction


class NonExactDivisionError(ArithmeticError):
    """Raised when a polynomial division that must be exact leaves a remainder."""


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


@dataclass(frozen=True, init=False)
class QPoly:
    """A polynomial in q with integer coefficients, ascending powers."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in coeffs))

    @classmethod
    def const(cls, c: int) -> QPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, d: int, c: int = 1) -> QPoly:
        if d < 0:
            raise ValueError("negative exponent")
        return cls((0,) * d + (c,))

    @property
    def degree(self) -> float | int:
        """Degree, with the zero polynomial at ``-math.inf``."""
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coeff(self, d: int) -> int:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = QPoly((other,))
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        # constants hash like the ints they equal
        return hash(self.coeffs[0] if len(self.coeffs) == 1 else self.coeffs or 0)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other: QPolyLike) -> QPoly:
        o = _as_qpoly(other)
        if o is NotImplemented:
            return NotImplemented
        return QPoly(a + b for a, b in itertools.zip_longest(self.coeffs, o.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self) -> QPoly:
        return QPoly(-c for c in self.coeffs)

    def __sub__(self, other: QPolyLike) -> QPoly:
        o = _as_qpoly(other)
        if o is NotImplemented:
            return NotImplemented
        return QPoly(a - b for a, b in itertools.zip_longest(self.coeffs, o.coeffs, fillvalue=0))

    def __rsub__(self, other: QPolyLike) -> QPoly:
        return -self + other

    def __mul__(self, other: QPolyLike) -> QPoly:
        if isinstance(other, int):
            return QPoly(c * other for c in self.coeffs)
        o = _as_qpoly(other)
        if o is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> QPoly:
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divide_exact(self, divisor: QPolyLike) -> QPoly:
        """Return c with ``self == divisor * c``.

        Raises ZeroDivisionError for a zero divisor and NonExactDivisionError
        when the remainder is nonzero.

        >>> str(QPoly((1, 0, -1)).divide_exact(QPoly((1, -1))))
        'q + 1'
        """
        d = _as_qpoly(divisor)
        if not d.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dc = d.coeffs
        lead = dc[-1]
        nq = len(rem) - len(dc) + 1
        if nq <= 0:
            if rem:
                raise NonExactDivisionError(f"{self} is not divisible by {d}")
            return ZERO
        quot = [0] * nq
        for s in range(nq - 1, -1, -1):
            top = rem[s + len(dc) - 1]
            if top == 0:
                continue
            t, r = divmod(top, lead)
            if r:
                raise NonExactDivisionError(f"{self} is not divisible by {d}")
            quot[s] = t
            for i, c in enumerate(dc):
                rem[s + i] -= t * c
        if any(rem):
            raise NonExactDivisionError(f"{self} is not divisible by {d}")
        return QPoly(quot)

    def __call__(self, q0: int | Fraction) -> int | Fraction:
        """Horner evaluation at ``q = q0``."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q0 + c
        return acc

    # -- text and JSON -------------------------------------------------------

    def __str__(self) -> str:
        return _render(self.coeffs, "q")

    def __repr__(self) -> str:
        return f"QPoly('{self}')"

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Iterable[str | int]) -> QPoly:
        return cls(int(c) for c in data)

    @classmethod
    def parse(cls, text: str) -> QPoly:
        """Parse the canonical text form produced by ``str``.

        >>> QPoly.parse('q^3 + 2*q^2 + 2*q + 1').coeffs
        (1, 2, 2, 1)
        """
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial text")
        if s[0] not in "+-":
            s = "+" + s
        terms = re.findall(r"[+-][^+-]+", s)
        if "".join(terms) != s:
            raise ValueError(f"cannot parse polynomial {text!r}")
        acc: dict[int, int] = {}
        for t in terms:
            m = _TERM.fullmatch(t)
            ok = m is not None and (m["coef"] or m["var"]) and (
                bool(m["star"]) == bool(m["coef"] and m["var"]))
            if not ok:
                raise ValueError(f"cannot parse term {t!r} in {text!r}")
            sign = -1 if m["sign"] == "-" else 1
            c = int(m["coef"]) if m["coef"] else 1
            d = (int(m["exp"]) if m["exp"] else 1) if m["var"] else 0
            acc[d] = acc.get(d, 0) + sign * c
        top = max(acc)
        return cls(acc.get(d, 0) for d in range(top + 1))


_TERM = re.compile(r"(?P<sign>[+-])(?P<coef>\d+)?(?P<star>\*)?(?P<var>q(?:\^(?P<exp>\d+))?)?")


def _render(coeffs: tuple[int, ...], var: str) -> str:
    parts: list[str] = []
    for d in range(len(coeffs) - 1, -1, -1):
        c = coeffs[d]
        if c == 0:
            continue
        mono = "" if d == 0 else var if d == 1 else f"{var}^{d}"
        mag = abs(c)
        body = str(mag) if not mono else mono if mag == 1 else f"{mag}*{mono}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts) if parts else "0"


QPolyLike = Union[QPoly, int]


def _as_qpoly(x: object) -> QPoly:
    if isinstance(x, QPoly):
        return x
    if isinstance(x, int):
        return QPoly((x,))
    return NotImplemented  # type: ignore[return-value]


ZERO = QPoly()
ONE = QPoly((1,))
Q = QPoly((0, 1))


def qint(h: int) -> QPoly:
    """The q-integer ``[h]_q = 1 + q + ... + q^(h-1)``; zero for h <= 0."""
    return QPoly((1,) * max(h, 0))


def one_minus_q_pow(m: int) -> QPoly:
    """``(1 - q)^m``."""
    return QPoly((1, -1)) ** m


@dataclass(frozen=True, init=False)
class XQPoly:
    """A polynomial in x whose coefficients are QPoly, ascending powers of x."""

    coeffs: tuple[QPoly, ...]

    def __init__(self, coeffs: Iterable[QPolyLike] = ()):
        cs = [_as_qpoly(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def x(cls) -> XQPoly:
        return cls((ZERO, ONE))

    @property
    def degree(self) -> float | int:
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> QPoly:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def __add__(self, other: XQPolyLike) -> XQPoly:
        o = _as_xqpoly(other)
        if o is NotImplemented:
            return NotImplemented
        return XQPoly(a + b for a, b in itertools.zip_longest(self.coeffs, o.coeffs, fillvalue=ZERO))

    __radd__ = __add__

    def __neg__(self) -> XQPoly:
        return XQPoly(-c for c in self.coeffs)

    def __sub__(self, other: XQPolyLike) -> XQPoly:
        o = _as_xqpoly(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: XQPolyLike) -> XQPoly:
        return -self + other

    def __mul__(self, other: XQPolyLike) -> XQPoly:
        if isinstance(other, (int, QPoly)):
            return XQPoly(c * other for c in self.coeffs)
        o = _as_xqpoly(other)
        if o is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return XQPoly()
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = out[i + j] + x * y
        return XQPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> XQPoly:
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = XQPoly((ONE,))
        for _ in range(e):
            result = result * self
        return result

    def eval_q(self, q0: int) -> tuple[int, ...]:
        """Specialize q, returning the integer coefficients of x^0, x^1, ..."""
        return tuple(c(q0) for c in self.coeffs)

    def __str__(self) -> str:
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c.is_zero():
                continue
            mono = "" if k == 0 else "x" if k == 1 else f"x^{k}"
            text = str(c) if sum(1 for v in c.coeffs if v) == 1 else f"({c})"
            if not mono:
                parts.append(text)
            elif c == ONE:
                parts.append(mono)
            else:
                parts.append(f"{text}*{mono}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"XQPoly('{self}')"

    def to_json(self) -> list[list[str]]:
        return [c.to_json() for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Iterable[Iterable[str | int]]) -> XQPoly:
        return cls(QPoly.from_json(c) for c in data)


XQPolyLike = Union[XQPoly, QPoly, int]


def _as_xqpoly(x: object) -> XQPoly:
    if isinstance(x, XQPoly):
        return x
    if isinstance(x, (QPoly, int)):
        return XQPoly((x,))
    return NotImplemented  # type: ignore[return-value]


def poly_add(a: QPoly, b: QPoly) -> QPoly:
    return a + b


def poly_mul(a: QPoly, b: QPoly) -> QPoly:
    return a * b


def poly_divide_exact(a: QPoly, b: QPoly) -> QPoly:
    return a.divide_exact(b)


def poly_eval_int(a: QPoly, q0: int) -> int:
    return a(q0)


def xqpoly_coeff(p: XQPoly, k: int) -> QPoly:
    return p.coeff(k)
