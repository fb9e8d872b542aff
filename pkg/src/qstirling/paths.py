"""
Weighted lattice paths counted by dynamic programming over (position, height).

Three path models are supported, each matching one continued-fraction shape:

* ``MOTZKIN`` -- steps up, level (weight ``b(h)`` at height h) and down
  (weight ``a(h)`` from height h); J-fraction with z^2 numerators.
* ``DYCK_T`` -- steps up and down; a down-step from height h weighs ``b(h)``
  right after an up-step and ``c(h)`` right after a down-step; T-fraction.
* ``SCHRODER`` -- steps up, down (weight ``c(h)`` from height h) and a double
  level step (weight ``d(h)`` at height h); T-fraction.

Up-steps always weigh 1.  All weights are ``XQPoly`` values (ints and
``QPoly`` are promoted).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

from .exactmath import ONE, ZERO, QPoly, XQPoly, one_minus_q_pow, qint
from .qcomb import qbinom

__all__ = [
    "MOTZKIN", "DYCK_T", "SCHRODER", "WeightSpec", "path_gf",
    "s2_jfraction_spec", "s1_tfraction_spec", "s1_schroder_spec",
    "s2_via_jfraction", "s1_via_tfraction", "s1_scaled_via_schroder",
    "mu_dp", "mu_closed", "qstsum_lhs", "qstsum_rhs", "qstsum_check",
    "continued_fraction_series", "ParityError",
]

MOTZKIN = "motzkin"
DYCK_T = "dyck-t"
SCHRODER = "schroder"

Weight = Callable[[int], object]


class ParityError(ValueError):
    """mu(n, k) needs n and k of equal parity with 0 <= k <= n."""


def _x(w) -> XQPoly:
    return w if isinstance(w, XQPoly) else XQPoly((w,))


@dataclass(frozen=True)
class WeightSpec:
    """Step weights as functions of height.

    ``first`` and ``second`` are, by kind: Motzkin ``(a, b)``; Dyck-T ``(b, c)``;
    Schroder ``(c, d)``.
    """

    kind: str
    first: Weight
    second: Weight

    def __post_init__(self):
        if self.kind not in (MOTZKIN, DYCK_T, SCHRODER):
            raise ValueError(f"unknown path kind {self.kind!r}")


def _add(table: dict, key, value: XQPoly):
    if value.is_zero():
        return
    cur = table.get(key)
    table[key] = value if cur is None else cur + value


def path_gf(spec: WeightSpec, n: int) -> XQPoly:
    """Total weight of paths of length n (Motzkin) or 2n (Dyck-T, Schroder)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if spec.kind == MOTZKIN:
        return _motzkin(spec, n)
    if spec.kind == DYCK_T:
        return _dyck_t(spec, n)
    return _schroder(spec, n)


def _motzkin(spec: WeightSpec, n: int) -> XQPoly:
    a = [_x(spec.first(h)) for h in range(n + 1)]
    b = [_x(spec.second(h)) for h in range(n + 1)]
    layer = {0: XQPoly((ONE,))}
    for pos in range(n):
        nxt: dict[int, XQPoly] = {}
        remaining = n - pos - 1
        for h, w in layer.items():
            if h + 1 <= remaining:
                _add(nxt, h + 1, w)
            if h <= remaining:
                _add(nxt, h, w * b[h])
            if h >= 1:
                _add(nxt, h - 1, w * a[h])
        layer = nxt
    return layer.get(0, XQPoly())


def _dyck_t(spec: WeightSpec, n: int) -> XQPoly:
    b = [_x(spec.first(h)) for h in range(n + 1)]
    c = [_x(spec.second(h)) for h in range(n + 1)]
    # state: (height, last step was up)
    layer = {(0, False): XQPoly((ONE,))}
    for pos in range(2 * n):
        nxt: dict[tuple[int, bool], XQPoly] = {}
        remaining = 2 * n - pos - 1
        for (h, up), w in layer.items():
            if h + 1 <= remaining:
                _add(nxt, (h + 1, True), w)
            if h >= 1:
                _add(nxt, (h - 1, False), w * (b[h] if up else c[h]))
        layer = nxt
    total = XQPoly()
    for (h, _), w in layer.items():
        if h == 0:
            total = total + w
    return total


def _schroder(spec: WeightSpec, n: int) -> XQPoly:
    c = [_x(spec.first(h)) for h in range(n + 1)]
    d = [_x(spec.second(h)) for h in range(n + 1)]
    length = 2 * n
    table: list[dict[int, XQPoly]] = [dict() for _ in range(length + 1)]
    table[0][0] = XQPoly((ONE,))
    for pos in range(length):
        for h, w in table[pos].items():
            remaining = length - pos
            if h + 1 <= remaining - 1:
                _add(table[pos + 1], h + 1, w)
            if h >= 1:
                _add(table[pos + 1], h - 1, w * c[h])
            if pos + 2 <= length and h <= remaining - 2:
                _add(table[pos + 2], h, w * d[h])
    return table[length].get(0, XQPoly())


X = XQPoly.x()


def s2_jfraction_spec() -> WeightSpec:
    return WeightSpec(MOTZKIN, lambda h: X * qint(h), lambda h: X + qint(h))


def s1_tfraction_spec() -> WeightSpec:
    return WeightSpec(DYCK_T, lambda h: X, qint)


def s1_schroder_spec() -> WeightSpec:
    return WeightSpec(SCHRODER,
                      lambda h: ONE - QPoly.monomial(h),
                      lambda h: X - 1 + QPoly.monomial(h + 1))


@lru_cache(maxsize=None)
def s2_via_jfraction(n: int) -> XQPoly:
    """Sum over k of S2[n,k] x^k."""
    return path_gf(s2_jfraction_spec(), n)


@lru_cache(maxsize=None)
def s1_via_tfraction(n: int) -> XQPoly:
    """Sum over k of S1[n,k] x^k.

    >>> str(s1_via_tfraction(3))
    'x^3 + 3*x^2 + (q + 1)*x'
    """
    return path_gf(s1_tfraction_spec(), n)


@lru_cache(maxsize=None)
def s1_scaled_via_schroder(n: int) -> XQPoly:
    """Sum over k of (1-q)^(n-k) S1[n,k] x^k."""
    return path_gf(s1_schroder_spec(), n)


def _check_mu(n: int, k: int):
    if not (0 <= k <= n) or (n - k) % 2:
        raise ParityError(f"mu needs 0 <= k <= n with equal parity, got ({n}, {k})")


@lru_cache(maxsize=None)
def _mu_row(n: int) -> tuple[QPoly, ...]:
    # state: (height, level steps used)
    layer: dict[tuple[int, int], QPoly] = {(0, 0): ONE}
    for pos in range(n):
        nxt: dict[tuple[int, int], QPoly] = {}
        remaining = n - pos - 1
        for (h, lv), w in layer.items():
            moves = []
            if h + 1 <= remaining:
                moves.append(((h + 1, lv), w))
            if h <= remaining:
                moves.append(((h, lv + 1), w * QPoly.monomial(h)))
            if h >= 1:
                moves.append(((h - 1, lv), w * (ONE - QPoly.monomial(h))))
            for key, val in moves:
                if val:
                    nxt[key] = nxt.get(key, ZERO) + val
        layer = nxt
    return tuple(layer.get((0, k), ZERO) for k in range(n + 1))


def mu_dp(n: int, k: int) -> QPoly:
    """Weighted Motzkin paths of length n with k level steps (level q^h, down 1 - q^h)."""
    _check_mu(n, k)
    return _mu_row(n)[k]


def mu_closed(n: int, k: int) -> QPoly:
    _check_mu(n, k)
    half = (n - k) // 2
    total = ZERO
    for u in range(half + 1):
        diff = math.comb(n, half - u) - (math.comb(n, half - u - 1) if half - u - 1 >= 0 else 0)
        if diff:
            term = QPoly.monomial(u * (u + 1) // 2, (-1) ** u * diff) * qbinom(k + u, u)
            total = total + term
    return total


def qstsum_lhs(n: int, s1: Optional[Callable[[int, int], QPoly]] = None) -> XQPoly:
    """Sum over k of (1-q)^(n-k) S1[n,k] x^k, with S1 from ``s1`` (default: T-fraction)."""
    if s1 is None:
        row = s1_via_tfraction(n)
        vals = [row.coeff(k) for k in range(n + 1)]
    else:
        vals = [s1(n, k) for k in range(n + 1)]
    return XQPoly(one_minus_q_pow(n - k) * v for k, v in enumerate(vals))


def qstsum_rhs(n: int, mu: Callable[[int, int], QPoly] = mu_closed) -> XQPoly:
    x_minus_1 = X - 1
    total = XQPoly()
    for i in range(n + 1):
        for j in range(n - i + 1):
            c = math.comb(2 * n - i - j, j)
            m = mu(2 * n - 2 * j - i, i)
            if c and m:
                total = total + (x_minus_1 ** j) * (QPoly.monomial(i) * m * c)
    return total


def qstsum_check(n: int, s1: Optional[Callable[[int, int], QPoly]] = None) -> bool:
    return qstsum_lhs(n, s1) == qstsum_rhs(n)


# ---------------------------------------------------------------------------
# continued fractions as truncated power series in z (independent oracle)


def _series_inverse(s: list[XQPoly], order: int) -> list[XQPoly]:
    """Inverse of a series with constant term 1, truncated after z^order."""
    g = [XQPoly((ONE,))]
    for m in range(1, order + 1):
        acc = XQPoly()
        for t in range(1, m + 1):
            if t < len(s) and not s[t].is_zero():
                acc = acc - s[t] * g[m - t]
        g.append(acc)
    return g


def continued_fraction_series(kind: str, spec: WeightSpec, order: int,
                              depth: Optional[int] = None) -> list[XQPoly]:
    """Coefficients of z^0..z^order of the continued fraction matching ``spec``.

    Built bottom-up from ``depth`` levels (default ``order + 1``), replacing the
    tail below the deepest level by 1.
    """
    if depth is None:
        depth = order + 1
    tail = [XQPoly((ONE,))]
    for level in range(depth - 1, -1, -1):
        denom = [XQPoly() for _ in range(order + 1)]
        denom[0] = XQPoly((ONE,))
        if kind == MOTZKIN:
            # 1 - b_h z - a_{h+1} z^2 F_{h+1}
            lin, num, shift = _x(spec.second(level)), _x(spec.first(level + 1)), 2
        elif kind == DYCK_T:
            # 1 - (b_{h+1} - c_{h+1}) z - c_{h+1} z F_{h+1}
            b1, c1 = _x(spec.first(level + 1)), _x(spec.second(level + 1))
            lin, num, shift = b1 - c1, c1, 1
        elif kind == SCHRODER:
            # 1 - d_h z - c_{h+1} z F_{h+1}
            lin, num, shift = _x(spec.second(level)), _x(spec.first(level + 1)), 1
        else:
            raise ValueError(f"unknown path kind {kind!r}")
        if order >= 1:
            denom[1] = denom[1] - lin
        for t, f in enumerate(tail):
            if t + shift <= order:
                denom[t + shift] = denom[t + shift] - num * f
        tail = _series_inverse(denom, order)
    return tail
