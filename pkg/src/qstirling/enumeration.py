"""
Brute-force ground truth: set partitions with crossings, rook placements in
staircases, permutations with special inversions, and the bijection between
permutations and weighted Dyck paths.

Conventions
-----------
* A set partition of {1..n} is stored as a sorted tuple of sorted blocks.
* A staircase ``delta_n`` has rows of lengths n, n-1, ..., 1 from bottom to
  top.  Cells are ``(column, row)`` pairs, both 1-based, and ``(c, r)`` is in
  ``delta_n`` iff ``c + r <= n + 1``.
* A permutation is a tuple of images ``sigma(1), ..., sigma(n)``.  Its graph has
  a dot in column i, row sigma(i).
* A Dyck path is a tuple of +1 (up) / -1 (down) steps.  Each down-step weight
  is ``None`` for x, or an integer j for q^j.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Sequence

from .exactmath import ZERO, QPoly

__all__ = [
    "BoundExceededError", "InvalidWeightError",
    "SetPartition", "RookPlacement", "WeightedDyckPath",
    "set_partitions", "crossings", "partition_to_rooks", "rooks_to_partition",
    "rook_inversions", "rook_placements", "s2_enum", "s2_enum_rooks",
    "perm_stats", "special_inversion_cells", "bounding_path", "s1_enum",
    "phi", "phi_inverse", "weighted_dyck_paths", "dyck_paths",
    "S2_ENUM_BOUND", "S1_ENUM_BOUND",
]

S2_ENUM_BOUND = 12
S1_ENUM_BOUND = 10


class BoundExceededError(ValueError):
    """Requested size is beyond what brute-force enumeration is allowed to do."""


class InvalidWeightError(ValueError):
    """A weighted Dyck path carries a q-exponent not permitted at its height."""


# ---------------------------------------------------------------------------
# set partitions and rook placements


@dataclass(frozen=True)
class SetPartition:
    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        seen = sorted(x for b in self.blocks for x in b)
        if seen != list(range(1, self.n + 1)) or any(not b for b in self.blocks):
            raise ValueError(f"not a set partition of 1..{self.n}: {self.blocks}")
        object.__setattr__(self, "blocks", tuple(sorted(tuple(sorted(b)) for b in self.blocks)))

    @classmethod
    def parse(cls, text: str) -> SetPartition:
        """Parse bar notation such as ``156|24|38|79A`` (A = 10, B = 11, ...)."""
        blocks = tuple(tuple(int(ch, 36) for ch in part) for part in text.split("|"))
        return cls(sum(len(b) for b in blocks), blocks)

    @classmethod
    def from_rgs(cls, rgs: Sequence[int]) -> SetPartition:
        groups: dict[int, list[int]] = {}
        for pos, label in enumerate(rgs, start=1):
            groups.setdefault(label, []).append(pos)
        return cls(len(rgs), tuple(tuple(g) for g in groups.values()))

    @property
    def arcs(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted((b[t], b[t + 1]) for b in self.blocks for t in range(len(b) - 1)))

    def __str__(self) -> str:
        return "|".join("".join(_digit(x) for x in b) for b in self.blocks)


def _digit(x: int) -> str:
    return "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ"[x]


def _rgs(n: int) -> Iterator[list[int]]:
    """Restricted growth strings of length n, in lexicographic order."""
    if n == 0:
        yield []
        return
    a = [0] * n

    def rec(pos: int, top: int):
        if pos == n:
            yield a
            return
        for v in range(top + 2):
            a[pos] = v
            yield from rec(pos + 1, max(top, v))

    a[0] = 0
    yield from rec(1, 0)


def set_partitions(n: int, k: Optional[int] = None) -> Iterator[SetPartition]:
    """All set partitions of {1..n} (optionally with exactly k blocks), in RGS order."""
    for rgs in _rgs(n):
        if k is None or (max(rgs, default=-1) + 1) == k:
            yield SetPartition.from_rgs(rgs)


def crossings(p: SetPartition) -> int:
    arcs = p.arcs
    return sum(1 for (i, k), (j, l) in itertools.permutations(arcs, 2) if i < j < k < l)


@dataclass(frozen=True)
class RookPlacement:
    n: int
    rooks: frozenset[tuple[int, int]]

    def __post_init__(self):
        object.__setattr__(self, "rooks", frozenset(self.rooks))
        cols = [c for c, _ in self.rooks]
        rows = [r for _, r in self.rooks]
        if len(set(cols)) != len(cols) or len(set(rows)) != len(rows):
            raise ValueError("two rooks share a row or a column")
        for c, r in self.rooks:
            if not (c >= 1 and r >= 1 and c + r <= self.n + 1):
                raise ValueError(f"rook {(c, r)} is outside delta_{self.n}")


def partition_to_rooks(p: SetPartition) -> RookPlacement:
    """Arc (i, j) goes to column i and the row right of corner label j in delta_{n-1}."""
    if p.n < 1:
        raise ValueError("need n >= 1")
    return RookPlacement(p.n - 1, frozenset((i, p.n + 1 - j) for i, j in p.arcs))


def rooks_to_partition(r: RookPlacement) -> SetPartition:
    n = r.n + 1
    nxt = {c: n + 1 - row for c, row in r.rooks}
    has_prev = set(nxt.values())
    blocks = []
    for start in range(1, n + 1):
        if start in has_prev:
            continue
        block = [start]
        while block[-1] in nxt:
            block.append(nxt[block[-1]])
        blocks.append(tuple(block))
    return SetPartition(n, tuple(blocks))


def rook_inversions(r: RookPlacement) -> int:
    """Cells of the staircase with a rook to their left in-row and a rook below in-column."""
    count = 0
    for (c_left, row), (col, r_below) in itertools.permutations(r.rooks, 2):
        if c_left < col and r_below < row and col + row <= r.n + 1:
            count += 1
    return count


def rook_placements(n: int, m: int) -> Iterator[RookPlacement]:
    """All placements of m non-attacking rooks in delta_n."""
    def rec(col: int, left: int, used: frozenset[int], acc: tuple):
        if left == 0:
            yield RookPlacement(n, frozenset(acc))
            return
        if col > n or n - col + 1 < left:
            return
        yield from rec(col + 1, left, used, acc)
        for row in range(1, n + 2 - col):
            if row not in used:
                yield from rec(col + 1, left - 1, used | {row}, acc + ((col, row),))

    yield from rec(1, m, frozenset(), ())


def _counter_to_poly(counts: Counter) -> QPoly:
    if not counts:
        return ZERO
    return QPoly(counts.get(d, 0) for d in range(max(counts) + 1))


@lru_cache(maxsize=None)
def _s2_row(n: int) -> tuple[QPoly, ...]:
    # Depth-first over restricted growth strings, counting new crossings per
    # added arc (l, m) as the closed arcs (i, k) with i < l < k.
    rows = [Counter() for _ in range(n + 1)]
    last: list[int] = []
    arcs: list[tuple[int, int]] = []

    def rec(m: int, cro: int):
        if m > n:
            rows[len(last)][cro] += 1
            return
        for b in range(len(last)):
            l = last[b]
            new = sum(1 for i, k in arcs if i < l < k)
            arcs.append((l, m))
            last[b] = m
            rec(m + 1, cro + new)
            last[b] = l
            arcs.pop()
        last.append(m)
        rec(m + 1, cro)
        last.pop()

    rec(1, 0)
    return tuple(_counter_to_poly(c) for c in rows)


def _check_bound(n: int, k: int, bound: int):
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    if n > bound:
        raise BoundExceededError(f"n={n} exceeds the enumeration bound {bound}")


def s2_enum(n: int, k: int, bound: int = S2_ENUM_BOUND) -> QPoly:
    """Sum of q^cro over set partitions of {1..n} with k blocks."""
    _check_bound(n, k, bound)
    return _s2_row(n)[k]


def s2_enum_rooks(n: int, k: int, bound: int = S2_ENUM_BOUND) -> QPoly:
    """Same quantity summed over rook placements of n-k rooks in delta_{n-1}."""
    _check_bound(n, k, bound)
    if n == 0:
        return QPoly((1,))
    return _counter_to_poly(Counter(rook_inversions(r) for r in rook_placements(n - 1, n - k)))


# ---------------------------------------------------------------------------
# permutations


def _suffix_max(sigma: Sequence[int]) -> list[int]:
    """``out[i] = max(sigma[i:])`` with a trailing 0 sentinel at index n."""
    out = [0] * (len(sigma) + 1)
    for i in range(len(sigma) - 1, -1, -1):
        out[i] = max(sigma[i], out[i + 1])
    return out


def perm_stats(sigma: Sequence[int]) -> tuple[int, int]:
    """Return (number of special inversions, number of right-to-left maxima)."""
    n = len(sigma)
    smax = _suffix_max(sigma)
    inv = 0
    for i in range(n):
        for j in range(i + 1, n):
            if sigma[j] < sigma[i] < smax[j + 1]:
                inv += 1
    rlm = sum(1 for i in range(n) if sigma[i] > smax[i + 1])
    return inv, rlm


def special_inversion_cells(sigma: Sequence[int]) -> list[tuple[int, int]]:
    """Cells (column j, row sigma(i)) of the special inversions (i, j), 1-based."""
    n = len(sigma)
    smax = _suffix_max(sigma)
    return [(j + 1, sigma[i]) for i in range(n) for j in range(i + 1, n)
            if sigma[j] < sigma[i] < smax[j + 1]]


@lru_cache(maxsize=None)
def _s1_row(n: int) -> tuple[QPoly, ...]:
    # Build the permutation right to left.  Prepending value v to a suffix adds
    # one special inversion per suffix entry w < v that has a larger entry after it.
    rows = [Counter() for _ in range(n + 1)]
    suffix: list[int] = []        # values, rightmost first
    after: list[int] = []         # after[t] = max of entries to the right of suffix[t]
    free = [True] * (n + 1)

    def rec(inv: int, rlm: int):
        if len(suffix) == n:
            rows[rlm][inv] += 1
            return
        top = max(suffix, default=0)
        for v in range(1, n + 1):
            if not free[v]:
                continue
            new = sum(1 for w, m in zip(suffix, after) if w < v < m)
            free[v] = False
            suffix.append(v)
            after.append(top)
            rec(inv + new, rlm + (v > top))
            after.pop()
            suffix.pop()
            free[v] = True

    rec(0, 0)
    return tuple(_counter_to_poly(c) for c in rows)


def s1_enum(n: int, k: int, bound: int = S1_ENUM_BOUND) -> QPoly:
    """Sum of q^inv' over permutations of {1..n} with k right-to-left maxima."""
    _check_bound(n, k, bound)
    return _s1_row(n)[k]


def bounding_path(sigma: Sequence[int]) -> tuple[int, ...]:
    """Lowest East/South path above every dot, rotated into a Dyck path.

    East steps become +1 and South steps become -1.

    >>> bounding_path((8, 6, 9, 2, 3, 7, 5, 1, 4))
    (1, 1, 1, -1, -1, 1, 1, 1, -1, -1, 1, -1, 1, 1, -1, -1, -1, -1)
    """
    n = len(sigma)
    smax = _suffix_max(sigma)
    steps: list[int] = []
    height = n
    for col in range(n):
        steps.extend([-1] * (height - smax[col]))
        height = smax[col]
        steps.append(1)
    steps.extend([-1] * height)
    return tuple(steps)


@dataclass(frozen=True)
class WeightedDyckPath:
    steps: tuple[int, ...]
    weights: tuple[Optional[int], ...]

    def __post_init__(self):
        h = 0
        for s in self.steps:
            if s not in (1, -1):
                raise ValueError("steps must be +1 or -1")
            h += s
            if h < 0:
                raise ValueError("path goes below height 0")
        if h != 0:
            raise ValueError("path does not return to height 0")
        if len(self.weights) != self.steps.count(-1):
            raise ValueError("one weight per down-step is required")

    @property
    def n(self) -> int:
        return len(self.steps) // 2

    def down_steps(self) -> Iterator[tuple[int, int, bool]]:
        """Yield (index among down-steps, initial height, follows an up-step)."""
        h, t, prev = 0, 0, 0
        for s in self.steps:
            if s == -1:
                yield t, h, prev == 1
                t += 1
            h += s
            prev = s

    def validate(self):
        for t, h, peak in self.down_steps():
            w = self.weights[t]
            if peak and w is not None:
                raise InvalidWeightError(f"down-step {t + 1} follows an up-step and must weigh x")
            if not peak and (w is None or not 0 <= w <= h - 1):
                raise InvalidWeightError(f"down-step {t + 1} at height {h} has weight q^{w}")

    def weight(self) -> tuple[int, int]:
        """Total weight as (exponent of q, exponent of x)."""
        return (sum(w for w in self.weights if w is not None),
                sum(1 for w in self.weights if w is None))


def phi(sigma: Sequence[int]) -> WeightedDyckPath:
    """Bounding path of sigma, with each down-step weighted x at a peak and
    q^(crosses in that row) otherwise."""
    n = len(sigma)
    path = bounding_path(sigma)
    per_row = Counter(row for _, row in special_inversion_cells(sigma))
    weights: list[Optional[int]] = []
    prev = 0
    for s in path:
        if s == -1:
            row = n - len(weights)
            weights.append(None if prev == 1 else per_row[row])
        prev = s
    return WeightedDyckPath(path, tuple(weights))


def phi_inverse(path: WeightedDyckPath) -> tuple[int, ...]:
    """Rebuild the permutation graph row by row from the top."""
    path.validate()
    n = path.n
    column_of_row: dict[int, int] = {}
    taken = [False] * (n + 1)
    ups = 0
    t = 0
    prev = 0
    for s in path.steps:
        if s == 1:
            ups += 1
        else:
            row = n - t
            w = path.weights[t]
            if prev == 1:
                col = ups
                if taken[col]:
                    raise InvalidWeightError(f"column {col} already holds a dot")
            else:
                free = [c for c in range(ups, 0, -1) if not taken[c]]
                if w >= len(free):
                    raise InvalidWeightError(f"row {row} has only {len(free)} free cells")
                col = free[w]
            taken[col] = True
            column_of_row[row] = col
            t += 1
        prev = s
    sigma = [0] * n
    for row, col in column_of_row.items():
        sigma[col - 1] = row
    return tuple(sigma)


def dyck_paths(n: int) -> Iterator[tuple[int, ...]]:
    def rec(acc: list[int], up: int, h: int):
        if len(acc) == 2 * n:
            yield tuple(acc)
            return
        if up < n:
            acc.append(1)
            yield from rec(acc, up + 1, h + 1)
            acc.pop()
        if h > 0:
            acc.append(-1)
            yield from rec(acc, up, h - 1)
            acc.pop()

    yield from rec([], 0, 0)


def weighted_dyck_paths(n: int) -> Iterator[WeightedDyckPath]:
    """Every member of the image set of phi: all Dyck paths with all valid weightings."""
    for steps in dyck_paths(n):
        probe = WeightedDyckPath(steps, (None,) * n)
        choices = [(None,) if peak else tuple(range(h)) for _, h, peak in probe.down_steps()]
        for ws in itertools.product(*choices):
            yield WeightedDyckPath(steps, ws)
