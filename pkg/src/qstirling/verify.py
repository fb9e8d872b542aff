"""
Verification suites run by ``qstirling verify``.

Each suite yields ``CheckResult`` rows in a fixed order so reports are
reproducible byte for byte (apart from the wall time).
"""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Callable, Iterator

from . import enumeration as en
from . import formulas as fm
from . import hypergeometric as hg
from . import paths as pa
from . import qcomb as qc
from .exactmath import one_minus_q_pow

__all__ = ["CheckResult", "VerifyReport", "SUITES", "run_suite"]


@dataclass(frozen=True)
class CheckResult:
    check: str
    params: tuple
    passed: bool
    expected: str
    actual: str

    def to_json(self) -> dict:
        return {"check": self.check, "params": [str(p) for p in self.params],
                "passed": self.passed, "expected": self.expected, "actual": self.actual}


@dataclass
class VerifyReport:
    suite: str
    nmax: int
    results: list[CheckResult] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> int:
        return sum(r.passed for r in self.results)

    @property
    def failed(self) -> int:
        return len(self.results) - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_json(self) -> dict:
        return {"suite": self.suite, "nmax": self.nmax,
                "summary": {"total": len(self.results), "passed": self.passed, "failed": self.failed},
                "wall_time": round(self.wall_time, 3),
                "checks": [r.to_json() for r in self.results]}

    def summary_text(self) -> str:
        lines = [f"suite={self.suite} nmax={self.nmax} total={len(self.results)} "
                 f"passed={self.passed} failed={self.failed}"]
        for r in self.results:
            if not r.passed:
                lines.append(f"FAIL {r.check}{r.params}: expected {r.expected}, got {r.actual}")
        return "\n".join(lines)


def _cmp(check: str, params: tuple, expected, actual) -> CheckResult:
    return CheckResult(check, params, expected == actual, str(expected), str(actual))


def _guarded(check: str, params: tuple, expected: Callable, actual: Callable) -> CheckResult:
    try:
        e, a = expected(), actual()
    except Exception as exc:  # a raised formula bug is a failed check, not a crash
        return CheckResult(check, params, False, "no error", f"{type(exc).__name__}: {exc}")
    return _cmp(check, params, e, a)


def _cells(nmax: int) -> Iterator[tuple[int, int]]:
    for n in range(nmax + 1):
        for k in range(n + 1):
            yield n, k


# ---------------------------------------------------------------------------


def suite_identities(nmax: int) -> Iterator[CheckResult]:
    for n, k in _cells(nmax):
        yield _guarded("identity_first", (n, k), lambda: fm.s1_closed(n, k),
                       lambda: fm.identity_first(n, k, "closed"))
        yield _guarded("identity_second", (n, k), lambda: fm.s2_closed(n, k),
                       lambda: fm.identity_second(n, k, "closed"))
        yield _cmp("narayana_identity", (n, k), True, fm.narayana_identity_check(n, k))


def suite_formulas(nmax: int) -> Iterator[CheckResult]:
    for n, k in _cells(nmax):
        ref1, ref2 = fm.s1_closed(n, k), fm.s2_closed(n, k)
        yield _guarded("s1_closed_alt", (n, k), lambda: ref1, lambda: fm.s1_closed_alt(n, k))
        if n > 0:
            yield _guarded("s2_closed_alt", (n, k), lambda: ref2, lambda: fm.s2_closed_alt(n, k))
        if n <= min(9, en.S1_ENUM_BOUND):
            yield _cmp("s1_enum", (n, k), ref1, en.s1_enum(n, k))
        if n <= min(10, en.S2_ENUM_BOUND):
            yield _cmp("s2_enum", (n, k), ref2, en.s2_enum(n, k))
        yield _cmp("s1_at_q1", (n, k), qc.stirling_classical(1, n, k), ref1(1))
        yield _cmp("s2_at_q1", (n, k), qc.stirling_classical(2, n, k), ref2(1))
        yield _cmp("s1_at_q0", (n, k), qc.narayana(n, k), ref1(0))
        yield _cmp("s2_at_q0", (n, k), qc.narayana(n, k), ref2(0))
    for n in range(nmax + 1):
        for k in range(n + 1):
            for i in range(n - k + 1):
                for j in range(i + 1):
                    p = (n, k, i, j)
                    yield _guarded("A_diff_fact", p, lambda: qc.coeff_A_factored(*p),
                                   lambda: qc.coeff_A(*p))
                    if n + j > 0:
                        yield _guarded("B_diff_fact", p, lambda: qc.coeff_B_factored(*p),
                                       lambda: qc.coeff_B(*p))
                    yield _cmp("A_shift", p, qc.coeff_A(n, k - 1, i + 1, j - 1), qc.coeff_A(*p))
                    yield _cmp("B_shift", p, qc.coeff_B(n + 1, k, i + 1, j - 1), qc.coeff_B(*p))
                    yield _cmp("rel4A", p, qc.coeff_A(*p), qc.coeff_A_four_term(*p))
                    yield _cmp("rel4B", p, qc.coeff_B(*p), qc.coeff_B_four_term(*p))


def suite_paths(nmax: int) -> Iterator[CheckResult]:
    for n in range(nmax + 1):
        jf, tf, sch = pa.s2_via_jfraction(n), pa.s1_via_tfraction(n), pa.s1_scaled_via_schroder(n)
        for k in range(n + 1):
            yield _cmp("s2_jfraction", (n, k), fm.s2_closed(n, k), jf.coeff(k))
            yield _cmp("s1_tfraction", (n, k), fm.s1_closed(n, k), tf.coeff(k))
            yield _cmp("s1_schroder", (n, k), one_minus_q_pow(n - k) * tf.coeff(k), sch.coeff(k))
        for k in range(n % 2, n + 1, 2):
            yield _cmp("mu", (n, k), pa.mu_closed(n, k), pa.mu_dp(n, k))
        yield _cmp("qstsum", (n,), pa.qstsum_rhs(n), pa.qstsum_lhs(n, fm.s1_closed))
    for kind, spec in ((pa.MOTZKIN, pa.s2_jfraction_spec()), (pa.DYCK_T, pa.s1_tfraction_spec()),
                       (pa.SCHRODER, pa.s1_schroder_spec())):
        series = pa.continued_fraction_series(kind, spec, nmax)
        for n in range(nmax + 1):
            yield _cmp("fraction_" + kind, (n,), pa.path_gf(spec, n), series[n])


def suite_bijections(nmax: int) -> Iterator[CheckResult]:
    for n in range(1, min(nmax, 9) + 1):
        seen = set()
        for p in en.set_partitions(n):
            r = en.partition_to_rooks(p)
            seen.add(r)
            yield _cmp("cro_eq_inv", (str(p),), en.crossings(p), en.rook_inversions(r))
        expected = {r for m in range(n) for r in en.rook_placements(n - 1, m)}
        yield _cmp("rook_image", (n,), len(expected), len(seen & expected) if seen <= expected else -1)
    for n in range(min(nmax, 8) + 1):
        for sigma in itertools.permutations(range(1, n + 1)):
            inv, rlm = en.perm_stats(sigma)
            w = en.phi(sigma).weight()
            yield _cmp("phi_weight", (sigma,), (inv, rlm), w)
            if n <= 6:
                yield _cmp("phi_inverse_phi", (sigma,), sigma, en.phi_inverse(en.phi(sigma)))
        if n <= 6:
            for path in en.weighted_dyck_paths(n):
                yield _cmp("phi_phi_inverse", (path.steps, path.weights), path,
                           en.phi(en.phi_inverse(path)))


def suite_hypergeometric(nmax: int) -> Iterator[CheckResult]:
    m = min(nmax, 6)
    for t in hg.saalschutz_grid(m):
        yield _cmp("saalschutz", t, True, hg.saalschutz_check(*t))
    for t in hg.gauss_grid(m):
        yield _cmp("gauss", t, True, hg.gauss_check(*t))
    for up, lo in hg.contiguity_grid(m):
        yield _cmp("contiguity", up + lo, True, hg.contiguity_check(up, lo))


def suite_proof_steps(nmax: int) -> Iterator[CheckResult]:
    for n, k in _cells(nmax):
        for h in range(n - k + 1):
            for i in range(h + 1):
                sign = (-1) ** (n + k + h + i)
                p = (n, k, h, i)
                yield _cmp("D_eq_B", p, sign * qc.coeff_B(*p), fm.coeff_D(*p))
                if i >= 1:
                    yield _cmp("Cbar_closed", p, sign * qc.binom_ext(n, k + h) * qc.binom_ext(n, k - i),
                               fm.coeff_Cbar(*p))
                    yield _cmp("C_eq_A", p, True, fm.coeff_C_check(*p))
                if i < h:
                    yield _cmp("relDi", p, -(h + i + 1) * (n - k + i + 2) * fm.coeff_D(n, k, h, i + 1),
                               (n + i) * (i + h + 2) * fm.coeff_D(*p))
                    yield _cmp("relBi", p, (h + i + 1) * (n + i - k + 2) * qc.coeff_B(n, k, h, i + 1),
                               (h + i + 2) * (n + i) * qc.coeff_B(*p))
        for i in range(1, n - k + 2):
            yield _cmp("Cbar_vanishes", (n, k, n - k + 1, i), 0, fm.coeff_Cbar(n, k, n - k + 1, i))
        for i in range(n - k + 1):
            for u in range(n - k - i + 1):
                yield _cmp("E_closed", (n, k, i, u), fm.coeff_E_closed(n, k, i, u), fm.coeff_E(n, k, i, u))


SUITES: dict[str, Callable[[int], Iterator[CheckResult]]] = {
    "identities": suite_identities,
    "formulas": suite_formulas,
    "paths": suite_paths,
    "bijections": suite_bijections,
    "hypergeometric": suite_hypergeometric,
    "proof-steps": suite_proof_steps,
}


def run_suite(name: str, nmax: int) -> VerifyReport:
    if nmax < 0:
        raise ValueError("nmax must be >= 0")
    names = list(SUITES) if name == "all" else [name]
    for s in names:
        if s not in SUITES:
            raise ValueError(f"unknown suite {name!r}")
    report = VerifyReport(name, nmax)
    start = time.perf_counter()
    for s in names:
        report.results.extend(SUITES[s](nmax))
    report.wall_time = time.perf_counter() - start
    return report
