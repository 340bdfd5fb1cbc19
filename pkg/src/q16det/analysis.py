"""Executable consistency checks: Chebyshev-basis coefficients, parity
audits of the residue argument, exhaustive support scans, and the random
two-path crosscheck.

Scans and crosschecks are evidence, not proofs: they confirm at desk scale
that every value produced is accepted by the classifier and that the two
determinant computation paths agree.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from multiprocessing import get_context
from typing import Sequence

from . import kernel
from .classifier import classify
from .errors import (
    BudgetExceeded,
    InternalInconsistency,
    MismatchFound,
    PreconditionUnreachable,
)
from .exact_eval import (
    QuadraticSqrt2,
    determinant_from_factored,
    eval_at_omega,
    eval_at_pm1,
    factored_form,
    norm_sq_omega,
)
from .group_algebra import (
    GroupRingElement,
    direct_determinant,
    substitute_neg_x,
    swap_components,
)

DEFAULT_SCAN_BUDGET = 1 << 28


@dataclass(frozen=True)
class ChebyshevCoeffs:
    """Coefficients c with f(x)*f(1/x) = sum_j c[j] * (x + 1/x)**j."""

    c: tuple[int, ...]


def chebyshev_coeffs(poly: Sequence[int]) -> ChebyshevCoeffs:
    """Rewrite the palindromic Laurent product f(x)*f(1/x) in the basis
    (x + 1/x)**j.

    The product is sum_j e[j]*(x**j + x**-j) + e[0] with e[j] the
    autocorrelation of the coefficients; x**j + x**-j is expanded via the
    recurrence p[j+1] = t*p[j] - p[j-1] with p[0] = 2, p[1] = t.
    """
    a = list(poly)
    e = [sum(a[k] * a[k + j] for k in range(8 - j)) for j in range(8)]
    c = [0] * 8
    c[0] = e[0]
    p_prev = [2]            # p_0(t)
    p_cur = [0, 1]          # p_1(t)
    for j in range(1, 8):
        for i, coeff in enumerate(p_cur):
            c[i] += e[j] * coeff
        # p_{j+1} = t * p_j - p_{j-1}
        p_next = [0] + p_cur
        for i, coeff in enumerate(p_prev):
            p_next[i] -= coeff
        p_prev, p_cur = p_cur, p_next
    return ChebyshevCoeffs(c=tuple(c))


def chebyshev_eval_omega(cc: ChebyshevCoeffs) -> QuadraticSqrt2:
    """Value at the 8th root of unity, where x + 1/x = sqrt(2):
    sum c[j] * sqrt(2)**j = (c0 + 2c2 + 4c4 + 8c6) + sqrt(2)(c1 + 2c3 + 4c5 + 8c7).
    """
    c = cc.c
    return QuadraticSqrt2(
        c[0] + 2 * c[2] + 4 * c[4] + 8 * c[6],
        c[1] + 2 * c[3] + 4 * c[5] + 8 * c[7],
    )


@dataclass(frozen=True)
class ParityAuditRecord:
    element: GroupRingElement
    swapped: bool
    negated: bool
    c: tuple[int, ...]
    d: tuple[int, ...]
    X: int
    Y: int
    D: int


def _normalize_for_audit(e: GroupRingElement) -> tuple[GroupRingElement, bool, bool]:
    """Reach f(1), f(-1) odd, g(1) = 2 mod 4, g(-1) = 0 mod 4 by swapping
    f with g and/or substituting x -> -x."""
    for swapped in (False, True):
        cand = swap_components(e) if swapped else e
        f1, g1, fm1, _ = eval_at_pm1(cand)
        if f1 % 2 == 0 or fm1 % 2 == 0:
            continue
        for negated in (False, True):
            cand2 = substitute_neg_x(cand) if negated else cand
            _, g1, _, gm1 = eval_at_pm1(cand2)
            if g1 % 4 == 2 and gm1 % 4 == 0:
                return cand2, swapped, negated
    raise PreconditionUnreachable(
        f"no swap/negate normalization of {e} meets the residue preconditions"
    )


def parity_audit(e: GroupRingElement) -> ParityAuditRecord:
    """Check the residue consequences of the normalization on one element:
    c0 odd, c1 even, d0 even, d1 odd, X and Y odd, D > 0 and D = 7 mod 8.

    The element is normalized internally (swap / x -> -x);
    PreconditionUnreachable is raised when no normalization satisfies the
    residue preconditions (exactly the non-5-mod-8 determinants).
    """
    norm, swapped, negated = _normalize_for_audit(e)
    cc = chebyshev_coeffs(norm.a)
    dd = chebyshev_coeffs(norm.b)
    zf = chebyshev_eval_omega(cc)
    zg = chebyshev_eval_omega(dd)
    z = zf + zg
    # Two-path agreement with the direct norm computation.
    z_direct = norm_sq_omega(eval_at_omega(norm.a)) + norm_sq_omega(
        eval_at_omega(norm.b)
    )
    if z != z_direct:
        raise InternalInconsistency(f"Chebyshev path {z} != norm path {z_direct}")
    D = z.norm()
    checks = {
        "c0 odd": cc.c[0] % 2 == 1,
        "c1 even": cc.c[1] % 2 == 0,
        "d0 even": dd.c[0] % 2 == 0,
        "d1 odd": dd.c[1] % 2 == 1,
        "X odd": z.x % 2 == 1,
        "Y odd": z.y % 2 == 1,
        "D > 0": D > 0,
        "D = 7 mod 8": D % 8 == 7,
    }
    failed = [name for name, ok in checks.items() if not ok]
    if failed:
        raise InternalInconsistency(f"parity audit failed {failed} on {norm}")
    return ParityAuditRecord(
        element=norm, swapped=swapped, negated=negated,
        c=cc.c, d=dd.c, X=z.x, Y=z.y, D=D,
    )


@dataclass
class AuditReport:
    count: int
    seed: int
    height: int
    audited: int = 0
    skipped: int = 0
    failures: list[str] = field(default_factory=list)
    elapsed_s: float = 0.0

    @property
    def ok(self) -> bool:
        return self.audited == self.count and not self.failures

    def to_dict(self) -> dict:
        return {
            "count": self.count,
            "seed": self.seed,
            "height": self.height,
            "audited": self.audited,
            "skipped": self.skipped,
            "failures": list(self.failures),
            "ok": self.ok,
            "elapsed_s": round(self.elapsed_s, 3),
        }


def run_parity_audits(count: int, seed: int, height: int = 9) -> AuditReport:
    """Audit ``count`` seeded random elements that admit the normalization;
    draws that do not (wrong residue class) are skipped and counted."""
    rng = random.Random(seed)
    report = AuditReport(count=count, seed=seed, height=height)
    t0 = time.perf_counter()
    while report.audited < count:
        e = GroupRingElement.from_coeffs(
            [rng.randint(-height, height) for _ in range(16)]
        )
        try:
            parity_audit(e)
        except PreconditionUnreachable:
            report.skipped += 1
            continue
        except InternalInconsistency as exc:
            report.failures.append(str(exc))
            report.audited += 1
            continue
        report.audited += 1
    report.elapsed_s = time.perf_counter() - t0
    return report


@dataclass
class ScanReport:
    support: tuple[int, ...]
    total: int
    workers: int
    lane: str
    direct: bool
    zero: int
    even: int
    even_mult_1024: int
    odd: int
    odd_mod8: dict[int, int]
    sample: list[int]
    five_mod8_values: int
    violations: list[tuple[str, str]]
    elapsed_s: float

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "support": list(self.support),
            "total": self.total,
            "workers": self.workers,
            "lane": self.lane,
            "direct": self.direct,
            "zero": self.zero,
            "even": self.even,
            "even_mult_1024": self.even_mult_1024,
            "odd": self.odd,
            "odd_mod8": {str(k): v for k, v in sorted(self.odd_mod8.items())},
            "sample": [str(v) for v in self.sample],
            "five_mod8_values": self.five_mod8_values,
            "violations": [{"value": v, "reason": r} for v, r in self.violations],
            "ok": self.ok,
            "elapsed_s": round(self.elapsed_s, 3),
        }


def _scan_chunk(args: tuple) -> dict:
    values, start, stop, direct, sample_abs_limit = args
    return kernel.scan_range(values, start, stop, direct, sample_abs_limit)


def exhaustive_scan(
    support: Sequence[int],
    workers: int = 1,
    budget: int = DEFAULT_SCAN_BUDGET,
    direct: bool = False,
    sample_abs_limit: int = 1 << 20,
    sample_limit: int = 64,
) -> ScanReport:
    """Enumerate every element with coefficients in ``support`` and check
    the residue laws: even determinants divisible by 2**10, odd ones 1 mod
    4, and every value 5 mod 8 accepted by the classifier.

    The index space is split into disjoint ranges merged commutatively, so
    the report is bit-identical for any worker count.
    """
    values = tuple(sorted(set(int(v) for v in support)))
    if not values:
        raise ValueError("support must be non-empty")
    total = len(values) ** 16
    if total > budget:
        raise BudgetExceeded(
            f"support size {len(values)} means {total} elements > budget {budget}"
        )
    t0 = time.perf_counter()

    # Chunk boundaries never affect the merged report (commutative merge);
    # aim for a few tasks per worker, capped to keep per-task memory flat.
    chunk = max(1, min(1 << 22, (total + 4 * workers - 1) // (4 * workers)))
    bounds = list(range(0, total, chunk)) + [total]
    tasks = [
        (values, lo, hi, direct, sample_abs_limit)
        for lo, hi in zip(bounds[:-1], bounds[1:])
    ]
    if workers > 1 and len(tasks) > 1:
        try:
            ctx = get_context("fork")
        except ValueError:  # platform without fork
            ctx = get_context()
        with ProcessPoolExecutor(max_workers=workers, mp_context=ctx) as ex:
            parts = list(ex.map(_scan_chunk, tasks))
    else:
        parts = [_scan_chunk(t) for t in tasks]

    zero = even = even1024 = odd = 0
    odd_mod8 = {1: 0, 3: 0, 5: 0, 7: 0}
    even_violations: set[int] = set()
    odd3_violations: set[int] = set()
    five_mod8: set[int] = set()
    sample: set[int] = set()
    direct_mismatches: set[int] = set()
    for part in parts:
        zero += part["zero"]
        even += part["even"]
        even1024 += part["even_mult_1024"]
        odd += part["odd"]
        for r, cnt in part["odd_mod8"].items():
            odd_mod8[r] += cnt
        even_violations |= part["even_violations"]
        odd3_violations |= part["odd3_violations"]
        five_mod8 |= part["five_mod8"]
        sample |= part["sample"]
        direct_mismatches |= part["direct_mismatches"]

    violations: list[tuple[str, str]] = []
    for v in sorted(even_violations):
        violations.append((str(v), "even value not divisible by 2**10"))
    for v in sorted(odd3_violations):
        violations.append((str(v), "odd value congruent 3 mod 4"))
    for v in sorted(five_mod8):
        if not classify(v).achievable:
            violations.append((str(v), "value 5 mod 8 rejected by classifier"))
    for v in sorted(direct_mismatches):
        violations.append((str(v), "direct and factored determinants disagree"))

    return ScanReport(
        support=values,
        total=total,
        workers=workers,
        lane=kernel.ACTIVE_LANE,
        direct=direct,
        zero=zero,
        even=even,
        even_mult_1024=even1024,
        odd=odd,
        odd_mod8=odd_mod8,
        sample=sorted(sample, key=lambda v: (abs(v), v))[:sample_limit],
        five_mod8_values=len(five_mod8),
        violations=violations,
        elapsed_s=time.perf_counter() - t0,
    )


@dataclass
class CrosscheckReport:
    count: int
    height: int
    seed: int
    lane: str
    elapsed_s: float

    def to_dict(self) -> dict:
        return {
            "count": self.count,
            "height": self.height,
            "seed": self.seed,
            "lane": self.lane,
            "mismatches": 0,
            "ok": True,
            "elapsed_s": round(self.elapsed_s, 3),
        }


def random_crosscheck(count: int, height: int, seed: int) -> CrosscheckReport:
    """Assert direct = factored determinant on ``count`` seeded random
    elements with coefficients in [-height, height].  Raises MismatchFound
    on the first disagreement (an implementation bug signal)."""
    rng = random.Random(seed)
    t0 = time.perf_counter()
    for i in range(count):
        coeffs = [rng.randint(-height, height) for _ in range(16)]
        e = GroupRingElement.from_coeffs(coeffs)
        direct = direct_determinant(e)
        fact = determinant_from_factored(factored_form(e))
        if direct != fact:
            raise MismatchFound(
                f"element #{i} {coeffs}: direct {direct} != factored {fact}"
            )
    return CrosscheckReport(
        count=count,
        height=height,
        seed=seed,
        lane=kernel.ACTIVE_LANE,
        elapsed_s=time.perf_counter() - t0,
    )
