"""Constructions achieving every attainable determinant value.

Even multiples of 2**10 and odd values 1 mod 8 come from six fixed
one-parameter coefficient families built around h(x) = (x+1)(x^2+1)(x^4+1)
= 1 + x + ... + x^7, which vanishes at -1, i and the primitive 8th roots of
unity, so adding a multiple of h only moves the evaluation at 1.

Values m*p^2 with m = 5 mod 8 and p = 7 mod 8 prime go through the
quadratic-ring pipeline: split p as X**2 - 2*Y**2, steer X mod 4 with the
unit 3 + 2*sqrt(2), write 2*(X + Y*sqrt(2)) as four squares, read off a
degree-3 coefficient pair whose norms at the 8th root of unity sum to
X + Y*sqrt(2), and shift by (1 - x^4)*k(x) - m'*h(x), which preserves that
sum while moving the evaluations at 1.

Every certificate is verified by recomputing the full 16x16 determinant;
an unverified certificate is never returned.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

from .errors import (
    BadInput,
    InternalInconsistency,
    NotMultiple,
    ParityViolation,
    PatternMismatch,
    WrongResidue,
)
from .exact_eval import FactoredForm, eval_at_omega, factored_form, norm_sq_omega
from .group_algebra import GroupRingElement, direct_determinant
from .primes import is_probable_prime
from .quad_ring import (
    CaseLabel,
    FourSquares,
    cohn_four_squares,
    normalize_decomposition,
    split_prime,
    unit_adjust,
)


def poly_h() -> tuple[int, ...]:
    """(x+1)(x^2+1)(x^4+1) = 1 + x + ... + x^7: all-ones coefficients.

    h(1) = 8 and h vanishes at -1, i and the primitive 8th roots of unity.
    """
    return (1,) * 8


@dataclass(frozen=True)
class WitnessPolynomials:
    """Low-degree data (u, v, k, s) with f = u + 2k, g = v + 2s, plus the
    shift parameter m applied by :func:`apply_shift`."""

    u: tuple[int, int, int, int]
    v: tuple[int, int, int, int]
    k: tuple[int, int, int, int]
    s: tuple[int, int, int, int]
    m: int


@dataclass(frozen=True)
class WitnessCertificate:
    n: int
    element: GroupRingElement
    factored: FactoredForm
    trace: dict
    verified: bool


# One-parameter families: (id, base f, base g, sign of m*h in f, in g, n(m)).
# n(m) is the determinant, verified for every emitted certificate.
_H = poly_h()

_FAMILIES = {
    "even_1024_4m_minus_3": (
        _H,
        (1, 0, 1, 1, 1, 0, 0, 0),
        -1,
        -1,
        lambda m: 1024 * (4 * m - 3),
    ),
    "even_1024_4m_minus_1": (
        (1, 1, 0, 0, 1, 1, 0, 0),
        (1, 1, 0, -1, 0, 0, 0, -1),
        -1,
        -1,
        lambda m: 1024 * (4 * m - 1),
    ),
    "even_2048_2m_minus_1": (
        (1, 1, 1, 1, 1, 1, 0, 0),
        (1, 0, 0, 0, 1, 0, 0, 0),
        -1,
        -1,
        lambda m: 2048 * (2 * m - 1),
    ),
    "even_4096_m": (
        (1, 1, 0, 0, 1, 1, -1, -1),
        (1, 1, 0, -1, 1, 1, 0, -1),
        -1,
        1,
        lambda m: 4096 * m,
    ),
    "odd_16m_plus_1": (
        (1, 0, 0, 0, 0, 0, 0, 0),
        (0,) * 8,
        1,
        1,
        lambda m: 16 * m + 1,
    ),
    "odd_16m_minus_7": (
        (1, -1, 1, 1, 0, 0, 0, 1),
        (1, 0, 0, 1, 1, 0, 0, 1),
        -1,
        -1,
        lambda m: 16 * m - 7,
    ),
}


def family_element(family: str, m: int) -> GroupRingElement:
    """The coefficient vectors of a family member (exposed for tests)."""
    base_f, base_g, sf, sg, _ = _FAMILIES[family]
    f = tuple(c + sf * m for c in base_f)
    g = tuple(c + sg * m for c in base_g)
    return GroupRingElement(f, g)


def family_value(family: str, m: int) -> int:
    return _FAMILIES[family][4](m)


def _certify(n: int, e: GroupRingElement, trace: dict) -> WitnessCertificate:
    det = direct_determinant(e)
    if det != n:
        raise InternalInconsistency(
            f"witness for {n} evaluates to {det}; trace={trace}"
        )
    return WitnessCertificate(
        n=n, element=e, factored=factored_form(e), trace=trace, verified=True
    )


def witness_even(n: int) -> WitnessCertificate:
    """A verified witness for any multiple of 2**10 (including 0)."""
    if n % 1024 != 0:
        raise NotMultiple(f"{n} is not a multiple of 2**10")
    t = n // 1024
    r = t % 4
    if r == 1:
        family, m = "even_1024_4m_minus_3", (t + 3) // 4
    elif r == 3:
        family, m = "even_1024_4m_minus_1", (t + 1) // 4
    elif r == 2:
        family, m = "even_2048_2m_minus_1", (t + 2) // 4
    else:
        family, m = "even_4096_m", t // 4
    assert family_value(family, m) == n
    return _certify(n, family_element(family, m), {"family": family, "m": m})


def witness_odd_1mod8(n: int) -> WitnessCertificate:
    """A verified witness for any n = 1 mod 8."""
    if n % 8 != 1:
        raise WrongResidue(f"{n} is not 1 mod 8")
    if n % 16 == 1:
        family, m = "odd_16m_plus_1", (n - 1) // 16
    else:
        family, m = "odd_16m_minus_7", (n + 7) // 16
    assert family_value(family, m) == n
    return _certify(n, family_element(family, m), {"family": family, "m": m})


def build_low_degree_pair(
    fs: FourSquares,
) -> tuple[tuple[int, int, int, int], tuple[int, int, int, int]]:
    """Degree-3 coefficient vectors from a normalized decomposition:

        a = ((a1-a2)/2, b1, (a1+a2)/2, b2),  b = ((a3-a4)/2, b3, (a3+a4)/2, b4)

    where (aj, bj) are the decomposition pairs.  Then |f(w)|^2 + |g(w)|^2
    reproduces exactly half the decomposed target.
    """
    (al1, be1), (al2, be2), (al3, be3), (al4, be4) = fs.pairs
    if (al1 - al2) % 2 != 0 or (al3 - al4) % 2 != 0:
        raise ParityViolation(f"alphas not pairwise congruent mod 2 in {fs.pairs}")
    a = ((al1 - al2) // 2, be1, (al1 + al2) // 2, be2)
    b = ((al3 - al4) // 2, be3, (al3 + al4) // 2, be4)
    return a, b


# Parity patterns of the low-degree pair (1 = odd coefficient).
_U_PATTERNS = {
    (1, 1, 0, 0): "1+x",
    (0, 1, 1, 0): "x(1+x)",
    (1, 1, 0, 1): "1+x+x^3",
    (0, 1, 1, 1): "x(1+x+x^2)",
}
_V_PATTERNS = {
    (1, 0, 0, 0): "1",
    (0, 1, 0, 0): "x",
    (0, 0, 1, 0): "x^2",
    (1, 1, 0, 0): "1+x",
    (0, 1, 1, 0): "x(1+x)",
    (1, 1, 1, 0): "1+x+x^2",
}


def extract_uvks(
    a: Sequence[int], b: Sequence[int]
) -> WitnessPolynomials:
    """Split f = u + 2k, g = v + 2s by coefficient parity, checking the
    parity patterns the normalized cases can produce."""
    u = tuple(c % 2 for c in a)
    v = tuple(c % 2 for c in b)
    if u not in _U_PATTERNS:
        raise PatternMismatch(f"f-parities {u} match no expected u pattern")
    if v not in _V_PATTERNS:
        raise PatternMismatch(f"g-parities {v} match no expected v pattern")
    k = tuple((c - p) // 2 for c, p in zip(a, u))
    s = tuple((c - p) // 2 for c, p in zip(b, v))
    return WitnessPolynomials(u=u, v=v, k=k, s=s, m=0)


def apply_shift(wp: WitnessPolynomials) -> GroupRingElement:
    """f = u + (1 - x^4)*k - m*h and g = v + (1 - x^4)*s - m*h as degree-7
    coefficient vectors.

    At 1 and -1 the (1 - x^4) term vanishes; at i and the 8th roots of
    unity h vanishes and (1 - x^4) doubles, so f = u + 2k there, keeping
    the quadratic-ring data of the low-degree pair.
    """
    m = wp.m
    f = tuple(wp.u[j] + wp.k[j] - m for j in range(4)) + tuple(
        -wp.k[j] - m for j in range(4)
    )
    g = tuple(wp.v[j] + wp.s[j] - m for j in range(4)) + tuple(
        -wp.s[j] - m for j in range(4)
    )
    return GroupRingElement(f, g)


def witness_odd_5mod8(n: int, p: int) -> WitnessCertificate:
    """A verified witness for n = m*p**2 with m = 5 mod 8, via the
    quadratic-ring pipeline for the prime p = 7 mod 8."""
    if n % 8 != 5:
        raise BadInput(f"{n} is not 5 mod 8")
    if p % 8 != 7 or not is_probable_prime(p):
        raise BadInput(f"p={p} is not a prime congruent to 7 mod 8")
    if n % (p * p) != 0:
        raise BadInput(f"p^2={p * p} does not divide {n}")
    m = n // (p * p)
    if m % 8 != 5:  # automatic: p^2 = 1 mod 16
        raise InternalInconsistency(f"m={m} not 5 mod 8 despite residues")

    if m % 16 == 5:
        x_target, shift = 1, (5 - m) // 16
    else:
        x_target, shift = 3, (m + 3) // 16

    s0 = split_prime(p)
    s = unit_adjust(s0, x_target)
    fs = cohn_four_squares(s)
    nfs, label = normalize_decomposition(fs)
    a4, b4 = build_low_degree_pair(nfs)

    z = norm_sq_omega(eval_at_omega(a4 + (0, 0, 0, 0))) + norm_sq_omega(
        eval_at_omega(b4 + (0, 0, 0, 0))
    )
    if (z.x, z.y) != (s.X, s.Y):
        raise InternalInconsistency(
            f"low-degree pair norms {z} != split solution {(s.X, s.Y)}"
        )
    label_residue = 3 if label in (
        CaseLabel.CASE1_ONE_ODD_BETA,
        CaseLabel.CASE2_CONGRUENT_MOD4,
    ) else 1
    if label_residue != x_target:
        raise InternalInconsistency(f"case {label} inconsistent with X={s.X} mod 4")

    wp = replace(extract_uvks(a4, b4), m=shift)
    e = apply_shift(wp)
    trace = {
        "family": "odd_5mod8_pipeline",
        "p": p,
        "m": m,
        "shift": shift,
        "x_target": x_target,
        "split": (s0.X, s0.Y),
        "adjusted": (s.X, s.Y),
        "four_squares": nfs.pairs,
        "case": label.value,
        "u": wp.u,
        "v": wp.v,
    }
    cert = _certify(n, e, trace)
    if cert.factored.D != p or (cert.factored.z.x, cert.factored.z.y) != (s.X, s.Y):
        raise InternalInconsistency(
            f"factored data {cert.factored} does not show D={p}, z={(s.X, s.Y)}"
        )
    return cert
