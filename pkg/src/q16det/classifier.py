"""Membership decision for the set of achievable determinant values.

The value set: even integers exactly when divisible by 2**10 (0 included);
odd integers when congruent 1 mod 8, or congruent 5 mod 8 and of the form
m*p**2 with p = 7 mod 8 prime (m = n/p**2 is then automatically 5 mod 8,
because p**2 = 1 mod 16).  Negative integers are classified by their
residue class; the witness families realize negative values through their
integer parameter, and every Achievable answer is backed by a verified
certificate.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Union

from . import primes
from .witness import (
    WitnessCertificate,
    witness_even,
    witness_odd_1mod8,
    witness_odd_5mod8,
)


class Reason(enum.Enum):
    EVEN_NOT_MULTIPLE_OF_1024 = "EvenNotMultipleOf1024"
    ODD_CONGRUENT_3_MOD_4 = "OddCongruent3Mod4"
    FIVE_MOD_8_NO_ADMISSIBLE_PRIME_SQUARE = "FiveMod8NoAdmissiblePrimeSquare"


@dataclass(frozen=True)
class EvenFamily:
    t: int  # n = 1024 * t


@dataclass(frozen=True)
class Odd1Mod8:
    pass


@dataclass(frozen=True)
class Odd5Mod8:
    p: int
    m: int  # n = m * p**2


Recipe = Union[EvenFamily, Odd1Mod8, Odd5Mod8]


@dataclass(frozen=True)
class Classification:
    n: int
    recipe: Recipe | None
    reason: Reason | None

    @property
    def achievable(self) -> bool:
        return self.recipe is not None


@dataclass(frozen=True)
class FactorizationResult:
    """Signed prime factorization of n; ``certain`` is False when primality
    of some factor relied on probabilistic Miller-Rabin rounds."""

    sign: int
    factors: tuple[tuple[int, int], ...]  # (prime, exponent), primes ascending

    certain: bool

    def value(self) -> int:
        out = self.sign
        for p, e in self.factors:
            out *= p**e
        return out


def factorize(n: int) -> FactorizationResult:
    """Deterministic factorization of n != 0 (desk scale)."""
    if n == 0:
        raise ValueError("cannot factor 0")
    fm = primes.factor_map(n)
    certain = all(primes.primality_is_certain(p) for p in fm)
    return FactorizationResult(
        sign=-1 if n < 0 else 1,
        factors=tuple(sorted(fm.items())),
        certain=certain,
    )


def classify(n: int) -> Classification:
    """Decide achievability of n; residues are mathematical (in 0..7)."""
    if n % 2 == 0:
        if n % 1024 == 0:
            return Classification(n, EvenFamily(t=n // 1024), None)
        return Classification(n, None, Reason.EVEN_NOT_MULTIPLE_OF_1024)
    r = n % 8
    if r == 1:
        return Classification(n, Odd1Mod8(), None)
    if r in (3, 7):  # n = 3 mod 4
        return Classification(n, None, Reason.ODD_CONGRUENT_3_MOD_4)
    # r == 5: need some prime p = 7 mod 8 with p**2 | n; take the smallest.
    for p, e in factorize(n).factors:
        if e >= 2 and p % 8 == 7:
            return Classification(n, Odd5Mod8(p=p, m=n // (p * p)), None)
    return Classification(n, None, Reason.FIVE_MOD_8_NO_ADMISSIBLE_PRIME_SQUARE)


def classify_and_witness(n: int) -> WitnessCertificate | Classification:
    """A verified certificate when n is achievable, otherwise the
    NotAchievable classification."""
    c = classify(n)
    if c.recipe is None:
        return c
    if isinstance(c.recipe, EvenFamily):
        return witness_even(n)
    if isinstance(c.recipe, Odd1Mod8):
        return witness_odd_1mod8(n)
    return witness_odd_5mod8(n, c.recipe.p)
