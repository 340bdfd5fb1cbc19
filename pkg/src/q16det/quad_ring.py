"""Number theory in the real quadratic ring Z[sqrt(2)].

Covers what the witness pipeline needs: square roots of 2 modulo p, prime
splitting X**2 - 2*Y**2 = p for p = 7 mod 8, unit adjustment by 3 + 2*sqrt(2)
to steer X mod 4, and four-squares decompositions of 2*(X + Y*sqrt(2)).
Everything is exact; total positivity is decided by integer case analysis.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import isqrt

from .errors import (
    InternalInconsistency,
    InvalidResidue,
    NoDecomposition,
    NonResidue,
    NotPrime,
    NoValidArrangement,
)
from .exact_eval import QuadraticSqrt2
from .primes import is_probable_prime


@dataclass(frozen=True)
class SplitSolution:
    """A totally positive solution of X**2 - 2*Y**2 = p with X, Y odd."""

    X: int
    Y: int
    p: int

    def __post_init__(self) -> None:
        if self.X * self.X - 2 * self.Y * self.Y != self.p:
            raise InternalInconsistency(
                f"({self.X}, {self.Y}) does not solve X^2-2Y^2={self.p}"
            )
        if self.X <= 0 or self.Y <= 0:
            raise InternalInconsistency(f"({self.X}, {self.Y}) not positive")
        if self.X % 2 == 0 or self.Y % 2 == 0:
            raise InternalInconsistency(f"({self.X}, {self.Y}) not both odd")
        if not self.element().is_totally_positive():
            raise InternalInconsistency(f"({self.X}, {self.Y}) not totally positive")

    def element(self) -> QuadraticSqrt2:
        return QuadraticSqrt2(self.X, self.Y)


@dataclass(frozen=True)
class FourSquares:
    """Four pairs (alpha_j, beta_j) with
    sum_j (alpha_j + beta_j*sqrt(2))**2 equal to a target in Z[sqrt(2)]."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if len(self.pairs) != 4:
            raise ValueError("exactly four pairs required")

    def total(self) -> QuadraticSqrt2:
        """sum of the four squares: (sum a^2 + 2 sum b^2) + 2(sum a*b)*sqrt2."""
        x = sum(a * a + 2 * b * b for a, b in self.pairs)
        y = 2 * sum(a * b for a, b in self.pairs)
        return QuadraticSqrt2(x, y)


class CaseLabel(enum.Enum):
    """Parity layout of a normalized decomposition."""

    CASE1_ONE_ODD_BETA = "case1_one_odd_beta"
    CASE1_THREE_ODD_BETA = "case1_three_odd_beta"
    CASE2_CONGRUENT_MOD4 = "case2_congruent_mod4"
    CASE2_INCONGRUENT_MOD4 = "case2_incongruent_mod4"


def sqrt2_mod_p(p: int) -> int:
    """The smaller root r of r**2 = 2 (mod p) for a prime p = +-1 mod 8.

    p = 7 mod 8 uses the exponent shortcut for p = 3 mod 4; p = 1 mod 8
    runs Tonelli-Shanks with the smallest non-residue as the helper, so the
    result is deterministic for a fixed p.
    """
    if p < 2 or not is_probable_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p % 8 not in (1, 7):
        raise NonResidue(f"2 is a non-residue mod {p} (p = {p % 8} mod 8)")
    if p % 4 == 3:
        r = pow(2, (p + 1) // 4, p)
    else:
        r = _tonelli_shanks(2, p)
    if r * r % p != 2 % p:
        raise NotPrime(f"{p}: square-root verification failed, not prime")
    return min(r, p - r)


def _tonelli_shanks(a: int, p: int) -> int:
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    c = pow(z, q, p)
    x = pow(a, (q + 1) // 2, p)
    t = pow(a, q, p)
    m = s
    while t != 1:
        t2i = t
        i = 0
        for i in range(1, m):
            t2i = t2i * t2i % p
            if t2i == 1:
                break
        b = pow(c, 1 << (m - i - 1), p)
        x = x * b % p
        c = b * b % p
        t = t * c % p
        m = i
    return x


def _round_div(a: int, b: int) -> int:
    """Nearest integer to a/b (ties toward +infinity)."""
    if b < 0:
        a, b = -a, -b
    return (2 * a + b) // (2 * b)


def _gcd_sqrt2(u: tuple[int, int], v: tuple[int, int]) -> tuple[int, int]:
    """gcd in Z[sqrt(2)], which is norm-Euclidean: each step divides with a
    remainder of strictly smaller absolute norm."""
    while v != (0, 0):
        vx, vy = v
        n = vx * vx - 2 * vy * vy
        ux, uy = u
        px = ux * vx - 2 * uy * vy
        py = uy * vx - ux * vy
        qx = _round_div(px, n)
        qy = _round_div(py, n)
        u, v = v, (ux - qx * vx - 2 * qy * vy, uy - qx * vy - qy * vx)
    return u


def _reduce_min_y(x: int, y: int) -> tuple[int, int]:
    """Walk down the orbit of (x, y) under 3 - 2*sqrt(2) to the orbit's
    totally positive representative of minimal Y > 0."""
    while True:
        y2 = 3 * y - 2 * x
        if y2 <= 0 or y2 >= y:
            return x, y
        x, y = 3 * x - 4 * y, y2


def split_prime(p: int) -> SplitSolution:
    """The minimal (smallest Y > 0) totally positive solution of
    X**2 - 2*Y**2 = p for a prime p = 7 mod 8.

    A generator of a prime ideal over p is found as gcd(p, r - sqrt(2)) with
    r**2 = 2 mod p; units then fix the norm sign and minimize Y.  Solutions
    with Y > 0 fall in two orbits of 3 + 2*sqrt(2) (the ideal and its
    conjugate), so both orbit minima are compared.
    """
    if p % 8 != 7:
        raise InvalidResidue(f"p must be 7 mod 8, got {p} = {p % 8} mod 8")
    r = sqrt2_mod_p(p)
    x, y = _gcd_sqrt2((p, 0), (r, -1))
    n = x * x - 2 * y * y
    if abs(n) != p:
        raise InternalInconsistency(f"gcd norm {n} is not +-{p}")
    if n == -p:
        x, y = x + 2 * y, x + y  # times 1 + sqrt(2), norm -1
    x, y = abs(x), abs(y)
    x1, y1 = _reduce_min_y(x, y)
    # Conjugate orbit: step (x1, -y1) back to positive Y, then reduce.
    x2, y2 = _reduce_min_y(3 * x1 - 4 * y1, 2 * x1 - 3 * y1)
    if y2 < y1:
        x1, y1 = x2, y2
    return SplitSolution(X=x1, Y=y1, p=p)


def unit_adjust(s: SplitSolution, target: int) -> SplitSolution:
    """A solution for the same prime with X = target (mod 4).

    One multiplication by 3 + 2*sqrt(2) or its inverse 3 - 2*sqrt(2) always
    suffices, since 3X + 4Y = -X mod 4 flips the residue; the inverse is
    preferred when it keeps Y positive (it shrinks the solution).
    """
    if target not in (1, 3):
        raise ValueError(f"target must be 1 or 3 mod 4, got {target}")
    if s.X % 4 == target:
        return s
    x, y = 3 * s.X - 4 * s.Y, 3 * s.Y - 2 * s.X
    if y <= 0:
        x, y = 3 * s.X + 4 * s.Y, 2 * s.X + 3 * s.Y
    return SplitSolution(X=x, Y=y, p=s.p)


def _tot_nonneg(x: int, y: int) -> bool:
    """x + y*sqrt(2) >= 0 under both real embeddings, exactly."""
    if x < 0:
        return False  # sum of embeddings is 2x
    if y == 0:
        return True
    yy2 = 2 * y * y
    xx = x * x
    # One embedding is x - |y|*sqrt(2); nonnegative iff x^2 >= 2y^2.
    return xx >= yy2


def _square_candidates(target: QuadraticSqrt2) -> list[tuple[int, int]]:
    """All canonical pairs (alpha, beta) whose square fits under the target
    in both embeddings; ascending lexicographic (|alpha|, |beta|) order with
    canonical sign alpha > 0, or alpha = 0 and beta >= 0."""
    tx, ty = target.x, target.y
    out: list[tuple[int, int]] = []
    # (a + b*sqrt2)^2 + (a - b*sqrt2)^2 = 2a^2 + 4b^2 <= 2*tx.
    for a in range(isqrt(tx) + 1 if tx >= 0 else 0):
        rem = tx - a * a
        bmax = isqrt(rem // 2) if rem >= 0 else -1
        bmin = 0 if a == 0 else -bmax
        for b in range(bmin, bmax + 1):
            if _tot_nonneg(tx - (a * a + 2 * b * b), ty - 2 * a * b):
                out.append((a, b))
    out.sort(key=lambda ab: (abs(ab[0]), abs(ab[1]), ab[1] < 0))
    return out


def _dfs_four(target: QuadraticSqrt2, cands: list[tuple[int, int]]) -> list[tuple[int, int]] | None:
    """First decomposition into exactly four candidate squares, searching
    non-increasing candidate indices from the largest candidate down."""
    if not cands:
        return None
    chosen: list[tuple[int, int]] = []

    def rec(rx: int, ry: int, max_i: int, depth: int) -> bool:
        if depth == 4:
            return rx == 0 and ry == 0
        for i in range(max_i, -1, -1):
            a, b = cands[i]
            nx = rx - (a * a + 2 * b * b)
            ny = ry - 2 * a * b
            if not _tot_nonneg(nx, ny):
                continue
            chosen.append((a, b))
            if rec(nx, ny, i, depth + 1):
                return True
            chosen.pop()
        return False

    if rec(target.x, target.y, len(cands) - 1, 0):
        return list(chosen)
    return None


def four_squares(target: QuadraticSqrt2) -> FourSquares:
    """Write a totally nonnegative target with even sqrt(2)-coefficient as a
    sum of four squares in Z[sqrt(2)].

    Decompositions whose alphas are all odd are searched first: they exist
    in practice for the doubled split solutions this library consumes and
    they lead to the simpler parity layout downstream.  The search is a
    deterministic depth-first scan, so certificates are reproducible.
    """
    if target.y % 2 != 0:
        raise NoDecomposition(
            f"sqrt(2)-coefficient of {target} is odd; no four-squares decomposition"
        )
    if not target.is_totally_nonneg():
        raise NoDecomposition(f"{target} is not totally nonnegative")
    cands = _square_candidates(target)
    odd_cands = [ab for ab in cands if ab[0] % 2 == 1]
    sol = _dfs_four(target, odd_cands)
    if sol is None:
        sol = _dfs_four(target, cands)
    if sol is None:
        raise NoDecomposition(f"search exhausted for {target}")
    fs = FourSquares(tuple(sol))
    if fs.total() != target:
        raise InternalInconsistency(f"decomposition of {target} does not reconstruct")
    return fs


def cohn_four_squares(s: SplitSolution) -> FourSquares:
    """Four squares summing to 2*(X + Y*sqrt(2)) for a split solution."""
    return four_squares(QuadraticSqrt2(2 * s.X, 2 * s.Y))


def _canonical_pair(pair: tuple[int, int]) -> tuple[int, int]:
    a, b = pair
    if a > 0 or (a == 0 and b >= 0):
        return pair
    return (-a, -b)


def _layout_ok(pairs: list[tuple[int, int]], label: CaseLabel) -> bool:
    (a1, b1), (a2, b2), (a3, b3), (a4, b4) = pairs
    if a1 % 2 == 0 or a2 % 2 == 0 or (a3 - a4) % 2 != 0 or b1 % 2 == 0:
        return False
    betas = (b1 % 2, b2 % 2, b3 % 2, b4 % 2)
    if label is CaseLabel.CASE1_ONE_ODD_BETA:
        return a3 % 2 == 1 and betas == (1, 0, 0, 0)
    if label is CaseLabel.CASE1_THREE_ODD_BETA:
        return a3 % 2 == 1 and betas == (1, 1, 1, 0)
    if label is CaseLabel.CASE2_CONGRUENT_MOD4:
        return a3 % 2 == 0 and betas == (1, 0, 1, 0) and (a3 - a4) % 4 == 0
    return a3 % 2 == 0 and betas == (1, 0, 1, 0) and (a3 - a4) % 4 != 0


def normalize_decomposition(fs: FourSquares) -> tuple[FourSquares, CaseLabel]:
    """Reorder (and sign-canonicalize) a decomposition into the parity
    layout the coefficient assignment expects, and label it.

    Only square-preserving moves are used: permutations of the four pairs
    and joint negations (a, b) -> (-a, -b).  For a target 2*(X + Y*sqrt(2))
    with X, Y odd a valid arrangement always exists: Y odd forces a pair
    with both entries odd, and 2X even forces two or four odd alphas.
    """
    pairs = [_canonical_pair(p) for p in fs.pairs]
    odd_a = [p for p in pairs if p[0] % 2 == 1]
    even_a = [p for p in pairs if p[0] % 2 == 0]

    if len(odd_a) == 4:
        odd_b = [p for p in pairs if p[1] % 2 == 1]
        even_b = [p for p in pairs if p[1] % 2 == 0]
        if len(odd_b) == 1:
            ordered, label = odd_b + even_b, CaseLabel.CASE1_ONE_ODD_BETA
        elif len(odd_b) == 3:
            ordered, label = odd_b + even_b, CaseLabel.CASE1_THREE_ODD_BETA
        else:
            raise NoValidArrangement(f"{fs.pairs}: {len(odd_b)} odd betas with 4 odd alphas")
    elif len(odd_a) == 2:
        oa_ob = [p for p in odd_a if p[1] % 2 == 1]
        oa_eb = [p for p in odd_a if p[1] % 2 == 0]
        ea_ob = [p for p in even_a if p[1] % 2 == 1]
        ea_eb = [p for p in even_a if p[1] % 2 == 0]
        if len(oa_ob) != 1 or len(ea_ob) != 1:
            raise NoValidArrangement(f"{fs.pairs}: odd-beta counts {len(oa_ob)}/{len(ea_ob)}")
        ordered = oa_ob + oa_eb + ea_ob + ea_eb
        a3, a4 = ordered[2][0], ordered[3][0]
        label = (
            CaseLabel.CASE2_CONGRUENT_MOD4
            if (a3 - a4) % 4 == 0
            else CaseLabel.CASE2_INCONGRUENT_MOD4
        )
    else:
        raise NoValidArrangement(f"{fs.pairs}: {len(odd_a)} odd alphas")

    if not _layout_ok(ordered, label):
        raise NoValidArrangement(f"{fs.pairs}: layout check failed for {label}")
    return FourSquares(tuple(ordered)), label
