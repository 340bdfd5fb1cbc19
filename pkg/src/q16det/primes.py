"""Primality testing and integer factorization at desk scale.

Deterministic Miller-Rabin with the 12-base set that is exact below
3.3 * 10**24; inputs above that bound fall back to the same bases plus extra
fixed witnesses and are flagged as probabilistic.  Composites are split by
trial division followed by Brent's variant of Pollard rho with a
deterministic parameter sequence, so results are reproducible.
"""

from __future__ import annotations

from math import gcd, isqrt

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

#: Below this bound the Miller-Rabin bases above are a proof of primality.
MR_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981

_TRIAL_PRIMES: list[int] = []


def _trial_primes() -> list[int]:
    if not _TRIAL_PRIMES:
        _TRIAL_PRIMES.extend(primes_below(10_000))
    return _TRIAL_PRIMES


def primes_below(limit: int) -> list[int]:
    """All primes < limit by a plain sieve."""
    if limit <= 2:
        return []
    sieve = bytearray([1]) * limit
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(limit - 1) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i in range(limit) if sieve[i]]


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin; exact for n < MR_DETERMINISTIC_BOUND."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    bases = _MR_BASES
    if n >= MR_DETERMINISTIC_BOUND:
        bases = _MR_BASES + (41, 43, 47, 53, 59, 61, 67, 71)
    for a in bases:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primality_is_certain(n: int) -> bool:
    return n < MR_DETERMINISTIC_BOUND


def _pollard_brent(n: int) -> int:
    """A nontrivial factor of odd composite n (deterministic parameters)."""
    if n % 2 == 0:
        return 2
    x0 = 2
    for c in range(1, 1000):
        y, r, q = x0, 1, 1
        g = 1
        x = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += 128
            r *= 2
        if g == n:
            # Backtrack one squaring at a time.
            g = 1
            y = ys
            while g == 1:
                y = (y * y + c) % n
                g = gcd(abs(x - y), n)
        if 1 < g < n:
            return g
    raise RuntimeError(f"pollard rho failed on {n}")  # pragma: no cover


def factor_map(n: int) -> dict[int, int]:
    """Prime -> exponent map of |n| for n != 0 (empty for |n| = 1)."""
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    out: dict[int, int] = {}
    for p in _trial_primes():
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n == 1:
        return out
    stack = [n]
    while stack:
        m = stack.pop()
        if is_probable_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_brent(m)
        stack.append(d)
        stack.append(m // d)
    return out
