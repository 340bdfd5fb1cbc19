"""Independent oracles used by the tests.

These deliberately avoid the library's algorithms: the determinant oracle
uses rational Gaussian elimination instead of fraction-free elimination,
prime splitting enumerates Y directly, and the Laurent helpers multiply
polynomials term by term.
"""

from fractions import Fraction
from math import isqrt


def fraction_det(matrix) -> int:
    """Exact determinant via Gaussian elimination over Fractions."""
    n = len(matrix)
    m = [[Fraction(x) for x in row] for row in matrix]
    det = Fraction(1)
    for k in range(n):
        pivot_row = next((r for r in range(k, n) if m[r][k] != 0), None)
        if pivot_row is None:
            return 0
        if pivot_row != k:
            m[k], m[pivot_row] = m[pivot_row], m[k]
            det = -det
        det *= m[k][k]
        inv = 1 / m[k][k]
        for r in range(k + 1, n):
            factor = m[r][k] * inv
            if factor:
                m[r] = [a - factor * b for a, b in zip(m[r], m[k])]
    assert det.denominator == 1
    return int(det)


def brute_split(p: int) -> tuple[int, int]:
    """Smallest Y > 0 with p + 2*Y**2 a perfect square (minimal totally
    positive solution of X^2 - 2Y^2 = p)."""
    y = 1
    while True:
        xx = p + 2 * y * y
        x = isqrt(xx)
        if x * x == xx:
            return x, y
        y += 1


def laurent_self_product(poly) -> dict[int, int]:
    """f(x) * f(1/x) as a dict exponent -> coefficient."""
    out: dict[int, int] = {}
    for i, ci in enumerate(poly):
        for j, cj in enumerate(poly):
            if ci and cj:
                out[i - j] = out.get(i - j, 0) + ci * cj
    return {k: v for k, v in out.items() if v}


def chebyshev_expand(c) -> dict[int, int]:
    """sum c[j] * (x + 1/x)**j as a Laurent dict."""
    out: dict[int, int] = {}
    power: dict[int, int] = {0: 1}  # (x + 1/x)**0
    for j, coeff in enumerate(c):
        if coeff:
            for e, v in power.items():
                out[e] = out.get(e, 0) + coeff * v
        nxt: dict[int, int] = {}
        for e, v in power.items():
            nxt[e + 1] = nxt.get(e + 1, 0) + v
            nxt[e - 1] = nxt.get(e - 1, 0) + v
        power = nxt
    return {k: v for k, v in out.items() if v}


def norm_at_omega_float(poly) -> float:
    """|f(w)|**2 with w = exp(2*pi*i/8), in floating point."""
    import cmath

    w = cmath.exp(2j * cmath.pi / 8)
    val = sum(c * w**j for j, c in enumerate(poly))
    return abs(val) ** 2
