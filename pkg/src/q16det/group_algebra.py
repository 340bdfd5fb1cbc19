"""Integer group ring of the order-16 dicyclic group and its determinant.

An element is stored as two blocks of eight integer coefficients: ``a`` for
the powers X**0..X**7 and ``b`` for Y*X**0..Y*X**7.  The group determinant
is det(M) for the 16x16 matrix M[g][h] = coefficient of g * h**-1, computed
exactly by fraction-free elimination (see the kernel modules).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import kernel
from ._cayley import DET_INDEX, INVERSE, MUL_TABLE


@dataclass(frozen=True)
class CayleyTable:
    """Multiplication table and inverse table of the group, by index."""

    table: tuple[tuple[int, ...], ...]
    inverse: tuple[int, ...]

    def product(self, i: int, j: int) -> int:
        return self.table[i][j]


def build_cayley_table() -> CayleyTable:
    """The Cayley table under the fixed index convention
    0..7 = X**j, 8..15 = Y*X**(j-8)."""
    return CayleyTable(table=MUL_TABLE, inverse=INVERSE)


def _coeff_tuple(coeffs: Iterable[int], name: str) -> tuple[int, ...]:
    t = tuple(int(c) for c in coeffs)
    if len(t) != 8:
        raise ValueError(f"{name} must have exactly 8 coefficients, got {len(t)}")
    return t


@dataclass(frozen=True)
class GroupRingElement:
    """sum(a[j] * X**j) + sum(b[j] * Y*X**j) with integer coefficients."""

    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", _coeff_tuple(self.a, "a"))
        object.__setattr__(self, "b", _coeff_tuple(self.b, "b"))

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int]) -> "GroupRingElement":
        """Build from a flat length-16 vector (a0..a7, b0..b7)."""
        if len(coeffs) != 16:
            raise ValueError(f"expected 16 coefficients, got {len(coeffs)}")
        return cls(tuple(coeffs[:8]), tuple(coeffs[8:]))

    @classmethod
    def zero(cls) -> "GroupRingElement":
        return cls((0,) * 8, (0,) * 8)

    @classmethod
    def identity(cls) -> "GroupRingElement":
        return cls((1,) + (0,) * 7, (0,) * 8)

    def coeffs(self) -> tuple[int, ...]:
        return self.a + self.b

    def is_zero(self) -> bool:
        return not any(self.a) and not any(self.b)


def determinant_matrix(e: GroupRingElement) -> list[list[int]]:
    """The 16x16 matrix M[g][h] = coefficient of g * h**-1 in e."""
    c = e.coeffs()
    return [[c[i] for i in row] for row in DET_INDEX]


def direct_determinant(e: GroupRingElement) -> int:
    """Exact group determinant straight from the 16x16 matrix definition."""
    return kernel.group_det(e.a, e.b)


def substitute_neg_x(e: GroupRingElement) -> GroupRingElement:
    """Replace x by -x in both blocks: a[j] -> (-1)**j a[j], same for b."""
    return GroupRingElement(
        tuple(c if j % 2 == 0 else -c for j, c in enumerate(e.a)),
        tuple(c if j % 2 == 0 else -c for j, c in enumerate(e.b)),
    )


def swap_components(e: GroupRingElement) -> GroupRingElement:
    """Exchange the X-block and the Y-block (swap f and g)."""
    return GroupRingElement(e.b, e.a)


def convolve(e1: GroupRingElement, e2: GroupRingElement) -> GroupRingElement:
    """Group-ring product (convolution over the group).

    Test oracle only: the determinant is multiplicative over this product,
    which gives an independent consistency check.  Not part of the
    certificate path.
    """
    c1 = e1.coeffs()
    c2 = e2.coeffs()
    out = [0] * 16
    for h in range(16):
        x = c1[h]
        if x == 0:
            continue
        row = MUL_TABLE[h]
        for k in range(16):
            y = c2[k]
            if y != 0:
                out[row[k]] += x * y
    return GroupRingElement.from_coeffs(out)
