"""Dense tropical matrices, tropical determinants and genericity tests.

Rows, columns and all public indices are 1-based, matching the usual
combinatorial notation; storage is a plain tuple of tuples.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

from .errors import CapabilityError, ShapeError
from .semiring import INF, TVal, tadd, tmul, tsum, tval


@dataclass(frozen=True)
class TropicalMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[TVal, ...], ...]

    @classmethod
    def make(cls, data: Iterable[Iterable]) -> "TropicalMatrix":
        rows = tuple(tuple(tval(x) for x in row) for row in data)
        if not rows or not rows[0]:
            raise ShapeError("matrix dimensions must be at least 1x1")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ShapeError("ragged rows in matrix literal")
        return cls(len(rows), width, rows)

    @classmethod
    def identity(cls, k: int) -> "TropicalMatrix":
        """Min-tropical unit: zero diagonal, infinity elsewhere."""
        return cls.make(
            [[0 if i == j else INF for j in range(k)] for i in range(k)]
        )

    def entry(self, i: int, j: int) -> TVal:
        """Entry at 1-based position (i, j)."""
        return self.entries[i - 1][j - 1]

    def row(self, i: int) -> tuple[TVal, ...]:
        return self.entries[i - 1]

    def col(self, j: int) -> tuple[TVal, ...]:
        return tuple(r[j - 1] for r in self.entries)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def oplus(self, other: "TropicalMatrix") -> "TropicalMatrix":
        """Entrywise minimum."""
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeError("entrywise minimum needs equal shapes")
        return TropicalMatrix(
            self.rows,
            self.cols,
            tuple(
                tuple(tadd(a, b) for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            ),
        )

    def odot(self, other: "TropicalMatrix") -> "TropicalMatrix":
        return trop_mat_mul(self, other)

    def transpose(self) -> "TropicalMatrix":
        return TropicalMatrix(
            self.cols, self.rows, tuple(zip(*self.entries))
        )

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "TropicalMatrix":
        """Submatrix by 1-based row and column index sequences."""
        return TropicalMatrix(
            len(rows),
            len(cols),
            tuple(tuple(self.entries[i - 1][j - 1] for j in cols) for i in rows),
        )


def trop_mat_mul(a: TropicalMatrix, b: TropicalMatrix) -> TropicalMatrix:
    """Min-plus matrix product: entry (i,j) = min over l of a[i,l] + b[l,j]."""
    if a.cols != b.rows:
        raise ShapeError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    bt = b.transpose().entries
    out = tuple(
        tuple(
            tsum(tmul(x, y) for x, y in zip(row, col) if x is not INF)
            for col in bt
        )
        for row in a.entries
    )
    return TropicalMatrix(a.rows, b.cols, out)


@dataclass(frozen=True)
class TropicalDetResult:
    value: TVal
    optimal_permutations: frozenset[tuple[int, ...]]
    vanishes: bool


def trop_det(a: TropicalMatrix, *, perm_bound: int = 9) -> TropicalDetResult:
    """Tropical determinant: minimum over permutations of the diagonal sum.

    The result lists every attaining permutation (as a tuple sigma with
    sigma[i-1] the image of row i); it *vanishes* if the value is INF or
    the minimum is attained at least twice.
    """
    if not a.is_square:
        raise ShapeError("tropical determinant needs a square matrix")
    k = a.rows
    if k > perm_bound:
        raise CapabilityError(
            f"tropical determinant by enumeration is limited to k <= {perm_bound}, got {k}"
        )
    best: TVal = INF
    attaining: list[tuple[int, ...]] = []
    for perm in itertools.permutations(range(k)):
        w: TVal = tval(0)
        for i, j in enumerate(perm):
            w = tmul(w, a.entries[i][j])
            if w is INF:
                break
        if w < best:
            best = w
            attaining = [tuple(j + 1 for j in perm)]
        elif not (best < w):  # w == best, including both INF
            attaining.append(tuple(j + 1 for j in perm))
    opt = frozenset(attaining)
    vanishes = best is INF or len(opt) >= 2
    return TropicalDetResult(best, opt, vanishes)


def is_generic(
    v: TropicalMatrix,
    *,
    submatrix_bound: int = 200_000,
    perm_bound: int = 9,
) -> tuple[bool, tuple[tuple[int, ...], tuple[int, ...]] | None]:
    """Whether no square submatrix has a vanishing tropical determinant.

    Returns ``(True, None)`` or ``(False, (rows, cols))`` with a witness
    submatrix.  Enumerates all square submatrices; a guard raises
    CapabilityError when there are more than ``submatrix_bound`` of them.
    """
    d, n = v.rows, v.cols
    total = sum(comb(d, k) * comb(n, k) for k in range(1, min(d, n) + 1))
    if total > submatrix_bound:
        raise CapabilityError(
            f"genericity test would enumerate {total} submatrices (bound {submatrix_bound})"
        )
    for k in range(1, min(d, n) + 1):
        for rows in itertools.combinations(range(1, d + 1), k):
            for cols in itertools.combinations(range(1, n + 1), k):
                res = trop_det(v.submatrix(rows, cols), perm_bound=perm_bound)
                if res.vanishes:
                    return False, (rows, cols)
    return True, None
