"""Fraction-free linear algebra over exact integers.

Recurrence guessing needs the right kernel of matrices whose entries are
sequence terms times powers of the index: a few columns, huge integer
entries.  Bareiss one-step elimination keeps every intermediate value an
exact integer minor of the input, avoiding the coefficient blowup of naive
rational elimination.  Every internal division is checked to be exact so a
violated invariant fails loudly instead of corrupting the kernel.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

__all__ = ["bareiss_echelon", "integer_nullspace"]

Matrix = list[list[int]]


def bareiss_echelon(rows: Matrix) -> tuple[Matrix, list[int]]:
    """Row echelon form by fraction-free elimination.

    Returns the nonzero echelon rows and the pivot column indices, one per
    returned row.  The input is not modified.
    """
    m = [list(row) for row in rows]
    if not m:
        return [], []
    width = len(m[0])
    if any(len(row) != width for row in m):
        raise ValueError("ragged matrix")
    pivot_cols: list[int] = []
    prev_pivot = 1
    rank = 0
    for col in range(width):
        pivot_row = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        pivot = m[rank][col]
        for i in range(rank + 1, len(m)):
            factor = m[i][col]
            for j in range(col + 1, width):
                numerator = pivot * m[i][j] - factor * m[rank][j]
                quotient, leftover = divmod(numerator, prev_pivot)
                if leftover:
                    raise ArithmeticError("Bareiss division was not exact")
                m[i][j] = quotient
            m[i][col] = 0
        pivot_cols.append(col)
        prev_pivot = pivot
        rank += 1
        if rank == len(m):
            break
    return m[:rank], pivot_cols


def _primitive(vector: list[Fraction]) -> list[int]:
    """Clear denominators, divide by the gcd, make the first nonzero entry positive."""
    common_den = lcm(*(v.denominator for v in vector))
    ints = [int(v * common_den) for v in vector]
    common = gcd(*ints)
    if common:
        ints = [v // common for v in ints]
    first = next((v for v in ints if v != 0), 0)
    if first < 0:
        ints = [-v for v in ints]
    return ints


def integer_nullspace(rows: Matrix) -> list[list[int]]:
    """Basis of the right kernel {v : rows @ v = 0} as primitive integer vectors.

    One basis vector per free column, in ascending free-column order, so the
    result is deterministic.
    """
    if not rows:
        raise ValueError("nullspace of a matrix with no rows is the whole space; refusing")
    width = len(rows[0])
    echelon, pivot_cols = bareiss_echelon(rows)
    free_cols = [c for c in range(width) if c not in pivot_cols]
    basis: list[list[int]] = []
    for free in free_cols:
        v = [Fraction(0)] * width
        v[free] = Fraction(1)
        for t in range(len(pivot_cols) - 1, -1, -1):
            pc = pivot_cols[t]
            acc = Fraction(0)
            for j in range(pc + 1, width):
                if v[j]:
                    acc += v[j] * echelon[t][j]
            v[pc] = -acc / echelon[t][pc]
        basis.append(_primitive(v))
    return basis
