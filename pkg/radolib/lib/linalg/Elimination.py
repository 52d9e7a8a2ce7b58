"""Exact Gaussian elimination over the rationals.

Pivoting is deterministic: the first nonzero entry in column order, searched from
the current pivot row downwards. Free variables are always set to zero, so every
solution handed out is canonical and reproducible."""
import math
from fractions import Fraction
from typing import Optional, Sequence, Union

from .IntegerMatrix import IntegerMatrix
from .RationalMatrix import RationalMatrix

Vector = tuple[Fraction, ...]


def _rows(M: Union[RationalMatrix, IntegerMatrix, Sequence[Sequence]]) -> tuple[list[list[Fraction]], int]:
    if isinstance(M, (RationalMatrix, IntegerMatrix)):
        return [[Fraction(v) for v in row] for row in M.Entries], M.Cols
    rows = [[Fraction(v) for v in row] for row in M]
    return rows, (len(rows[0]) if rows else 0)


def _reduce(rows: list[list[Fraction]], cols: int) -> tuple[list[list[Fraction]], int, list[int]]:
    pivotCols: list[int] = []
    rank = 0
    for col in range(cols):
        if rank == len(rows):
            break
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        lead = rows[rank][col]
        if lead != 1:
            rows[rank] = [v / lead for v in rows[rank]]
        for r in range(len(rows)):
            factor = rows[r][col]
            if r != rank and factor != 0:
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
        pivotCols.append(col)
        rank += 1
    return rows, rank, pivotCols


def rowReduce(M: Union[RationalMatrix, IntegerMatrix]) -> tuple[RationalMatrix, int, list[int]]:
    """Reduced row-echelon form of M.

    Returns the reduced matrix (same shape, zero rows at the bottom), the rank and the pivot columns."""
    rows, cols = _rows(M)
    reduced, rank, pivotCols = _reduce(rows, cols)
    return RationalMatrix(tuple(tuple(row) for row in reduced), cols), rank, pivotCols


def rank(M: Union[RationalMatrix, IntegerMatrix, Sequence[Sequence]]) -> int:
    rows, cols = _rows(M)
    return _reduce(rows, cols)[1]


def solveCombination(vectors: Sequence[Sequence], target: Sequence) -> Optional[list[Fraction]]:
    """Coefficients c with sum(c[l] * vectors[l]) == target, or None if target is outside the rational span.

    Vectors are columns; free coefficients are zero."""
    length = len(target)
    if any(len(v) != length for v in vectors):
        raise ValueError('All vectors must have the same length as the target')
    if not vectors:
        return [] if all(v == 0 for v in target) else None

    augmented = [[Fraction(v[i]) for v in vectors] + [Fraction(target[i])] for i in range(length)]
    reduced, _, pivotCols = _reduce(augmented, len(vectors) + 1)
    if pivotCols and pivotCols[-1] == len(vectors):
        return None

    solution = [Fraction(0)] * len(vectors)
    for row, col in enumerate(pivotCols):
        solution[col] = reduced[row][-1]
    return solution


def kernelBasis(A: Union[IntegerMatrix, RationalMatrix]) -> list[Vector]:
    """Basis of ker A, one vector per free column, with that free variable set to 1."""
    reduced, _, pivotCols = rowReduce(A)
    pivotRow = {col: row for row, col in enumerate(pivotCols)}
    basis: list[Vector] = []
    for free in range(A.Cols):
        if free in pivotRow:
            continue
        vector = [Fraction(0)] * A.Cols
        vector[free] = Fraction(1)
        for col, row in pivotRow.items():
            vector[col] = -reduced[row, free]
        basis.append(tuple(vector))
    return basis


def lcmDenominators(M: RationalMatrix) -> int:
    """Least common multiple of all entry denominators; 1 for an integral or empty matrix."""
    return math.lcm(1, *(v.denominator for row in M.Entries for v in row))
