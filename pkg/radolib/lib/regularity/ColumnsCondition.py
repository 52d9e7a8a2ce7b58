import itertools
import logging
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from ..Errors import MalformedWitnessError, SearchSpaceTooLarge
from ..linalg import IntegerMatrix, RationalMatrix, solveCombination
from .Witness import ColumnPartition, Witness

LOG = logging.getLogger(__name__)

WITNESS_COLUMN_CAP = 8


def _columnSum(columns: Sequence[tuple[int, ...]], block: Sequence[int], rows: int) -> tuple[int, ...]:
    return tuple(sum(columns[i][r] for i in block) for r in range(rows))


def verifyWitness(A: IntegerMatrix, W: Witness) -> bool:
    """True iff W certifies the columns condition for A, exactly.

    Checks the block sums against alpha and the support convention
    (alpha[i][j] = 0 for columns i in block j or later)."""
    d, t = A.Cols, W.t
    if not W.Partition.covers(d):
        raise MalformedWitnessError(f'Partition does not cover exactly the {d} columns')
    if W.Alpha.Rows != d or W.Alpha.Cols != t:
        raise MalformedWitnessError(f'Alpha must be {d}x{t}, got {W.Alpha.Rows}x{W.Alpha.Cols}')

    columns = A.columns()
    earlier: list[int] = []
    for j, block in enumerate(W.Partition.Blocks):
        later = {i for b in W.Partition.Blocks[j:] for i in b}
        if any(W.Alpha[i, j] != 0 for i in later):
            return False
        lhs = _columnSum(columns, block, A.Rows)
        rhs = tuple(sum((W.Alpha[i, j] * columns[i][r] for i in earlier), Fraction(0)) for r in range(A.Rows))
        if lhs != rhs:
            return False
        earlier.extend(block)
    return True


def _subsetsInOrder(remaining: Sequence[int]) -> list[tuple[int, ...]]:
    subsets = [c for size in range(1, len(remaining) + 1) for c in itertools.combinations(remaining, size)]
    return sorted(subsets)


def _orderedPartitions(A: IntegerMatrix, t: int) -> Iterator[tuple[tuple[tuple[int, ...], ...], list[list[Fraction]]]]:
    """Valid ordered partitions into exactly t blocks, in lexicographic block order, with their relations."""
    columns = A.columns()
    rows = A.Rows

    def extend(blocks: tuple, remaining: tuple[int, ...], earlier: list[int], relations: list):
        j = len(blocks)
        if j == t:
            if not remaining:
                yield blocks, relations
            return
        candidates = [remaining] if j == t - 1 else _subsetsInOrder(remaining)
        for block in candidates:
            if len(remaining) - len(block) < t - j - 1:
                continue
            target = _columnSum(columns, block, rows)
            if j == 0:
                if any(target):
                    continue
                coefficients: Optional[list[Fraction]] = []
            else:
                coefficients = solveCombination([columns[i] for i in earlier], target)
                if coefficients is None:
                    continue
            rest = tuple(i for i in remaining if i not in block)
            yield from extend(blocks + (block,), rest, earlier + list(block), relations + [coefficients])

    yield from extend((), tuple(range(A.Cols)), [], [])


def findWitness(A: IntegerMatrix, cap: int = WITNESS_COLUMN_CAP) -> Optional[Witness]:
    """Witness of the columns condition with minimal t, lexicographically least blocks; None if A is not partition regular."""
    d = A.Cols
    if d > cap:
        raise SearchSpaceTooLarge(f'search space too large: {d} columns exceeds the cap of {cap}')

    for t in range(1, d + 1):
        for blocks, relations in _orderedPartitions(A, t):
            alpha = [[Fraction(0)] * t for _ in range(d)]
            earlier: list[int] = []
            for j, block in enumerate(blocks):
                for i, value in zip(earlier, relations[j]):
                    alpha[i][j] = value
                earlier.extend(block)
            witness = Witness(ColumnPartition(blocks), RationalMatrix(tuple(tuple(row) for row in alpha), t))
            LOG.debug('witness found for %s with t=%d: %s', A, t, blocks)
            return witness
    LOG.debug('no witness for %s', A)
    return None


def isPartitionRegular(A: IntegerMatrix, cap: int = WITNESS_COLUMN_CAP) -> bool:
    """Rado's theorem: A is partition regular iff it satisfies the columns condition."""
    return findWitness(A, cap) is not None


def singleRowOracle(row: Sequence[int]) -> bool:
    """Single equation criterion: some non-empty subset of the coefficients sums to zero.

    Direct subset enumeration, independent of findWitness."""
    if any(a == 0 for a in row):
        raise ValueError('Single row criterion needs nonzero coefficients')
    return any(
        sum(subset) == 0
        for size in range(1, len(row) + 1)
        for subset in itertools.combinations(row, size))
