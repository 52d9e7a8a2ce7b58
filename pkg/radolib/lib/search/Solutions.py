import itertools
import logging
import math
from typing import Optional

from ..Errors import SearchSpaceTooLarge
from ..linalg import IntegerMatrix, rowReduce
from .Colouring import Colouring, SolutionTable

LOG = logging.getLogger(__name__)

MODES = ('all', 'nonconstant', 'injective')
SOLUTION_COST_CAP = 10**8


def _accepts(mode: str, x: tuple[int, ...]) -> bool:
    if mode == 'nonconstant':
        return len(set(x)) > 1
    if mode == 'injective':
        return len(set(x)) == len(x)
    return True


def kernelSolutions(A: IntegerMatrix, N: int, mode: str = 'all', costCap: int = SOLUTION_COST_CAP) -> SolutionTable:
    """All x in [N]^d with Ax = 0, filtered by mode, grouped by max coordinate.

    The free variables of the reduced form range over [N]; each pivot variable is
    then an integer combination divided by the row's common denominator."""
    if mode not in MODES:
        raise ValueError(f'Unknown mode "{mode}", expected one of {", ".join(MODES)}')
    reduced, _, pivotCols = rowReduce(A)
    free = [col for col in range(A.Cols) if col not in pivotCols]
    cost = N ** len(free) if free else 1
    if cost > costCap:
        raise SearchSpaceTooLarge(f'search space too large: {cost} free-variable assignments exceeds the cap of {costCap}')

    relations = []
    for row, pivot in enumerate(pivotCols):
        scale = math.lcm(1, *(reduced[row, col].denominator for col in free))
        relations.append((pivot, scale, [(col, int(-reduced[row, col] * scale)) for col in free]))

    byMax: dict[int, list[tuple[int, ...]]] = {}
    if free and N >= 1:
        for values in itertools.product(range(1, N + 1), repeat=len(free)):
            x = [0] * A.Cols
            for col, v in zip(free, values):
                x[col] = v
            for pivot, scale, terms in relations:
                numerator = sum(coefficient * x[col] for col, coefficient in terms)
                if numerator % scale:
                    break
                value = numerator // scale
                if not 1 <= value <= N:
                    break
                x[pivot] = value
            else:
                solution = tuple(x)
                if _accepts(mode, solution):
                    byMax.setdefault(max(solution), []).append(solution)

    table = SolutionTable(N, {n: tuple(sorted(group)) for n, group in sorted(byMax.items())})
    LOG.debug('kernel table for %s up to %d (%s): %d solutions', A, N, mode, len(table))
    return table


def findMonoSolution(A: IntegerMatrix, colouring: Colouring, mode: str = 'all') -> Optional[tuple[int, tuple[int, ...]]]:
    """First monochromatic kernel vector (by max coordinate, then lexicographically) with its colour, or None."""
    table = kernelSolutions(A, colouring.N, mode)
    for x in table.vectors():
        if colouring.isMonochromatic(x):
            return colouring.colourOf(x[0]), x
    return None
