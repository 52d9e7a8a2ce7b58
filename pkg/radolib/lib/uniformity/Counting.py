import logging
import math
from fractions import Fraction
from typing import AbstractSet, Sequence

from ..Errors import SearchSpaceTooLarge
from ..deuber import MpcParams, enumerateForms
from ..progression import Progression
from .CountReport import GapReport

LOG = logging.getLogger(__name__)

Q_COST_CAP = 10**7


def qCount(A: AbstractSet[int], params: MpcParams, Ps: Sequence[Progression], costCap: int = Q_COST_CAP) -> Fraction:
    """Q_{m,p,c}(A; P_0..P_m) = E_{s_j in P_j} prod_{i in D_{m,p,c}} 1_A(L_i(s)), exactly.

    Levels are filled in order: the forms of level t only involve s_0..s_t, so a
    prefix failing at level t is cut off. Averages count progression terms with multiplicity."""
    enumerateForms(params)
    if len(Ps) != params.m + 1:
        raise ValueError(f'Expected {params.m + 1} progressions, got {len(Ps)}')
    total = math.prod(P.length for P in Ps)
    if total > costCap:
        raise SearchSpaceTooLarge(f'search space too large: {total} generator tuples exceeds the cap of {costCap}')

    families = [P.elements() for P in Ps]
    c, p = params.c, params.p

    def count(level: int, partials: frozenset[int]) -> int:
        found = 0
        for s in families[level]:
            if all(a + c * s in A for a in partials):
                if level == params.m:
                    found += 1
                else:
                    found += count(level + 1, frozenset(a + i * s for a in partials for i in range(-p, p + 1)))
        return found

    hits = count(0, frozenset((0,)))
    LOG.debug('Q(%s) = %d/%d', params, hits, total)
    return Fraction(hits, total)


def factorizationGap(A: AbstractSet[int], params: MpcParams, Ps: Sequence[Progression], costCap: int = Q_COST_CAP) -> GapReport:
    """Measures |Q_{m,p,c} - alpha^e Q_{m-1,p,c}| with alpha the density of A on c*P_m.

    A measurement only: no bound is asserted."""
    if params.m < 1:
        raise ValueError('Factorisation gap needs m >= 1')
    if len(Ps) != params.m + 1:
        raise ValueError(f'Expected {params.m + 1} progressions, got {len(Ps)}')

    top = Ps[params.m].dilate(params.c)
    alpha = Fraction(sum(1 for x in top.elements() if x in A), top.length)
    q = qCount(A, params, Ps, costCap)
    qLower = qCount(A, params.lowered(), Ps[:params.m], costCap)
    predicted = alpha ** params.levelCount(params.m) * qLower
    alternative = alpha ** params.formCount() * qLower
    return GapReport(alpha, q, qLower, predicted, abs(q - predicted), alternative, abs(q - alternative))
