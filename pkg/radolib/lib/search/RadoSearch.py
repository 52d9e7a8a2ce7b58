"""Exhaustive colouring search for Rado numbers and monochromatic (m,p,c)-set thresholds.

Both problems reduce to colouring 1, 2, 3, ... in order while no hyperedge (an
element set that must not be monochromatic) becomes monochromatic. Hyperedges are
grouped by their largest element n and stored as bitmasks of their other elements,
so assigning colour k to n is refused as soon as colourMask[k] covers one of them.
Validity is downward closed, hence the deepest prefix reached by an exhausted
search is the largest colourable [N]."""
import itertools
import logging
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from ..Errors import SearchSpaceTooLarge
from ..deuber import MpcParams, findMpcInSet, iterMpcSets
from ..linalg import IntegerMatrix
from .Colouring import Colouring, RadoResult, ResultKind, SearchStats
from .Solutions import findMonoSolution, kernelSolutions

LOG = logging.getLogger(__name__)

SEARCH_MAX_N = 400
SPLIT_DEPTH = 8
SCHUR_BOUND_CAP = 12
HYPEREDGE_ELEMENT_CAP = 4 * 10**6


def _popcount(mask: int) -> int:
    return bin(mask).count('1')


def _edgeTable(hyperedges: Iterable[Iterable[int]], limit: int, elementCap: int = HYPEREDGE_ELEMENT_CAP) -> list[tuple[int, ...]]:
    """table[n] = minimal masks of the other elements of every hyperedge whose maximum is n.

    Hyperedges are consumed one at a time and only distinct masks are kept; their
    total element count may not exceed elementCap."""
    grouped: list[set[int]] = [set() for _ in range(limit + 1)]
    stored = 0
    for edge in hyperedges:
        members = set(edge)
        top = max(members)
        if top > limit:
            continue
        mask = sum(1 << v for v in members if v != top)
        if mask in grouped[top]:
            continue
        stored += len(members)
        if stored > elementCap:
            raise SearchSpaceTooLarge(f'search space too large: hyperedges within [{limit}] exceed {elementCap} stored elements')
        grouped[top].add(mask)

    table = []
    for masks in grouped:
        kept: list[int] = []
        for mask in sorted(masks, key=lambda e: (_popcount(e), e)):
            if not any(k & mask == k for k in kept):
                kept.append(mask)
        table.append(tuple(kept))
    return table


@dataclass
class _Branch:
    """Mutable state of one depth-first walk."""
    Assignment: list[int]
    Masks: list[int]
    Used: int
    Deepest: int = 0
    Best: tuple[int, ...] = ()
    Nodes: int = 0
    Exhausted: bool = True


class _Engine:
    def __init__(self, edges: list[tuple[int, ...]], r: int, limit: int, nodeLimit: Optional[int]) -> None:
        self.Edges = edges
        self.r = r
        self.Limit = limit
        self.NodeLimit = nodeLimit
        self.Budget = itertools.count(1)
        self.Stop = threading.Event()

    def _record(self, branch: _Branch, n: int) -> None:
        if n > branch.Deepest:
            branch.Deepest = n
            branch.Best = tuple(branch.Assignment)

    def _choices(self, branch: _Branch, n: int) -> Iterable[int]:
        edges = self.Edges[n]
        for colour in range(min(branch.Used + 1, self.r)):
            mask = branch.Masks[colour]
            if not any(mask & e == e for e in edges):
                yield colour

    def _push(self, branch: _Branch, n: int, colour: int) -> tuple[int, int]:
        saved = (branch.Masks[colour], branch.Used)
        branch.Masks[colour] |= 1 << n
        branch.Used = max(branch.Used, colour + 1)
        branch.Assignment.append(colour)
        return saved

    def _pop(self, branch: _Branch, colour: int, saved: tuple[int, int]) -> None:
        branch.Assignment.pop()
        branch.Masks[colour], branch.Used = saved

    def descend(self, branch: _Branch) -> None:
        """Depth-first extension of branch.Assignment; [n-1] is coloured on entry."""
        n = len(branch.Assignment) + 1
        self._record(branch, n - 1)
        if n - 1 == self.Limit:
            self.Stop.set()
            return
        if self.Stop.is_set():
            return
        branch.Nodes += 1
        if self.NodeLimit is not None and next(self.Budget) > self.NodeLimit:
            branch.Exhausted = False
            return
        for colour in self._choices(branch, n):
            saved = self._push(branch, n, colour)
            self.descend(branch)
            self._pop(branch, colour, saved)
            if self.Stop.is_set() or not branch.Exhausted:
                return

    def prefixes(self, branch: _Branch, depth: int, out: list[_Branch]) -> None:
        """Collects every valid colouring of [depth] in search order."""
        n = len(branch.Assignment) + 1
        self._record(branch, n - 1)
        if n - 1 == depth:
            out.append(_Branch(list(branch.Assignment), list(branch.Masks), branch.Used))
            return
        branch.Nodes += 1
        for colour in self._choices(branch, n):
            saved = self._push(branch, n, colour)
            self.prefixes(branch, depth, out)
            self._pop(branch, colour, saved)

    def run(self, threads: int) -> tuple[int, tuple[int, ...], SearchStats]:
        root = _Branch([], [0] * self.r, 0)
        if threads <= 1 or self.Limit <= SPLIT_DEPTH:
            self.descend(root)
            return root.Deepest, root.Best, SearchStats(root.Nodes, root.Deepest, 1, root.Exhausted)

        subtrees: list[_Branch] = []
        self.prefixes(root, SPLIT_DEPTH, subtrees)
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for future in [pool.submit(self.descend, branch) for branch in subtrees]:
                future.result()

        deepest, best = root.Deepest, root.Best
        for branch in subtrees:
            if branch.Deepest > deepest:
                deepest, best = branch.Deepest, branch.Best
        nodes = root.Nodes + sum(branch.Nodes for branch in subtrees)
        exhausted = all(branch.Exhausted for branch in subtrees)
        return deepest, best, SearchStats(nodes, deepest, len(subtrees), exhausted)


def _checkArguments(r: int, N_max: int) -> None:
    if r < 1:
        raise ValueError(f'Number of colours must be positive, got {r}')
    if not 1 <= N_max <= SEARCH_MAX_N:
        raise ValueError(f'Search bound must lie in [1, {SEARCH_MAX_N}], got {N_max}')


def _fittingTable(
        hyperedgesWithin: Callable[[int], Iterable[Iterable[int]]],
        N_max: int, elementCap: int) -> tuple[list[tuple[int, ...]], int]:
    """Hyperedge table for the first of N_max, N_max // 2, ... whose hyperedges fit every cap.

    Returns the table with its bound; the bound is 0 when not even [1] fits."""
    limit = N_max
    while limit >= 1:
        try:
            return _edgeTable(hyperedgesWithin(limit), limit, elementCap), limit
        except SearchSpaceTooLarge as e:
            LOG.warning('%s; searching up to %d instead', e, limit // 2)
            limit //= 2
    return [()], 0


def _search(edges: list[tuple[int, ...]], r: int, limit: int, threads: int, nodeLimit: Optional[int]) -> tuple[Colouring, SearchStats]:
    if limit == 0:
        return Colouring(0, r, ()), SearchStats(0, 0, 1, False)
    engine = _Engine(edges, r, limit, nodeLimit)
    deepest, best, stats = engine.run(threads)
    LOG.debug('colouring search r=%d up to %d: deepest=%d nodes=%d subtrees=%d exhausted=%s',
              r, limit, deepest, stats.Nodes, stats.Subtrees, stats.Exhausted)
    return Colouring(deepest, r, best), stats


def radoNumber(
        A: IntegerMatrix, r: int, N_max: int, mode: str = 'all',
        threads: int = 1, nodeLimit: Optional[int] = None,
        elementCap: int = HYPEREDGE_ELEMENT_CAP) -> RadoResult:
    """R_A(r): the largest N with an r-colouring of [N] that has no monochromatic kernel vector.

    Exact(R) only after the search refuted every colouring of [R+1]; AtLeast(N_max)
    when [N_max] itself is colourable, AtLeast(n) when nodeLimit ran out at depth n.
    Solutions past a cap halve the bound until they fit, and the search stops there."""
    _checkArguments(r, N_max)
    edges, limit = _fittingTable(lambda n: (set(x) for x in kernelSolutions(A, n, mode).vectors()), N_max, elementCap)
    certificate, stats = _search(edges, r, limit, threads, nodeLimit)
    assert findMonoSolution(A, certificate, mode) is None, 'Certificate must avoid monochromatic solutions'

    exact = stats.Exhausted and certificate.N < limit
    return RadoResult(ResultKind.Exact if exact else ResultKind.AtLeast, certificate.N, certificate, stats)


def schurFactorialBound(r: int) -> int:
    """floor(e * r!) from the series: for r >= 1 the tail sum_{j>r} r!/j! lies in (0, 1)."""
    if not 0 <= r <= SCHUR_BOUND_CAP:
        raise ValueError(f'Schur factorial bound is capped at r <= {SCHUR_BOUND_CAP}, got {r}')
    if r == 0:
        return 2
    total, term = 0, 1
    for j in range(r, -1, -1):
        total += term
        term *= j
    return total


def mpcThreshold(
        params: MpcParams, r: int, N_max: int,
        threads: int = 1, nodeLimit: Optional[int] = None,
        elementCap: int = HYPEREDGE_ELEMENT_CAP) -> RadoResult:
    """Least N such that every r-colouring of [N] has a colour class containing an (m,p,c)-set.

    Exact(T) carries a certificate colouring [T-1] with no such class. AtLeast(V)
    carries a certificate colouring [V], so the threshold exceeds V. The sets are
    streamed into the search table; past a cap the bound is halved as in radoNumber."""
    _checkArguments(r, N_max)
    edges, limit = _fittingTable(lambda n: iterMpcSets(params, n), N_max, elementCap)
    certificate, stats = _search(edges, r, limit, threads, nodeLimit)
    for colourClass in certificate.classes():
        assert findMpcInSet(colourClass, params, certificate.N) is None, 'Certificate class must not contain an (m,p,c)-set'

    if stats.Exhausted and certificate.N < limit:
        return RadoResult(ResultKind.Exact, certificate.N + 1, certificate, stats)
    return RadoResult(ResultKind.AtLeast, certificate.N, certificate, stats)
