"""Deuber's (m,p,c)-machinery: parameters from a witness, set generation, the linear forms and solution extraction.

An (m,p,c)-set with generator s = (s_0,...,s_m) is the union over rows j = 0..m of
{c*s_{m-j} + i_{m-j+1}*s_{m-j+1} + ... + i_m*s_m : |i| <= p}. The forms of D_{m,p,c}
index the same rows with the generator in reversed order."""
import itertools
from typing import Iterable, Iterator, Optional, Sequence, Union

from ..Errors import FormsOverlapError, InvalidGeneratorError, MalformedWitnessError, SearchSpaceTooLarge
from ..linalg import IntegerMatrix, lcmDenominators, rank
from ..regularity import Witness, verifyWitness
from .FormIndex import FormIndex
from .MpcParams import Generator, MpcParams
from .MpcSet import MpcSet

GeneratorLike = Union[Generator, Sequence[int]]

MPC_SET_ENUMERATION_CAP = 10**7


def _generator(s: GeneratorLike) -> Generator:
    return s if isinstance(s, Generator) else Generator(tuple(s))


def paramsFromWitness(W: Witness) -> MpcParams:
    """(1 + rk alpha, max |c alpha|, c) with c the lcm of the denominators of alpha; p is floored at 1."""
    c = lcmDenominators(W.Alpha)
    p = max([1] + [abs(int(v * c)) for row in W.Alpha.Entries for v in row])
    return MpcParams(1 + rank(W.Alpha), p, c)


def _rowValues(params: MpcParams, lead: int, tail: Sequence[int]) -> Iterator[int]:
    """c*lead + i_1*tail_1 + ... with every |i| <= p."""
    for coeffs in itertools.product(range(-params.p, params.p + 1), repeat=len(tail)):
        yield params.c * lead + sum(i * v for i, v in zip(coeffs, tail))


def _row(params: MpcParams, s: Sequence[int], j: int) -> Iterator[int]:
    return _rowValues(params, s[params.m - j], s[params.m - j + 1:])


def mpcElements(params: MpcParams, s: GeneratorLike) -> MpcSet:
    """Exact element set of the (m,p,c)-set spanned by s; Valid is False if any element is below 1."""
    generator = _generator(s)
    if len(generator) != params.m + 1:
        raise InvalidGeneratorError(f'Generator of length {len(generator)} does not fit m={params.m}')
    elements = {v for j in range(params.m + 1) for v in _row(params, generator.Values, j)}
    return MpcSet(tuple(sorted(elements)), generator, params, min(elements) >= 1)


def enumerateForms(params: MpcParams) -> list[FormIndex]:
    """All of D_{m,p,c}, ordered by level then lexicographically by coefficients."""
    if params.c <= params.p:
        raise FormsOverlapError(f'Forms of different levels overlap unless c > p (got p={params.p}, c={params.c})')
    return [
        FormIndex(t, coeffs, params.c)
        for t in range(params.m + 1)
        for coeffs in itertools.product(range(-params.p, params.p + 1), repeat=t)]


def evalForm(i: FormIndex, s: GeneratorLike) -> int:
    values = s.Values if isinstance(s, Generator) else tuple(s)
    if len(values) <= i.Level:
        raise ValueError(f'Generator of length {len(values)} cannot evaluate a level {i.Level} form')
    return i(values)


def extractSolution(A: IntegerMatrix, W: Witness, s: GeneratorLike) -> tuple[int, ...]:
    """A solution x of Ax = 0 with every coordinate in the (m,p,c)-set spanned by s.

    m is taken from the generator (it may exceed t-1), p and c from the witness.
    With u_k = s_{m+1-k}, a column in block I_k gets
    x = c*u_{t+1-k} - c * sum_{l=1}^{t-k} alpha[i][t-l] * u_l."""
    if not verifyWitness(A, W):
        raise MalformedWitnessError('Witness does not certify the columns condition for this matrix')
    generator = _generator(s)
    base = paramsFromWitness(W)
    t = W.t
    if generator.m < t - 1:
        raise InvalidGeneratorError(f'Generator needs at least {t} entries for a witness with {t} blocks')
    params = MpcParams(generator.m, base.p, base.c)
    spanned = mpcElements(params, generator)
    if not spanned.Valid:
        raise InvalidGeneratorError(f'Generator {generator} spans a set with non-positive elements')

    m, c = generator.m, params.c
    u = {k: generator[m + 1 - k] for k in range(1, t + 1)}
    x = []
    for i in range(A.Cols):
        k = W.Partition.blockOf(i) + 1
        value = c * u[t + 1 - k] - c * sum(W.Alpha[i, t - l] * u[l] for l in range(1, t - k + 1))
        assert value.denominator == 1, 'Scaled witness coefficients must be integral'
        x.append(int(value))

    assert A.annihilates(x), 'Extracted vector must lie in the kernel'
    assert all(v in spanned for v in x), 'Extracted vector must lie in the (m,p,c)-set'
    return tuple(x)


def _candidates(X: set[int], params: MpcParams, bound: int, domains: Optional[Sequence[Iterable[int]]]) -> list[list[int]]:
    base = sorted(v // params.c for v in X if v >= params.c and v % params.c == 0 and v // params.c <= bound)
    if domains is None:
        return [base] * (params.m + 1)
    if len(domains) != params.m + 1:
        raise ValueError(f'Expected {params.m + 1} generator domains, got {len(domains)}')
    allowed = [set(domain) for domain in domains]
    return [[v for v in base if v in domain] for domain in allowed]


def _rowInside(params: MpcParams, lead: int, tail: Sequence[int], X: set[int]) -> bool:
    return all(v >= 1 and v in X for v in _rowValues(params, lead, tail))


def findMpcInSet(
        X: Iterable[int], params: MpcParams, bound: int,
        domains: Optional[Sequence[Iterable[int]]] = None) -> Optional[Generator]:
    """Lexicographically first generator with entries <= bound whose (m,p,c)-set lies inside X.

    Every s_j satisfies c*s_j in X (the zero-coefficient element of its row), which
    bounds the candidates. The row led by s_j only involves s_j..s_m, so suffixes are
    grown from s_m backwards and cut off as soon as their newest row leaves X.
    `domains` optionally restricts position j to a given set."""
    X = set(X)
    if not X:
        return None
    candidates = _candidates(X, params, bound, domains)
    suffixes: list[tuple[int, ...]] = [()]
    for j in range(params.m, 0, -1):
        suffixes = [(v,) + tail for v in candidates[j] for tail in suffixes if _rowInside(params, v, tail, X)]
        if not suffixes:
            return None
    suffixes.sort()
    for v in candidates[0]:
        for tail in suffixes:
            if _rowInside(params, v, tail, X):
                return Generator((v,) + tail)
    return None


def isMpcSet(X: Iterable[int], params: MpcParams, bound: int) -> Optional[Generator]:
    """Generator with entries <= bound spanning exactly X, or None."""
    X = set(X)
    if not X:
        return None
    for s in itertools.product(*_candidates(X, params, bound, None)):
        spanned = mpcElements(params, s)
        if spanned.Valid and set(spanned.Elements) == X:
            return spanned.Generator
    return None


def iterMpcSets(params: MpcParams, N: int, cap: int = MPC_SET_ENUMERATION_CAP) -> Iterator[frozenset[int]]:
    """Element set of every generator whose (m,p,c)-set lies inside [N], built backwards from s_m.

    Distinct generators may span the same set, so sets can repeat. Nothing is kept
    between steps; SearchSpaceTooLarge is raised once more than cap generators are visited.
    Row j lies in [1, N] iff c*s_{m-j} - p*(s_{m-j+1}+...+s_m) >= 1 and c*s_{m-j} + p*(...) <= N."""
    m, p, c = params.m, params.p, params.c
    visited = 0

    def extend(suffix: list[int]) -> Iterator[frozenset[int]]:
        nonlocal visited
        if len(suffix) == m + 1:
            yield frozenset(v for j in range(m + 1) for v in _row(params, suffix, j))
            return
        tail = p * sum(suffix)
        low = max(1, (tail + 1 + c - 1) // c)
        high = (N - tail) // c
        for v in range(low, high + 1):
            visited += 1
            if visited > cap:
                raise SearchSpaceTooLarge(f'search space too large: more than {cap} generators for ({params}) within [{N}]')
            yield from extend([v] + suffix)

    yield from extend([])


def mpcSetsWithin(params: MpcParams, N: int, cap: int = MPC_SET_ENUMERATION_CAP) -> list[frozenset[int]]:
    """Every distinct (m,p,c)-set inside [N], ordered by largest element then elementwise."""
    return sorted(set(iterMpcSets(params, N, cap)), key=lambda S: (max(S), sorted(S)))
