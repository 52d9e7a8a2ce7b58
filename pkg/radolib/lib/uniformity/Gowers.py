"""Gowers uniformity norms on Z/NZ and the linear-configuration average Lambda_Psi.

The U^k average is evaluated through multiplicative derivatives
Delta_h f(x) = f(x+h) * conj(f(x)); the innermost level collapses to |E f|^2, so
the cost is N^{k+1} spread over numpy vector operations. The outermost shift h_1
is the unit of parallel work: each shift yields one partial average and the
partials are reduced in a fixed order, so the result does not depend on the
number of threads."""
import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Sequence

import numpy

from ..Errors import SearchSpaceTooLarge
from ..linalg import rank
from .CountReport import CountReport
from .LinearSystemMap import LinearSystemMap
from .ModFunction import ModFunction

LOG = logging.getLogger(__name__)

GOWERS_ORDER_CAP = 4
LAMBDA_VARIABLE_CAP = 3
LAMBDA_MODULUS_CAP = 101
IMAGINARY_TOLERANCE = 1e-9


def _shiftIndex(N: int) -> numpy.ndarray:
    """index[h, x] = (x + h) mod N."""
    return (numpy.arange(N)[None, :] + numpy.arange(N)[:, None]) % N


def _cubeAverage(F: numpy.ndarray, k: int) -> numpy.ndarray:
    """Row-wise E_{x,h_1..h_k} Delta_{h_1}...Delta_{h_k} f(x) for the functions in the rows of F."""
    if k == 1:
        means = F.mean(axis=1)
        return means * numpy.conj(means)
    M, N = F.shape
    derivatives = F[:, _shiftIndex(N)] * numpy.conj(F)[:, None, :]
    return _cubeAverage(derivatives.reshape(M * N, N), k - 1).reshape(M, N).mean(axis=1)


def _shiftAverage(values: numpy.ndarray, h: int, k: int) -> complex:
    derivative = numpy.roll(values, -h) * numpy.conj(values)
    return complex(_cubeAverage(derivative[None, :], k - 1)[0])


def gowersNorm(f: ModFunction, k: int, threads: int = 1) -> float:
    """||f||_{U^k(Z/NZ)} for 1 <= k <= 4."""
    if k < 1 or k > GOWERS_ORDER_CAP:
        raise ValueError(f'Gowers norm order must lie in [1, {GOWERS_ORDER_CAP}], got {k}')
    values = f.Values
    if k == 1:
        total = complex(_cubeAverage(values[None, :], 1)[0])
    else:
        shifts = range(f.Modulus)
        if threads > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                partials = list(pool.map(lambda h: _shiftAverage(values, h, k), shifts))
        else:
            partials = [_shiftAverage(values, h, k) for h in shifts]
        total = complex(numpy.mean(numpy.array(partials, dtype=numpy.complex128)))

    assert abs(total.imag) <= IMAGINARY_TOLERANCE, f'U^{k} average must be real, imaginary residue {total.imag}'
    return max(total.real, 0.0) ** (1.0 / 2**k)


def gowersNormNaive(f: ModFunction, k: int) -> float:
    """Direct evaluation of the defining 2^k-fold average; N^{k+1} python iterations."""
    N = f.Modulus
    cube = list(itertools.product((0, 1), repeat=k))
    total = 0j
    for x, *h in itertools.product(range(N), repeat=k + 1):
        term = 1 + 0j
        for omega in cube:
            value = f(x + sum(w * hi for w, hi in zip(omega, h)))
            term *= value.conjugate() if sum(omega) % 2 else value
        total += term
    total /= N ** (k + 1)
    return max(total.real, 0.0) ** (1.0 / 2**k)


def fourierU2(f: ModFunction) -> float:
    """Sum of |f^(xi)|^4 with f^(xi) = E_x f(x) e^{-2 pi i x xi / N}, by an explicit O(N^2) transform.

    Equals ||f||_{U^2}^4."""
    N = f.Modulus
    grid = numpy.arange(N)
    transform = numpy.exp(-2j * numpy.pi * numpy.outer(grid, grid) / N)
    coefficients = transform @ f.Values / N
    return float(numpy.sum(numpy.abs(coefficients) ** 4))


def lambdaCount(Psi: LinearSystemMap, fs: Sequence[ModFunction], N: int) -> complex:
    """Lambda_Psi(f) = E_{x in [N]^d} prod_i f_i(psi_i(x) mod N), by exhaustive enumeration of the box."""
    if len(fs) != Psi.l:
        raise ValueError(f'Expected {Psi.l} functions, got {len(fs)}')
    for f in fs:
        if f.Modulus != N:
            raise ValueError(f'Modulus mismatch: function on Z/{f.Modulus}Z, expected Z/{N}Z')
    if Psi.d > LAMBDA_VARIABLE_CAP or N > LAMBDA_MODULUS_CAP:
        raise SearchSpaceTooLarge(
            f'search space too large: Lambda enumeration is capped at d <= {LAMBDA_VARIABLE_CAP} and N <= {LAMBDA_MODULUS_CAP}')

    box = numpy.indices((N,) * Psi.d) + 1
    product = numpy.ones((N,) * Psi.d, dtype=numpy.complex128)
    for form, f in zip(Psi.Forms, fs):
        residues = numpy.tensordot(numpy.array(form, dtype=numpy.int64), box, axes=1) % N
        product *= f.Values[residues]
    return complex(numpy.mean(product))


def pairwiseIndependent(Psi: LinearSystemMap) -> bool:
    """No relation z psi_i + w psi_j = 0 with (z, w) != 0, for every pair i != j."""
    return all(rank([Psi.Forms[i], Psi.Forms[j]]) == 2 for i, j in itertools.combinations(range(Psi.l), 2))


def isPrime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % q for q in range(2, int(n**0.5) + 1))


def gvnReport(Psi: LinearSystemMap, fs: Sequence[ModFunction], k: int, N: int, threads: int = 1) -> CountReport:
    """Check of |Lambda_Psi(f)| <= min_i ||f_i||_{U^k}; records the slack, never asserts it."""
    if not pairwiseIndependent(Psi):
        raise ValueError('Linear system forms must be pairwise independent')
    if not isPrime(N):
        raise ValueError(f'Modulus must be prime, got {N}')
    if not all(f.isBounded() for f in fs):
        raise ValueError('All functions must be bounded by 1')

    value = lambdaCount(Psi, fs, N)
    norms = tuple(gowersNorm(f, k, threads) for f in fs)
    report = CountReport(value, norms, min(norms) - abs(value), k, N)
    if report.violated:
        LOG.warning('von Neumann bound violated: N=%d k=%d |Lambda|=%.12g min norm=%.12g', N, k, abs(value), min(norms))
    return report
