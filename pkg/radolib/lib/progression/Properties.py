"""Executable basic properties of fractional dilates, interiors and closures.

checkProgressionProperties draws random (P, delta, delta', c, x) instances and
checks each property exactly; containments are decided analytically with
Progression.issubset, which the tests cross-check against explicit element sets."""
import logging
import random
from fractions import Fraction
from typing import Callable, Union

from .Progression import Progression

LOG = logging.getLogger(__name__)

PROPERTY_NAMES = (
    'symmetry', 'monotone-radius', 'monotone-progression', 'translation', 'dilation',
    'subadditivity', 'composition', 'interior', 'closure', 'invariance')


def shiftedAverageDefect(P: Progression, f: Callable[[int], Union[int, Fraction, complex, float]], y: int) -> Union[Fraction, float]:
    """|E_{x in P} f(x+y) - E_{x in P} f(x)| over the formal family of P.

    Exact (a Fraction) when f takes integer or rational values."""
    family = P.elements()
    shifted = sum(f(x + y) for x in family)
    base = sum(f(x) for x in family)
    difference = shifted - base
    if isinstance(difference, (int, Fraction)):
        return Fraction(abs(difference), P.length)
    return abs(difference) / P.length


def _randomDelta(rng: random.Random) -> Fraction:
    denominator = rng.randint(1, 40)
    return Fraction(rng.randint(1, denominator), denominator)


def _randomProgression(rng: random.Random, maxRadius: int) -> Progression:
    difference = 0 if rng.random() < 0.05 else rng.randint(1, 12)
    return Progression(rng.randint(-10**4, 10**4), difference, rng.randint(0, maxRadius))


def _checkInstance(P: Progression, delta: Fraction, deltaPrime: Fraction, c: int, x: int, rng: random.Random) -> dict[str, bool]:
    dilate = P.fracDilate(delta)
    small, large = sorted((delta, deltaPrime))
    shrunk = P.interior(deltaPrime)
    grown = P.closure(deltaPrime)
    interior = P.interior(delta)
    closure = P.closure(delta)

    results = {
        'symmetry': dilate.isCentred and dilate.length * 3 >= delta * P.length,
        'monotone-radius': P.fracDilate(small).issubset(P.fracDilate(large)),
        'monotone-progression': shrunk.fracDilate(delta).issubset(dilate) and dilate.issubset(grown.fracDilate(delta)),
        'translation': P.translate(x).fracDilate(delta) == dilate,
        'dilation': P.dilate(c).fracDilate(delta) == dilate.dilate(c),
        'composition': P.fracDilate(deltaPrime).fracDilate(delta).issubset(P.fracDilate(delta * deltaPrime)),
        'interior': interior.sumset(dilate).issubset(P) and interior.length >= (1 - delta) * P.length,
        'closure': P.sumset(dilate) == closure and closure.length <= (1 + delta) * P.length,
    }

    if delta + deltaPrime <= 1:
        total = dilate.sumset(P.fracDilate(deltaPrime))
        results['subadditivity'] = total.issubset(P.fracDilate(delta + deltaPrime))
    else:
        results['subadditivity'] = True

    values: dict[int, int] = {}

    def sign(v: int) -> int:
        if v not in values:
            values[v] = rng.choice((-1, 1))
        return values[v]

    shifts = dilate.elements()
    y = shifts[rng.randrange(len(shifts))]
    results['invariance'] = shiftedAverageDefect(P, sign, y) <= 2 * delta
    return results


def checkProgressionProperties(seed: int = 0, samples: int = 1000, maxRadius: int = 1000) -> dict[str, tuple[int, int]]:
    """Runs the property suite; returns property name -> (passed, failed)."""
    rng = random.Random(seed)
    tally = {name: [0, 0] for name in PROPERTY_NAMES}
    for _ in range(samples):
        P = _randomProgression(rng, maxRadius)
        delta, deltaPrime = _randomDelta(rng), _randomDelta(rng)
        c, x = rng.randint(1, 9), rng.randint(-10**4, 10**4)
        for name, passed in _checkInstance(P, delta, deltaPrime, c, x, rng).items():
            tally[name][0 if passed else 1] += 1
            if not passed:
                LOG.warning('property %s fails for P=%s delta=%s delta\'=%s c=%d x=%d', name, P, delta, deltaPrime, c, x)
    LOG.debug('progression suite seed=%d samples=%d done', seed, samples)
    return {name: (passed, failed) for name, (passed, failed) in tally.items()}
