import itertools
import os
import random

deltaNorm = 1e-09
deltaLambda = 1e-12
randomSamples = 200


def dataPath(name: str) -> str:
    return os.path.join(os.path.dirname(__file__), name)


def randomMatrix(rng: random.Random, rows: int, cols: int, bound: int = 3):
    return [[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)]


def randomNonzeroRow(rng: random.Random, cols: int, bound: int = 3):
    return [rng.choice([v for v in range(-bound, bound + 1) if v]) for _ in range(cols)]


def validGenerator(rng: random.Random, m: int, p: int, spread: int = 5):
    """s_j = p * (s_{j+1} + ... + s_m) + random, so every row of the set stays positive."""
    values = [rng.randint(1, spread)]
    for _ in range(m):
        values.insert(0, p * sum(values) + rng.randint(1, spread))
    return tuple(values)


def naiveColourable(solutions, N: int, r: int) -> bool:
    """Whether some r-colouring of [N] leaves every given solution non-monochromatic, by trying all r^N colourings."""
    relevant = [set(x) for x in solutions if max(x) <= N]
    for colouring in itertools.product(range(r), repeat=N):
        if all(len({colouring[v - 1] for v in x}) > 1 for x in relevant):
            return True
    return False


def naiveCoverable(solutions, N: int, r: int) -> bool:
    """As naiveColourable, but colour classes are arbitrary subsets covering [N] and may overlap."""
    relevant = [set(x) for x in solutions if max(x) <= N]
    for classes in itertools.product(range(2**N), repeat=r):
        union = 0
        for c in classes:
            union |= c
        if union != 2**N - 1:
            continue
        if all(not all(c >> (v - 1) & 1 for v in x) for c in classes for x in relevant):
            return True
    return False
