import random
import unittest
from fractions import Fraction

import radolib
from utils import *


class RowReduce(unittest.TestCase):
    def test_singleRow(self):
        reduced, rank, pivots = radolib.rowReduce(radolib.IntegerMatrix(((1, 1, -1),)))
        self.assertEqual(rank, 1)
        self.assertEqual(pivots, [0])
        self.assertEqual(reduced.Entries, ((1, 1, -1),))

    def test_zeroMatrix(self):
        reduced, rank, pivots = radolib.rowReduce(radolib.RationalMatrix(((0, 0), (0, 0))))
        self.assertEqual(rank, 0)
        self.assertEqual(pivots, [])
        self.assertTrue(reduced.isZero())

    def test_brauerRank(self):
        _, rank, pivots = radolib.rowReduce(radolib.IntegerMatrix(((1, 1, -1, 0), (2, 1, 0, -1))))
        self.assertEqual(rank, 2)
        self.assertEqual(pivots, [0, 1])

    def test_exactEntries(self):
        reduced, _, _ = radolib.rowReduce(radolib.IntegerMatrix(((3, 1), (0, 0))))
        self.assertEqual(reduced[0, 1], Fraction(1, 3))

    def test_idempotentAndBounded(self):
        rng = random.Random(1)
        for _ in range(randomSamples):
            rows, cols = rng.randint(1, 4), rng.randint(1, 5)
            M = radolib.IntegerMatrix(randomMatrix(rng, rows, cols))
            reduced, rank, pivots = radolib.rowReduce(M)
            self.assertEqual(radolib.rowReduce(reduced), (reduced, rank, pivots))
            self.assertLessEqual(rank, min(rows, cols))
            order = list(range(rows))
            rng.shuffle(order)
            self.assertEqual(radolib.rank(M.permuteRows(order)), rank)

    def test_scaleInvariance(self):
        rng = random.Random(2)
        for _ in range(randomSamples):
            entries = randomMatrix(rng, rng.randint(1, 3), rng.randint(1, 4))
            factor = rng.randint(2, 9)
            scaled = [[v * factor for v in row] for row in entries]
            self.assertEqual(radolib.rowReduce(radolib.IntegerMatrix(entries)), radolib.rowReduce(radolib.IntegerMatrix(scaled)))

    def test_largeEntries(self):
        M = radolib.IntegerMatrix(((10**40, 1), (1, 10**40)))
        self.assertEqual(radolib.rank(M), 2)


class SolveCombination(unittest.TestCase):
    def test_onedimensional(self):
        coefficients = radolib.solveCombination([(1,), (-1,)], (1,))
        self.assertIsNotNone(coefficients)
        self.assertEqual(coefficients[0] * 1 + coefficients[1] * -1, 1)
        self.assertEqual(coefficients, [1, 0])

    def test_empty(self):
        self.assertEqual(radolib.solveCombination([], (0, 0)), [])
        self.assertIsNone(radolib.solveCombination([], (1, 0)))

    def test_orthogonal(self):
        self.assertIsNone(radolib.solveCombination([(1, 0)], (0, 1)))

    def test_lengthMismatch(self):
        with self.assertRaises(ValueError):
            radolib.solveCombination([(1, 0), (1,)], (0, 1))

    def test_randomRecombination(self):
        rng = random.Random(3)
        for _ in range(randomSamples):
            length, count = rng.randint(1, 4), rng.randint(0, 4)
            vectors = [tuple(rng.randint(-3, 3) for _ in range(length)) for _ in range(count)]
            target = tuple(rng.randint(-3, 3) for _ in range(length))
            coefficients = radolib.solveCombination(vectors, target)
            if coefficients is None:
                self.assertGreater(radolib.rank(vectors + [target]), radolib.rank(vectors) if vectors else 0)
            else:
                combined = tuple(sum((c * v[i] for c, v in zip(coefficients, vectors)), Fraction(0)) for i in range(length))
                self.assertEqual(combined, target)


class KernelBasis(unittest.TestCase):
    def test_schur(self):
        A = radolib.IntegerMatrix(((1, 1, -1),))
        basis = radolib.kernelBasis(A)
        self.assertEqual(len(basis), 2)
        for v in basis:
            self.assertTrue(A.annihilates(v))

    def test_identity(self):
        self.assertEqual(radolib.kernelBasis(radolib.IntegerMatrix(((1, 0), (0, 1)))), [])

    def test_zero(self):
        self.assertEqual(radolib.kernelBasis(radolib.IntegerMatrix(((0,),))), [(1,)])

    def test_random(self):
        rng = random.Random(4)
        for _ in range(randomSamples):
            A = radolib.IntegerMatrix(randomMatrix(rng, rng.randint(1, 3), rng.randint(1, 5)))
            basis = radolib.kernelBasis(A)
            self.assertEqual(len(basis), A.Cols - radolib.rank(A))
            if basis:
                self.assertEqual(radolib.rank(basis), len(basis))
            for v in basis:
                self.assertTrue(A.annihilates(v))


class LcmDenominators(unittest.TestCase):
    def test_values(self):
        self.assertEqual(radolib.lcmDenominators(radolib.RationalMatrix(((Fraction(1, 2), Fraction(1, 3)),))), 6)
        self.assertEqual(radolib.lcmDenominators(radolib.RationalMatrix(((1, 2), (3, 4)))), 1)
        self.assertEqual(radolib.lcmDenominators(radolib.RationalMatrix(((Fraction(3, 4),), (Fraction(5, 6),)))), 12)

    def test_scalingIntegralises(self):
        M = radolib.RationalMatrix(((Fraction(2, 9), Fraction(-7, 6)), (Fraction(5, 4), 0)))
        scaled = M.scaled(radolib.lcmDenominators(M))
        self.assertTrue(all(v.denominator == 1 for row in scaled.Entries for v in row))

    def test_empty(self):
        self.assertEqual(radolib.lcmDenominators(radolib.RationalMatrix((), 3)), 1)


if __name__ == '__main__':
    unittest.main()
