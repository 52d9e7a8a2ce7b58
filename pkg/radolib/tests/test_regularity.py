import itertools
import random
import unittest
from fractions import Fraction

import radolib
from utils import *


def schurWitness():
    partition = radolib.ColumnPartition(((0, 2), (1,)))
    alpha = radolib.RationalMatrix(((0, 1), (0, 0), (0, 0)))
    return radolib.Witness(partition, alpha)


class VerifyWitness(unittest.TestCase):
    def test_schur(self):
        self.assertTrue(radolib.verifyWitness(radolib.schurMatrix(), schurWitness()))

    def test_wrongFirstBlock(self):
        W = radolib.Witness(radolib.ColumnPartition(((0, 1), (2,))), radolib.RationalMatrix.zeros(3, 2))
        self.assertFalse(radolib.verifyWitness(radolib.schurMatrix(), W))

    def test_singleBlock(self):
        W = radolib.Witness(radolib.ColumnPartition(((0, 1, 2),)), radolib.RationalMatrix.zeros(3, 1))
        self.assertTrue(radolib.verifyWitness(radolib.IntegerMatrix(((2, -1, -1),)), W))

    def test_supportConvention(self):
        alpha = radolib.RationalMatrix(((0, 1), (0, 5), (0, 0)))
        W = radolib.Witness(radolib.ColumnPartition(((0, 2), (1,))), alpha)
        self.assertFalse(radolib.verifyWitness(radolib.schurMatrix(), W))

    def test_malformed(self):
        with self.assertRaises(radolib.MalformedWitnessError):
            radolib.verifyWitness(radolib.IntegerMatrix(((1, 1, -1, 0),)), schurWitness())
        W = radolib.Witness(radolib.ColumnPartition(((0, 2), (1,))), radolib.RationalMatrix.zeros(3, 3))
        with self.assertRaises(radolib.MalformedWitnessError):
            radolib.verifyWitness(radolib.schurMatrix(), W)

    def test_partitionValidation(self):
        with self.assertRaises(ValueError):
            radolib.ColumnPartition(((0, 1), (1, 2)))
        with self.assertRaises(ValueError):
            radolib.ColumnPartition(((0,), ()))


class FindWitness(unittest.TestCase):
    def test_schur(self):
        W = radolib.findWitness(radolib.schurMatrix())
        self.assertIsNotNone(W)
        self.assertEqual(W.t, 2)
        self.assertEqual(W.Partition.Blocks, ((0, 2), (1,)))
        self.assertEqual(W.Alpha[0, 1], 1)
        self.assertTrue(radolib.verifyWitness(radolib.schurMatrix(), W))

    def test_notRegular(self):
        self.assertIsNone(radolib.findWitness(radolib.IntegerMatrix(((1, 1, 1),))))

    def test_brauer(self):
        A = radolib.readMatrix(dataPath('brauer4.txt'))
        W = radolib.findWitness(A)
        self.assertIsNotNone(W)
        self.assertTrue(radolib.verifyWitness(A, W))

    def test_minimalBlocks(self):
        W = radolib.findWitness(radolib.IntegerMatrix(((3, -3),)))
        self.assertEqual(W.t, 1)
        self.assertEqual(W.Partition.Blocks, ((0, 1),))

    def test_cap(self):
        with self.assertRaises(radolib.SearchSpaceTooLarge):
            radolib.findWitness(radolib.IntegerMatrix(((1,) * 9,)))
        with self.assertRaises(radolib.SearchSpaceTooLarge):
            radolib.isPartitionRegular(radolib.IntegerMatrix(((1, -1, 1),)), cap=2)

    def test_rankReport(self):
        t, claimed, agrees = radolib.findWitness(radolib.schurMatrix()).rankReport()
        self.assertEqual((t, claimed, agrees), (2, 2, True))

    def test_namedSystems(self):
        for name in ('schur', 'gschur:4', 'brauer:4', 'brauer:5', 'ap:3', 'ap:5'):
            self.assertTrue(radolib.isPartitionRegular(radolib.systemByName(name)), name)

    def test_soundness(self):
        rng = random.Random(5)
        for _ in range(randomSamples):
            A = radolib.IntegerMatrix(randomMatrix(rng, rng.randint(1, 2), rng.randint(1, 4)))
            W = radolib.findWitness(A)
            if W is not None:
                self.assertTrue(radolib.verifyWitness(A, W))


class SingleRowOracle(unittest.TestCase):
    def test_examples(self):
        self.assertTrue(radolib.singleRowOracle((1, 1, -1)))
        self.assertFalse(radolib.singleRowOracle((1, 2, 4)))
        self.assertTrue(radolib.singleRowOracle((5, 3, -2, -6)))

    def test_zeroEntry(self):
        with self.assertRaises(ValueError):
            radolib.singleRowOracle((1, 0, -1))

    def test_regularExamples(self):
        self.assertTrue(radolib.isPartitionRegular(radolib.schurMatrix()))
        self.assertFalse(radolib.isPartitionRegular(radolib.IntegerMatrix(((1, 1, 1),))))
        self.assertTrue(radolib.isPartitionRegular(radolib.IntegerMatrix(((3, -3),))))

    def test_exhaustiveAgreement(self):
        entries = [v for v in range(-3, 4) if v]
        count = 0
        for k in range(1, 5):
            for row in itertools.product(entries, repeat=k):
                self.assertEqual(radolib.isPartitionRegular(radolib.IntegerMatrix((row,))), radolib.singleRowOracle(row), row)
                count += 1
        self.assertEqual(count, 6 + 36 + 216 + 1296)


class Symmetries(unittest.TestCase):
    def test_rowOperations(self):
        rng = random.Random(6)
        for _ in range(randomSamples):
            A = radolib.IntegerMatrix(randomMatrix(rng, 2, rng.randint(2, 4)))
            regular = radolib.isPartitionRegular(A)
            self.assertEqual(radolib.isPartitionRegular(A.permuteRows((1, 0))), regular)
            self.assertEqual(radolib.isPartitionRegular(A.scaleRow(rng.randrange(2), rng.choice((-3, -2, 2, 5)))), regular)

    def test_columnPermutation(self):
        rng = random.Random(7)
        checked = 0
        while checked < 50:
            d = rng.randint(2, 4)
            A = radolib.IntegerMatrix(randomMatrix(rng, rng.randint(1, 2), d))
            W = radolib.findWitness(A)
            if W is None:
                continue
            permutation = list(range(d))
            rng.shuffle(permutation)
            order = [permutation.index(i) for i in range(d)]
            permuted = A.permuteColumns(order)
            self.assertTrue(radolib.verifyWitness(permuted, W.relabel(permutation)))
            checked += 1

    def test_fractionalWitness(self):
        A = radolib.IntegerMatrix(((2, -2, 3),))
        W = radolib.findWitness(A)
        self.assertTrue(radolib.verifyWitness(A, W))
        self.assertEqual(W.Alpha[0, 1], Fraction(3, 2))


if __name__ == '__main__':
    unittest.main()
