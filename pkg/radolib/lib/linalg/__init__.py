from .IntegerMatrix import IntegerMatrix
from .RationalMatrix import RationalMatrix
from .Elimination import rowReduce, rank, solveCombination, kernelBasis, lcmDenominators
