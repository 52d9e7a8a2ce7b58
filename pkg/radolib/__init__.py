from .lib.Errors import SearchSpaceTooLarge, FormsOverlapError, MalformedWitnessError, InvalidGeneratorError
from .lib.linalg import IntegerMatrix, RationalMatrix, rowReduce, rank, solveCombination, kernelBasis, lcmDenominators
from .lib.regularity import ColumnPartition, Witness, verifyWitness, findWitness, isPartitionRegular, singleRowOracle
from .lib.deuber import MpcParams, Generator, FormIndex, MpcSet, paramsFromWitness, mpcElements, enumerateForms, evalForm, extractSolution, findMpcInSet, isMpcSet, iterMpcSets, mpcSetsWithin
from .lib.progression import Progression, shiftedAverageDefect, checkProgressionProperties
from .lib.uniformity import ModFunction, LinearSystemMap, CountReport, GapReport, gowersNorm, gowersNormNaive, fourierU2, lambdaCount, pairwiseIndependent, gvnReport, qCount, factorizationGap
from .lib.search import Colouring, SolutionTable, ResultKind, SearchStats, RadoResult, kernelSolutions, findMonoSolution, radoNumber, schurFactorialBound, mpcThreshold
from .lib.Systems import schurMatrix, generalizedSchurMatrix, brauerMatrix, progressionMatrix, systemByName
from .lib.Parser import readMatrix, writeMatrix, readWitness, writeWitness, formatWitness, readColouring, writeColouring, readFunction, writeFunction, parseIntegerSet
