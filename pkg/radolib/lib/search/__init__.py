from .Colouring import Colouring, SolutionTable, ResultKind, SearchStats, RadoResult
from .Solutions import kernelSolutions, findMonoSolution, MODES
from .RadoSearch import radoNumber, schurFactorialBound, mpcThreshold
