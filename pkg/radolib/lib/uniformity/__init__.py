from .ModFunction import ModFunction
from .LinearSystemMap import LinearSystemMap
from .CountReport import CountReport, GapReport
from .Gowers import GOWERS_ORDER_CAP, gowersNorm, gowersNormNaive, fourierU2, lambdaCount, pairwiseIndependent, gvnReport, isPrime
from .Counting import qCount, factorizationGap
