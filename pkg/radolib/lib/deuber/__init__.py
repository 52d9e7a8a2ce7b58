from .MpcParams import MpcParams, Generator
from .FormIndex import FormIndex
from .MpcSet import MpcSet
from .Deuber import paramsFromWitness, mpcElements, enumerateForms, evalForm, extractSolution, findMpcInSet, isMpcSet, iterMpcSets, mpcSetsWithin
