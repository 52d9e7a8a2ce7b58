from .Witness import ColumnPartition, Witness
from .ColumnsCondition import verifyWitness, findWitness, isPartitionRegular, singleRowOracle, WITNESS_COLUMN_CAP
