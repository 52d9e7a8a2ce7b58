from dataclasses import dataclass
from typing import Sequence

from ..linalg import RationalMatrix, rank


@dataclass(frozen=True)
class ColumnPartition:
    """Ordered partition I_1,...,I_t of the column indices (0-based internally).

    Block order matters: the columns condition is order-sensitive."""
    Blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        blocks = tuple(tuple(sorted(int(i) for i in block)) for block in self.Blocks)
        if len(blocks) < 1:
            raise ValueError('Partition needs at least one block')
        if any(len(block) == 0 for block in blocks):
            raise ValueError('Partition blocks must be non-empty')
        flat = [i for block in blocks for i in block]
        if len(flat) != len(set(flat)):
            raise ValueError('Partition blocks must be disjoint')
        object.__setattr__(self, 'Blocks', blocks)

    @property
    def t(self) -> int:
        return len(self.Blocks)

    @property
    def Columns(self) -> int:
        return sum(len(block) for block in self.Blocks)

    def covers(self, d: int) -> bool:
        return sorted(i for block in self.Blocks for i in block) == list(range(d))

    def blockOf(self, column: int) -> int:
        """0-based index of the block containing the column."""
        for index, block in enumerate(self.Blocks):
            if column in block:
                return index
        raise KeyError(column)

    def relabel(self, permutation: Sequence[int]) -> "ColumnPartition":
        """Maps old column i to new column permutation[i]."""
        return ColumnPartition(tuple(tuple(permutation[i] for i in block) for block in self.Blocks))


@dataclass(frozen=True)
class Witness:
    """Certificate for the columns condition: an ordered partition plus alpha (d rows, t columns).

    Column j of alpha expresses the column sum of block j (0-based) through the
    columns of the earlier blocks; column 0 is therefore all-zero, and alpha[i][j]
    is zero whenever column i lies in block j or later."""
    Partition: ColumnPartition
    Alpha: RationalMatrix

    @property
    def t(self) -> int:
        return self.Partition.t

    def alphaRank(self) -> int:
        return rank(self.Alpha)

    def rankReport(self) -> tuple[int, int, bool]:
        """(t, 1 + rk alpha, whether they agree). Disagreement is reported, never asserted."""
        claimed = 1 + self.alphaRank()
        return self.t, claimed, claimed == self.t

    def relabel(self, permutation: Sequence[int]) -> "Witness":
        """Witness for the matrix whose column permutation[i] is old column i."""
        d = self.Alpha.Rows
        rows: list = [None] * d
        for old in range(d):
            rows[permutation[old]] = self.Alpha.Entries[old]
        return Witness(self.Partition.relabel(permutation), RationalMatrix(tuple(rows), self.Alpha.Cols))
