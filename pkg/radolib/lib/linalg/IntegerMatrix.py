from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class IntegerMatrix:
    """Integer matrix A (k x d) whose kernel defines the configurations.

    Entries are python ints, so there is no overflow at any magnitude.
    Rows may be given as any nested sequence, they are stored as tuples."""
    Entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(v) for v in row) for row in self.Entries)
        if len(rows) < 1 or len(rows[0]) < 1:
            raise ValueError('Matrix must have at least one row and one column')
        if any(len(row) != len(rows[0]) for row in rows):
            raise ValueError('Matrix rows must all have the same length')
        object.__setattr__(self, 'Entries', rows)

    @property
    def Rows(self) -> int:
        return len(self.Entries)

    @property
    def Cols(self) -> int:
        return len(self.Entries[0])

    def column(self, index: int) -> tuple[int, ...]:
        return tuple(row[index] for row in self.Entries)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(i) for i in range(self.Cols)]

    def multiply(self, vector: Sequence) -> tuple:
        """A·x with exact arithmetic; works for int and Fraction entries."""
        if len(vector) != self.Cols:
            raise ValueError(f'Vector of length {len(vector)} does not fit {self.Cols} columns')
        return tuple(sum(a * x for a, x in zip(row, vector)) for row in self.Entries)

    def annihilates(self, vector: Sequence) -> bool:
        return all(v == 0 for v in self.multiply(vector))

    def permuteRows(self, order: Sequence[int]) -> "IntegerMatrix":
        return IntegerMatrix(tuple(self.Entries[i] for i in order))

    def permuteColumns(self, order: Sequence[int]) -> "IntegerMatrix":
        """Column i of the result is column order[i] of this matrix."""
        return IntegerMatrix(tuple(tuple(row[j] for j in order) for row in self.Entries))

    def scaleRow(self, index: int, factor: int) -> "IntegerMatrix":
        if factor == 0:
            raise ValueError('Row scaling factor must be nonzero')
        return IntegerMatrix(tuple(
            tuple(v * factor for v in row) if i == index else row
            for i, row in enumerate(self.Entries)))
