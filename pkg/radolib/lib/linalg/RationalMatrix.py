from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class RationalMatrix:
    """Matrix of exact rationals. Holds witness coefficients and row-reduced forms.

    Fraction keeps every entry canonical: positive denominator, reduced, zero as 0/1.
    A matrix may have zero rows (e.g. alpha of an empty column set) but then Cols is given explicitly."""
    Entries: tuple[tuple[Fraction, ...], ...]
    Cols: int = -1

    def __post_init__(self) -> None:
        rows = tuple(tuple(Fraction(v) for v in row) for row in self.Entries)
        cols = len(rows[0]) if rows else self.Cols
        if cols < 0:
            raise ValueError('Column count of an empty matrix must be given')
        if any(len(row) != cols for row in rows):
            raise ValueError('Matrix rows must all have the same length')
        object.__setattr__(self, 'Entries', rows)
        object.__setattr__(self, 'Cols', cols)

    @staticmethod
    def zeros(rows: int, cols: int) -> "RationalMatrix":
        return RationalMatrix(tuple((Fraction(0),) * cols for _ in range(rows)), cols)

    @property
    def Rows(self) -> int:
        return len(self.Entries)

    def column(self, index: int) -> tuple[Fraction, ...]:
        return tuple(row[index] for row in self.Entries)

    def scaled(self, factor) -> "RationalMatrix":
        return RationalMatrix(tuple(tuple(v * factor for v in row) for row in self.Entries), self.Cols)

    def isZero(self) -> bool:
        return all(v == 0 for row in self.Entries for v in row)

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        row, col = index
        return self.Entries[row][col]
