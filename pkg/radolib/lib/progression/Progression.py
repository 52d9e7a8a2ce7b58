from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rational = Union[Fraction, int]


def _checkDelta(delta: Rational) -> Fraction:
    delta = Fraction(delta)
    if not 0 < delta <= 1:
        raise ValueError(f'delta must lie in (0, 1], got {delta}')
    return delta


def _floorTimes(delta: Fraction, n: int) -> int:
    return (delta.numerator * n) // delta.denominator


@dataclass(frozen=True)
class Progression:
    """Odd length arithmetic progression x_P + d_P*{-N_P,...,N_P}.

    The progression is a formal indexed family of 2*N_P+1 terms: with d_P = 0 the
    terms collide but the length stays 2*N_P+1. Averages over P count multiplicity."""
    Centre: int
    Difference: int
    Radius: int

    def __post_init__(self) -> None:
        if self.Difference < 0 or self.Radius < 0:
            raise ValueError('Difference and radius must be non-negative')

    @staticmethod
    def parse(text: str) -> "Progression":
        parts = text.split(',')
        if len(parts) != 3:
            raise ValueError(f'Expected "centre,difference,radius", got "{text}"')
        return Progression(*(int(part) for part in parts))

    @staticmethod
    def interval(low: int, high: int) -> "Progression":
        """{low, ..., high}; the interval must have odd length."""
        if high < low or (high - low) % 2:
            raise ValueError(f'Interval [{low}, {high}] does not have odd length')
        return Progression((low + high) // 2, 1, (high - low) // 2)

    @property
    def length(self) -> int:
        """Formal length |P| = 2*N_P + 1."""
        return 2 * self.Radius + 1

    @property
    def isCentred(self) -> bool:
        return self.Centre == 0

    def elements(self) -> tuple[int, ...]:
        """The indexed family in index order, with multiplicity."""
        return tuple(self.Centre + self.Difference * i for i in range(-self.Radius, self.Radius + 1))

    def elementSet(self) -> frozenset[int]:
        return frozenset(self.elements())

    def contains(self, value: int) -> bool:
        offset = value - self.Centre
        if self.Difference == 0:
            return offset == 0
        return offset % self.Difference == 0 and abs(offset) // self.Difference <= self.Radius

    def issubset(self, other: "Progression") -> bool:
        """Element-set containment, decided from the end points and the step."""
        first, last = self.Centre - self.Difference * self.Radius, self.Centre + self.Difference * self.Radius
        if not (other.contains(first) and other.contains(last)):
            return False
        if first == last:
            return True
        return other.Difference != 0 and self.Difference % other.Difference == 0

    def sumset(self, other: "Progression") -> Union["Progression", frozenset[int]]:
        """P + P' as an element set; a progression when the differences agree."""
        if self.Difference == other.Difference:
            return Progression(self.Centre + other.Centre, self.Difference, self.Radius + other.Radius)
        return frozenset(a + b for a in self.elementSet() for b in other.elementSet())

    def fracDilate(self, delta: Rational) -> "Progression":
        """I_delta(P) = d_P*{-floor(delta N_P),...,floor(delta N_P)}, always centred."""
        return Progression(0, self.Difference, _floorTimes(_checkDelta(delta), self.Radius))

    def interior(self, delta: Rational) -> "Progression":
        """Int_delta(P): same centre and difference, radius N_P - floor(delta N_P)."""
        return Progression(self.Centre, self.Difference, self.Radius - _floorTimes(_checkDelta(delta), self.Radius))

    def closure(self, delta: Rational) -> "Progression":
        """P + I_delta(P): same centre and difference, radius N_P + floor(delta N_P)."""
        return Progression(self.Centre, self.Difference, self.Radius + _floorTimes(_checkDelta(delta), self.Radius))

    def translate(self, x: int) -> "Progression":
        return Progression(self.Centre + x, self.Difference, self.Radius)

    def dilate(self, c: int) -> "Progression":
        """c*P for a positive integer c."""
        if c < 1:
            raise ValueError(f'Dilation factor must be a positive integer, got {c}')
        return Progression(self.Centre * c, self.Difference * c, self.Radius)

    def __str__(self) -> str:
        return f'{self.Centre},{self.Difference},{self.Radius}'
