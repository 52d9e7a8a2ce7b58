from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Optional, Sequence


@dataclass(frozen=True)
class Colouring:
    """Assignment of colours 0..r-1 to [N] = {1,...,N}; Assignment[n-1] is the colour of n.

    Colour classes may be empty. N = 0 is the empty colouring of the empty set."""
    N: int
    r: int
    Assignment: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, 'Assignment', tuple(int(c) for c in self.Assignment))
        if self.N < 0 or self.r < 1:
            raise ValueError('Colouring needs N >= 0 and r >= 1')
        if len(self.Assignment) != self.N:
            raise ValueError(f'Colouring of [{self.N}] needs {self.N} colours, got {len(self.Assignment)}')
        bad = next((c for c in self.Assignment if not 0 <= c < self.r), None)
        if bad is not None:
            raise ValueError(f'Colour {bad} out of range for r={self.r}')

    def colourOf(self, n: int) -> int:
        return self.Assignment[n - 1]

    def classes(self) -> list[set[int]]:
        result: list[set[int]] = [set() for _ in range(self.r)]
        for n, colour in enumerate(self.Assignment, start=1):
            result[colour].add(n)
        return result

    def restrict(self, n: int) -> "Colouring":
        """The colouring of [n] it induces, n <= N."""
        if not 0 <= n <= self.N:
            raise ValueError(f'Cannot restrict a colouring of [{self.N}] to [{n}]')
        return Colouring(n, self.r, self.Assignment[:n])

    def canonical(self) -> "Colouring":
        """Colours relabelled in order of first occurrence."""
        labels: dict[int, int] = {}
        for colour in self.Assignment:
            labels.setdefault(colour, len(labels))
        return Colouring(self.N, self.r, tuple(labels[c] for c in self.Assignment))

    def isMonochromatic(self, values: Sequence[int]) -> bool:
        return len({self.colourOf(v) for v in values}) == 1


@dataclass(frozen=True)
class SolutionTable:
    """Kernel vectors x in [N]^d grouped by their largest coordinate."""
    N: int
    ByMax: dict[int, tuple[tuple[int, ...], ...]] = field(hash=False)

    def vectors(self) -> Iterator[tuple[int, ...]]:
        for n in sorted(self.ByMax):
            yield from self.ByMax[n]

    def __len__(self) -> int:
        return sum(len(group) for group in self.ByMax.values())


class ResultKind(Enum):
    Exact = 'Exact'
    AtLeast = 'AtLeast'


@dataclass(frozen=True)
class SearchStats:
    Nodes: int = 0
    Deepest: int = 0
    Subtrees: int = 1
    Exhausted: bool = True


@dataclass(frozen=True)
class RadoResult:
    """Outcome of a colouring search with a certificate colouring of [Value] (Exact) or of the best length reached (AtLeast).

    For Rado numbers Value is R_A(r) or a lower bound. For (m,p,c)-set thresholds an
    Exact Value is the threshold itself and the certificate colours [Value - 1]."""
    Kind: ResultKind
    Value: int
    Certificate: Colouring
    Stats: Optional[SearchStats] = None

    @property
    def isExact(self) -> bool:
        return self.Kind is ResultKind.Exact
