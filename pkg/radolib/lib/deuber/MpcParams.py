from dataclasses import dataclass


@dataclass(frozen=True)
class MpcParams:
    """Deuber parameters (m, p, c). m may be 0, p and c are positive."""
    m: int
    p: int
    c: int

    def __post_init__(self) -> None:
        if self.m < 0:
            raise ValueError('m must be non-negative')
        if self.p < 1 or self.c < 1:
            raise ValueError('p and c must be positive')

    def __str__(self) -> str:
        return f'{self.m},{self.p},{self.c}'

    @staticmethod
    def parse(text: str) -> "MpcParams":
        parts = text.split(',')
        if len(parts) != 3:
            raise ValueError(f'Expected "m,p,c", got "{text}"')
        return MpcParams(*(int(part) for part in parts))

    def formCount(self) -> int:
        """|D_{m,p,c}| = sum over levels t <= m of (2p+1)^t."""
        return sum(self.levelCount(t) for t in range(self.m + 1))

    def levelCount(self, t: int) -> int:
        """|D_{p,c;t}| = (2p+1)^t."""
        return (2 * self.p + 1) ** t

    def lowered(self) -> "MpcParams":
        """(m-1, p, c)."""
        return MpcParams(self.m - 1, self.p, self.c)


@dataclass(frozen=True)
class Generator:
    """Generator tuple s = (s_0, ..., s_m) spanning an (m,p,c)-set; all entries positive."""
    Values: tuple[int, ...]

    def __post_init__(self) -> None:
        values = tuple(int(v) for v in self.Values)
        if len(values) < 1:
            raise ValueError('Generator needs at least one entry')
        if any(v < 1 for v in values):
            raise ValueError('Generator entries must be positive')
        object.__setattr__(self, 'Values', values)

    @staticmethod
    def parse(text: str) -> "Generator":
        return Generator(tuple(int(v) for v in text.split(',')))

    @property
    def m(self) -> int:
        return len(self.Values) - 1

    def __len__(self) -> int:
        return len(self.Values)

    def __getitem__(self, index: int) -> int:
        return self.Values[index]

    def __iter__(self):
        return iter(self.Values)

    def reversed(self) -> "Generator":
        return Generator(self.Values[::-1])

    def __str__(self) -> str:
        return ','.join(str(v) for v in self.Values)
