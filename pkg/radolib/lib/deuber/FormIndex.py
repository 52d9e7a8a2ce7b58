from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class FormIndex:
    """Element of D_{p,c;t}: coefficients i_0..i_{t-1} bounded by p, leading coefficient c at position t, zero after.

    Defines the linear form L_i(s) = i_0 s_0 + ... + i_{t-1} s_{t-1} + c s_t."""
    Level: int
    Coeffs: tuple[int, ...]
    Lead: int

    def __post_init__(self) -> None:
        object.__setattr__(self, 'Coeffs', tuple(int(v) for v in self.Coeffs))
        if len(self.Coeffs) != self.Level:
            raise ValueError(f'Level {self.Level} form needs {self.Level} coefficients, got {len(self.Coeffs)}')

    @staticmethod
    def star(c: int, t: int) -> "FormIndex":
        """i*(c,t), the unique form of level t with support of size one."""
        return FormIndex(t, (0,) * t, c)

    def vector(self, length: int) -> tuple[int, ...]:
        """Dense coefficient vector of the given length."""
        if length <= self.Level:
            raise ValueError(f'Length {length} cannot hold a level {self.Level} form')
        return self.Coeffs + (self.Lead,) + (0,) * (length - self.Level - 1)

    def __call__(self, s: Sequence[int]) -> int:
        return sum(i * v for i, v in zip(self.Coeffs, s)) + self.Lead * s[self.Level]

    def __str__(self) -> str:
        return '(' + ','.join(str(v) for v in self.Coeffs + (self.Lead,)) + f')@{self.Level}'
