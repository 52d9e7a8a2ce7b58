from dataclasses import dataclass
from typing import Sequence

from ..deuber import FormIndex


@dataclass(frozen=True)
class LinearSystemMap:
    """Homomorphism Psi: Z^d -> Z^l given by l integer forms psi_i (the rows)."""
    Forms: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        forms = tuple(tuple(int(v) for v in form) for form in self.Forms)
        if len(forms) < 1 or len(forms[0]) < 1:
            raise ValueError('Linear system needs at least one form in at least one variable')
        if any(len(form) != len(forms[0]) for form in forms):
            raise ValueError('All forms must have the same number of variables')
        if any(not any(form) for form in forms):
            raise ValueError('Linear system must not contain an all-zero form')
        object.__setattr__(self, 'Forms', forms)

    @property
    def l(self) -> int:
        return len(self.Forms)

    @property
    def d(self) -> int:
        return len(self.Forms[0])

    def __call__(self, x: Sequence[int]) -> tuple[int, ...]:
        return tuple(sum(a * v for a, v in zip(form, x)) for form in self.Forms)

    @staticmethod
    def schur() -> "LinearSystemMap":
        """(x, y) -> (x, y, x+y)."""
        return LinearSystemMap(((1, 0), (0, 1), (1, 1)))

    @staticmethod
    def fromForms(forms: Sequence[FormIndex], variables: int) -> "LinearSystemMap":
        """The map s -> (L_i(s))_i for forms of D_{m,p,c}."""
        return LinearSystemMap(tuple(form.vector(variables) for form in forms))
