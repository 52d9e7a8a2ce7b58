from typing import Optional, Sequence, Union

import numpy

BOUNDED_TOLERANCE = 1e-12


class ModFunction:
    """Function Z/NZ -> C stored as a complex vector of length N.

    Values are copied on construction and the copy is made read-only."""
    Modulus: int
    Values: numpy.ndarray

    def __init__(self, values: Union[Sequence[complex], numpy.ndarray]) -> None:
        array = numpy.array(values, dtype=numpy.complex128)
        if array.ndim != 1 or len(array) < 1:
            raise ValueError('Function values must be a non-empty vector')
        array.setflags(write=False)
        self.Values = array
        self.Modulus = len(array)

    def __repr__(self) -> str:
        return f'ModFunction(N={self.Modulus})'

    def __call__(self, x: int) -> complex:
        return complex(self.Values[x % self.Modulus])

    def __add__(self, other: "ModFunction") -> "ModFunction":
        self._checkModulus(other)
        return ModFunction(self.Values + other.Values)

    def __mul__(self, factor: complex) -> "ModFunction":
        return ModFunction(self.Values * factor)

    __rmul__ = __mul__

    def _checkModulus(self, other: "ModFunction") -> None:
        if other.Modulus != self.Modulus:
            raise ValueError(f'Modulus mismatch: {self.Modulus} and {other.Modulus}')

    def supremum(self) -> float:
        return float(numpy.max(numpy.abs(self.Values)))

    def isBounded(self) -> bool:
        """1-bounded up to a 1e-12 tolerance."""
        return self.supremum() <= 1 + BOUNDED_TOLERANCE

    @staticmethod
    def constant(N: int, value: complex = 1) -> "ModFunction":
        return ModFunction(numpy.full(N, value, dtype=numpy.complex128))

    @staticmethod
    def indicator(N: int, support: Sequence[int]) -> "ModFunction":
        values = numpy.zeros(N, dtype=numpy.complex128)
        values[[s % N for s in support]] = 1
        return ModFunction(values)

    @staticmethod
    def character(N: int, frequency: int = 1) -> "ModFunction":
        """x -> e^{2 pi i frequency x / N}."""
        return ModFunction(numpy.exp(2j * numpy.pi * frequency * numpy.arange(N) / N))

    @staticmethod
    def random(N: int, rng: numpy.random.Generator, kind: str = 'phase', scale: Optional[float] = None) -> "ModFunction":
        """Random 1-bounded function: unit phases, random signs, or points of the unit disc."""
        if kind == 'phase':
            values = numpy.exp(2j * numpy.pi * rng.random(N))
        elif kind == 'sign':
            values = rng.choice(numpy.array([-1.0, 1.0]), size=N).astype(numpy.complex128)
        elif kind == 'disc':
            values = numpy.sqrt(rng.random(N)) * numpy.exp(2j * numpy.pi * rng.random(N))
        else:
            raise ValueError(f'Unknown random function kind "{kind}"')
        return ModFunction(values if scale is None else values * scale)
