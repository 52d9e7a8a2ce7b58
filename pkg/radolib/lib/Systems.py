"""Named linear systems: Schur, generalised Schur, Brauer configurations and k-term progressions."""
from .linalg import IntegerMatrix


def schurMatrix() -> IntegerMatrix:
    """x + y = z."""
    return IntegerMatrix(((1, 1, -1),))


def generalizedSchurMatrix(k: int) -> IntegerMatrix:
    """x_1 + ... + x_{k-1} = x_k."""
    if k < 2:
        raise ValueError(f'Generalised Schur equation needs k >= 2, got {k}')
    return IntegerMatrix(((1,) * (k - 1) + (-1,),))


def brauerMatrix(d: int) -> IntegerMatrix:
    """(d-2) x d matrix with kernel vectors (y, x, x+y, ..., x+(d-2)y)."""
    if d < 3:
        raise ValueError(f'Brauer configuration needs d >= 3, got {d}')
    rows = []
    for j in range(1, d - 1):
        row = [0] * d
        row[0], row[1], row[j + 1] = j, 1, -1
        rows.append(row)
    return IntegerMatrix(rows)


def progressionMatrix(k: int) -> IntegerMatrix:
    """(k-2) x k matrix with kernel vectors the k-term arithmetic progressions."""
    if k < 3:
        raise ValueError(f'Progression system needs k >= 3, got {k}')
    rows = []
    for j in range(k - 2):
        row = [0] * k
        row[j], row[j + 1], row[j + 2] = 1, -2, 1
        rows.append(row)
    return IntegerMatrix(rows)


def systemByName(name: str) -> IntegerMatrix:
    """"schur", "gschur:K", "brauer:D" or "ap:K"."""
    kind, _, argument = name.partition(':')
    builders = {'gschur': generalizedSchurMatrix, 'brauer': brauerMatrix, 'ap': progressionMatrix}
    if kind == 'schur' and not argument:
        return schurMatrix()
    if kind in builders and argument:
        try:
            size = int(argument)
        except ValueError as e:
            raise ValueError(f'System size must be an integer, got "{argument}"') from e
        return builders[kind](size)
    raise ValueError(f'Unknown system "{name}", expected schur, gschur:K, brauer:D or ap:K')
