import errno
import os
from fractions import Fraction
from io import TextIOWrapper

from .linalg import IntegerMatrix, RationalMatrix
from .regularity import ColumnPartition, Witness
from .search import Colouring
from .uniformity import ModFunction

DebugInfo = tuple[str, int, int, str]


def parseLine(file: TextIOWrapper, lineNumber: int) -> tuple[int, list[str], DebugInfo]:
    """Next data line of the file; blank lines and '#' comments are skipped."""
    while True:
        lineNumber += 1
        line = file.readline()
        if line == '':
            raise SyntaxError('Unexpected end of file', (file.name, lineNumber, 1, ''))
        tokens = line.strip().split()
        if tokens and not tokens[0].startswith('#'):
            debugInfo = (file.name, lineNumber, len(line) - len(line.lstrip()) + 1, line)
            return (lineNumber, tokens, debugInfo)


def _checkExists(path: str) -> None:
    if not os.path.exists(path):
        raise FileNotFoundError(errno.ENOENT, os.strerror(errno.ENOENT), path)


def _deserializeIntegers(tokens: list[str], count: int, what: str, debugInfo: DebugInfo) -> list[int]:
    if len(tokens) != count:
        raise SyntaxError(f'{what} must have {count} entries, got {len(tokens)}', debugInfo)
    try:
        return [int(token) for token in tokens]
    except ValueError as e:
        raise SyntaxError(f'{what} must be integers only', debugInfo) from e


def _deserializeRationals(tokens: list[str], count: int, debugInfo: DebugInfo) -> list[Fraction]:
    if len(tokens) != count:
        raise SyntaxError(f'Alpha row must have {count} entries, got {len(tokens)}', debugInfo)
    try:
        return [Fraction(token) for token in tokens]
    except (ValueError, ZeroDivisionError) as e:
        raise SyntaxError('Alpha entries must be rationals "num/den"', debugInfo) from e


def readMatrix(path: str) -> IntegerMatrix:
    """Matrix file: header "k d", then k rows of d integers."""
    _checkExists(path)
    with open(path, 'r') as file:
        line, tokens, debugInfo = parseLine(file, 0)
        k, d = _deserializeIntegers(tokens, 2, 'Matrix header "k d"', debugInfo)
        if k < 1 or d < 1:
            raise SyntaxError('Matrix dimensions must be positive', debugInfo)

        rows = []
        for _ in range(k):
            line, tokens, debugInfo = parseLine(file, line)
            rows.append(_deserializeIntegers(tokens, d, 'Matrix row', debugInfo))
        return IntegerMatrix(rows)


def writeMatrix(path: str, A: IntegerMatrix) -> None:
    with open(path, 'w') as file:
        file.write(f'{A.Rows} {A.Cols}\n')
        for row in A.Entries:
            file.write(' '.join(str(v) for v in row) + '\n')


def formatWitness(W: Witness) -> str:
    """Witness text: "t", the blocks as "I_j: ..." with 1-based columns, then alpha as d rows of "num/den"."""
    lines = [str(W.t)]
    for index, block in enumerate(W.Partition.Blocks, start=1):
        lines.append(f'I_{index}: ' + ' '.join(str(i + 1) for i in block))
    for row in W.Alpha.Entries:
        lines.append(' '.join(f'{v.numerator}/{v.denominator}' for v in row))
    return '\n'.join(lines) + '\n'


def writeWitness(path: str, W: Witness) -> None:
    with open(path, 'w') as file:
        file.write(formatWitness(W))


def readWitness(path: str) -> Witness:
    _checkExists(path)
    with open(path, 'r') as file:
        line, tokens, debugInfo = parseLine(file, 0)
        t, = _deserializeIntegers(tokens, 1, 'Witness header "t"', debugInfo)
        if t < 1:
            raise SyntaxError('Witness needs at least one block', debugInfo)

        blocks = []
        for index in range(1, t + 1):
            line, tokens, debugInfo = parseLine(file, line)
            if tokens[0] != f'I_{index}:':
                raise SyntaxError(f'Expected block label "I_{index}:"', debugInfo)
            columns = _deserializeIntegers(tokens[1:], len(tokens) - 1, 'Block', debugInfo)
            if not columns or min(columns) < 1:
                raise SyntaxError('Block columns must be non-empty and 1-based', debugInfo)
            blocks.append(tuple(i - 1 for i in columns))
        try:
            partition = ColumnPartition(tuple(blocks))
        except ValueError as e:
            raise SyntaxError(str(e), debugInfo) from e

        rows = []
        for _ in range(partition.Columns):
            line, tokens, debugInfo = parseLine(file, line)
            rows.append(_deserializeRationals(tokens, t, debugInfo))
        return Witness(partition, RationalMatrix(tuple(tuple(row) for row in rows), t))


def writeColouring(path: str, colouring: Colouring) -> None:
    with open(path, 'w') as file:
        file.write(f'{colouring.N} {colouring.r}\n')
        file.write(' '.join(str(c) for c in colouring.Assignment) + '\n')


def readColouring(path: str) -> Colouring:
    """Certificate file: "N r", then one line of N colour indices (nothing further for N = 0)."""
    _checkExists(path)
    with open(path, 'r') as file:
        line, tokens, debugInfo = parseLine(file, 0)
        N, r = _deserializeIntegers(tokens, 2, 'Colouring header "N r"', debugInfo)
        if N < 0 or r < 1:
            raise SyntaxError('Colouring needs N >= 0 and r >= 1', debugInfo)
        if N == 0:
            return Colouring(0, r, ())

        line, tokens, debugInfo = parseLine(file, line)
        assignment = _deserializeIntegers(tokens, N, 'Colour assignment', debugInfo)
        try:
            return Colouring(N, r, tuple(assignment))
        except ValueError as e:
            raise SyntaxError(str(e), debugInfo) from e


def readFunction(path: str) -> ModFunction:
    """Function file: "N", then N lines "re im"."""
    _checkExists(path)
    with open(path, 'r') as file:
        line, tokens, debugInfo = parseLine(file, 0)
        N, = _deserializeIntegers(tokens, 1, 'Function header "N"', debugInfo)
        if N < 1:
            raise SyntaxError('Function modulus must be positive', debugInfo)

        values = []
        for _ in range(N):
            line, tokens, debugInfo = parseLine(file, line)
            if len(tokens) != 2:
                raise SyntaxError('Function value must be "re im"', debugInfo)
            try:
                values.append(complex(float(tokens[0]), float(tokens[1])))
            except ValueError as e:
                raise SyntaxError('Function value must be numerics only', debugInfo) from e
        return ModFunction(values)


def writeFunction(path: str, f: ModFunction) -> None:
    with open(path, 'w') as file:
        file.write(f'{f.Modulus}\n')
        for value in f.Values:
            file.write(f'{float(value.real)!r} {float(value.imag)!r}\n')


def parseIntegerSet(text: str) -> frozenset[int]:
    """Comma separated integers and inclusive ranges "a..b", e.g. "1..5,9"."""
    result: set[int] = set()
    for part in filter(None, (p.strip() for p in text.split(','))):
        low, dots, high = part.partition('..')
        try:
            if dots:
                result.update(range(int(low), int(high) + 1))
            else:
                result.add(int(part))
        except ValueError as e:
            raise ValueError(f'Malformed set element "{part}"') from e
    return frozenset(result)
