from dataclasses import dataclass

from .MpcParams import Generator, MpcParams


@dataclass(frozen=True)
class MpcSet:
    """Element set spanned by a generator under (m,p,c), with the validity flag (every element positive)."""
    Elements: tuple[int, ...]
    Generator: Generator
    Params: MpcParams
    Valid: bool

    def __contains__(self, value: int) -> bool:
        return value in self.Elements

    def __len__(self) -> int:
        return len(self.Elements)
