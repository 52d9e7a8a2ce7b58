from dataclasses import dataclass
from fractions import Fraction

VIOLATION_TOLERANCE = 1e-9


@dataclass(frozen=True)
class CountReport:
    """Generalised von Neumann check: Lambda, the U^k norm of each function and min norm - |Lambda|.

    Negative slack is a finding, not an error."""
    LambdaValue: complex
    Norms: tuple[float, ...]
    Slack: float
    k: int
    Modulus: int

    @property
    def violated(self) -> bool:
        return self.Slack < -VIOLATION_TOLERANCE


@dataclass(frozen=True)
class GapReport:
    """Q_{m,p,c} against the factorised prediction alpha^e * Q_{m-1,p,c}.

    Predicted uses e = |D_{p,c;m}|, Alternative uses e = |D_{m,p,c}|."""
    Alpha: Fraction
    Q: Fraction
    QLower: Fraction
    Predicted: Fraction
    Gap: Fraction
    Alternative: Fraction
    AlternativeGap: Fraction
