"""Report container for identity and inequality checks."""

from dataclasses import dataclass


@dataclass(frozen=True)
class Witness:
    """Worst case seen during a check: margin = rhs - lhs (minimum slack)."""

    input: int
    lhs: float
    rhs: float
    margin: float


@dataclass(frozen=True)
class VerificationOutcome:
    name: str
    range: tuple[int, int]
    passed: bool
    worst_witness: Witness | None = None

    def describe(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lo, hi = self.range
        line = f"{status} {self.name} range=[{lo},{hi}]"
        w = self.worst_witness
        if w is not None:
            line += (f" worst(input={w.input}, lhs={w.lhs!r},"
                     f" rhs={w.rhs!r}, margin={w.margin!r})")
        return line
