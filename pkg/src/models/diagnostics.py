from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional


class DiagnosticCode(Enum):
    INPUT_INCOMPLETE = "INPUT_INCOMPLETE"
    NON_UNIFORM_COLOR = "NON_UNIFORM_COLOR"
    INITIAL_OUT_OF_RANGE = "INITIAL_OUT_OF_RANGE"
    TARGET_OUT_OF_RANGE = "TARGET_OUT_OF_RANGE"
    NEGATIVE_COLOR = "NEGATIVE_COLOR"
    NO_STATES = "NO_STATES"
    # chain checks
    NOT_COBUCHI = "NOT_COBUCHI"
    ALPHABET_MISMATCH = "ALPHABET_MISMATCH"
    NOT_CONTAINED = "NOT_CONTAINED"
    NOT_STRICT = "NOT_STRICT"
    # certificate checks
    NOT_CLOSED = "NOT_CLOSED"
    OVERLAP = "OVERLAP"
    UNREACHABLE = "UNREACHABLE"
    NOT_STRONGLY_CONNECTED = "NOT_STRONGLY_CONNECTED"
    BAD_LETTERS = "BAD_LETTERS"
    BAD_SHAPE = "BAD_SHAPE"
    BAD_BOUND = "BAD_BOUND"


@dataclass(frozen=True)
class Diagnostic:
    """One violated invariant, located as precisely as the check allows"""
    code: DiagnosticCode
    message: str
    state: Optional[int] = None
    symbol: Optional[str] = None
    index: Optional[int] = None
    witness: Optional[Any] = None

    def __str__(self) -> str:
        where = []
        if self.index is not None:
            where.append(str(self.index))
        if self.state is not None:
            where.append(f"({self.state},{self.symbol!r})" if self.symbol is not None else str(self.state))
        text = self.code.value
        if where:
            text += " at " + " ".join(where)
        text += f": {self.message}"
        if self.witness is not None:
            text += f" [witness {self.witness}]"
        return text

    def to_dict(self) -> Dict[str, Any]:
        return {
            'code': self.code.value,
            'message': self.message,
            'state': self.state,
            'symbol': self.symbol,
            'index': self.index,
            'witness': str(self.witness) if self.witness is not None else None
        }
