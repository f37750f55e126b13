from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, Optional, Tuple

from .automaton import Automaton
from .lasso_word import LassoWord
from ..utils.errors import NotDeterministicError


class Polarity(Enum):
    ACCEPT = "require-accepting"
    REJECT = "require-rejecting"

    def admits(self, color: int) -> bool:
        """Whether a dominating color satisfies this polarity"""
        return (color % 2 == 0) == (self is Polarity.ACCEPT)


@dataclass(frozen=True)
class ParityConstraint:
    automaton: Automaton
    polarity: Polarity

    def __post_init__(self):
        if not self.automaton.is_deterministic:
            raise NotDeterministicError(
                f"constraint automaton {self.automaton.name} is not deterministic")


@dataclass
class ResidualPartition:
    """Reachable states grouped by the language they accept when used as initial state"""
    classes: Tuple[FrozenSet[int], ...]
    witnesses: Dict[Tuple[int, int], LassoWord] = field(default_factory=dict)

    @property
    def class_count(self) -> int:
        return len(self.classes)

    def class_of(self, state: int) -> Optional[int]:
        for index, members in enumerate(self.classes):
            if state in members:
                return index
        return None

    def representatives(self) -> Tuple[int, ...]:
        return tuple(min(members) for members in self.classes)

    def to_dict(self):
        return {
            'class_count': self.class_count,
            'classes': [sorted(members) for members in self.classes],
            'witnesses': {f"{a},{b}": str(w) for (a, b), w in sorted(self.witnesses.items())}
        }
