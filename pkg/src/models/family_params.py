from dataclasses import dataclass
from typing import NamedTuple, Optional

from ..utils.errors import IndexOutOfRangeError


class IndexPair(NamedTuple):
    i: int
    j: int

    def dominated_by(self, other: 'IndexPair') -> bool:
        """Weak componentwise order"""
        return other.i >= self.i and other.j >= self.j

    def __str__(self) -> str:
        return f"({self.i},{self.j})"


@dataclass(frozen=True)
class FamilyParams:
    """Parameters for family generators; ``i``/``j`` are levels where needed"""
    k: int
    i: Optional[int] = None
    j: Optional[int] = None
    nondominated: bool = False

    def validate(self) -> 'FamilyParams':
        if not isinstance(self.k, int) or self.k < 1:
            raise IndexOutOfRangeError(f"k must be a positive integer, got {self.k!r}", k=self.k)
        for field_name in ('i', 'j'):
            level = getattr(self, field_name)
            if level is not None and not 0 <= level <= self.k:
                raise IndexOutOfRangeError(
                    f"{field_name} must lie in 0..{self.k}, got {level}", k=self.k, level=level)
        return self

    @property
    def level(self) -> Optional[int]:
        return self.i if self.i is not None else self.j
