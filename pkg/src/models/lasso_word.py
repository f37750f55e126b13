from dataclasses import dataclass
from typing import FrozenSet, Iterable, Tuple

from ..utils.errors import LassoSyntaxError


@dataclass(frozen=True)
class LassoWord:
    """Ultimately periodic word ``stem . loop^omega``"""
    stem: Tuple[str, ...]
    loop: Tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, 'stem', tuple(self.stem))
        object.__setattr__(self, 'loop', tuple(self.loop))
        if not self.loop:
            raise LassoSyntaxError("lasso loop must not be empty")

    @classmethod
    def parse(cls, text: str) -> 'LassoWord':
        """Parse ``"<stem symbols>|<loop symbols>"``, symbols separated by spaces"""
        if text.count('|') != 1:
            raise LassoSyntaxError(f"expected exactly one '|' in lasso {text!r}")
        stem_text, loop_text = text.split('|')
        loop = loop_text.split()
        if not loop:
            raise LassoSyntaxError(f"lasso {text!r} has an empty loop")
        return cls(tuple(stem_text.split()), tuple(loop))

    @classmethod
    def of(cls, stem: Iterable[str], loop: Iterable[str]) -> 'LassoWord':
        return cls(tuple(stem), tuple(loop))

    @property
    def loop_letters(self) -> FrozenSet[str]:
        """The letters occurring infinitely often"""
        return frozenset(self.loop)

    @property
    def letters(self) -> FrozenSet[str]:
        return frozenset(self.stem) | frozenset(self.loop)

    def __str__(self) -> str:
        return f"{' '.join(self.stem)}|{' '.join(self.loop)}"

    def __len__(self) -> int:
        return len(self.stem) + len(self.loop)
