from dataclasses import dataclass, field
from typing import Iterator, Tuple

from .automaton import Alphabet, Automaton
from ..utils.errors import AlphabetMismatchError, InvalidAutomatonError, NotCoBuchiError


@dataclass(frozen=True)
class Cocoa:
    """Chain of co-Buechi automata A_1, ..., A_n over one alphabet.

    The falling-chain property is not enforced here; ``chain_validate`` checks
    it once every member is deterministic.
    """
    members: Tuple[Automaton, ...]
    name: str = field(default="cocoa", compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'members', tuple(self.members))
        if not self.members:
            raise InvalidAutomatonError("a chain needs at least one member")
        alphabet = self.members[0].alphabet
        for index, member in enumerate(self.members, start=1):
            if member.alphabet != alphabet:
                raise AlphabetMismatchError(
                    f"member {index} alphabet differs from member 1", index=index)
            if not member.is_cobuchi:
                raise NotCoBuchiError(
                    f"member {index} uses colors {sorted(member.colors)}", index=index)

    @property
    def alphabet(self) -> Alphabet:
        return self.members[0].alphabet

    @property
    def is_deterministic(self) -> bool:
        return all(member.is_deterministic for member in self.members)

    def member(self, level: int) -> Automaton:
        """Member at 1-based chain level"""
        return self.members[level - 1]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Automaton]:
        return iter(self.members)
