from abc import ABC, abstractmethod
from typing import Dict, List, Tuple, Type, Union
import time

from ..models.automaton import Automaton
from ..models.cocoa import Cocoa
from ..models.family_params import FamilyParams
from ..utils.errors import IndexOutOfRangeError
from ..utils.logger import get_logger


Generated = Union[Automaton, Cocoa]

FAMILIES: Dict[str, Type['FamilyBase']] = {}


def register_family(cls: Type['FamilyBase']) -> Type['FamilyBase']:
    FAMILIES[cls.name] = cls
    return cls


def get_family(name: str) -> 'FamilyBase':
    try:
        return FAMILIES[name]()
    except KeyError:
        raise IndexOutOfRangeError(
            f"unknown family {name!r}; choose from {', '.join(family_names())}",
            family=name) from None


def family_names() -> List[str]:
    return sorted(FAMILIES)


class FamilyBase(ABC):
    """Abstract base class for language family generators"""

    name: str = ""
    kind: str = "aut"
    # level parameters the generator needs besides k ('i' or 'j')
    levels: Tuple[str, ...] = ()
    takes_k: bool = True

    def __init__(self):
        self.logger = get_logger(f"families.{self.name}")

    @abstractmethod
    def build(self, params: FamilyParams) -> Generated:
        """Build the automaton or chain for validated parameters"""
        pass

    def validate_params(self, params: FamilyParams) -> FamilyParams:
        for level in self.levels:
            if getattr(params, level) is None:
                raise IndexOutOfRangeError(f"family {self.name} needs --{level}", family=self.name)
        if not self.takes_k:
            return params
        return params.validate()

    def generate(self, params: FamilyParams) -> Generated:
        params = self.validate_params(params)
        start = time.time()
        result = self.build(params)
        states = result.state_count if isinstance(result, Automaton) else \
            sum(member.state_count for member in result.members)
        self.logger.log_construction(f"gen {self.name}", result.name, states, time.time() - start)
        return result
