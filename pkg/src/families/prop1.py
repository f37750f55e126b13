"""One-state parity automaton over {1..k} and its k-level chain"""
from ..models.automaton import Alphabet, Automaton
from ..models.cocoa import Cocoa
from ..models.family_params import FamilyParams
from .base import FamilyBase, register_family


def prop1_alphabet(k: int) -> Alphabet:
    return Alphabet(tuple(str(m) for m in range(1, k + 1)))


def gen_prop1_dpw(k: int) -> Automaton:
    """Letter m is a self-loop of color m"""
    alphabet = prop1_alphabet(k)
    return Automaton.from_step_table(alphabet, 0, [[(0, m) for m in range(1, k + 1)]],
                                     name=f"prop1-dpw-{k}")


def gen_prop1_cocoa(k: int) -> Cocoa:
    """Member i accepts the words whose infinitely-often letters are all at least i"""
    alphabet = prop1_alphabet(k)
    members = tuple(
        Automaton.from_step_table(
            alphabet, 0, [[(0, 2 if m >= level else 1) for m in range(1, k + 1)]],
            name=f"prop1-member-{level}")
        for level in range(1, k + 1)
    )
    return Cocoa(members, name=f"prop1-cocoa-{k}")


@register_family
class Prop1Dpw(FamilyBase):
    name = "prop1-dpw"

    def build(self, params: FamilyParams):
        return gen_prop1_dpw(params.k)


@register_family
class Prop1Cocoa(FamilyBase):
    name = "prop1-cocoa"
    kind = "cocoa"

    def build(self, params: FamilyParams):
        return gen_prop1_cocoa(params.k)
