"""Four-color example language over {a, b, c}.

A word is in the language iff it has infinitely many a, or it has finitely
many a, every b is eventually followed directly by c, and an even number of
a forces infinitely many b.
"""
from ..models.automaton import Alphabet, Automaton
from ..models.cocoa import Cocoa
from ..models.family_params import FamilyParams
from ..models.lasso_word import LassoWord
from .base import FamilyBase, register_family


EXAMPLE_ALPHABET = Alphabet(("a", "b", "c"))


def gen_example31_dpw() -> Automaton:
    """States track (parity of a, last letter was b)"""
    rows, labels = [], []
    for parity in (0, 1):
        for last_b in (0, 1):
            labels.append(f"{'odd' if parity else 'even'}{'/b' if last_b else ''}")
            a_step = ((1 - parity) * 2, 0)
            b_step = (parity * 2 + 1, 1 if last_b else 2)
            if last_b:
                c_color = 2
            else:
                c_color = 2 if parity else 3
            rows.append([a_step, b_step, (parity * 2, c_color)])
    return Automaton.from_step_table(EXAMPLE_ALPHABET, 0, rows, name="example31-dpw",
                                     labels=labels)


def gen_example31_cocoa() -> Cocoa:
    finite_a = Automaton.from_step_table(EXAMPLE_ALPHABET, 0, [[(0, 1), (0, 2), (0, 2)]],
                                         name="example31-fin-a", labels=["q"])
    no_bb = Automaton.from_step_table(
        EXAMPLE_ALPHABET, 0,
        [[(0, 1), (1, 2), (0, 2)],
         [(0, 1), (1, 1), (0, 2)]],
        name="example31-no-bb", labels=["start", "after-b"])
    even_c = Automaton.from_step_table(
        EXAMPLE_ALPHABET, 0,
        [[(1, 1), (0, 1), (0, 2)],
         [(0, 1), (1, 1), (1, 1)]],
        name="example31-even-c", labels=["even", "odd"])
    return Cocoa((finite_a, no_bb, even_c), name="example31-cocoa")


def lasso_in_example31(word: LassoWord) -> bool:
    """Decide membership from the prose conditions on stem and loop"""
    loop = word.loop
    if "a" in loop:
        return True
    for position, symbol in enumerate(loop):
        if symbol == "b" and loop[(position + 1) % len(loop)] != "c":
            return False
    if word.stem.count("a") % 2 == 0:
        return "b" in loop
    return True


@register_family
class Example31Dpw(FamilyBase):
    name = "example31-dpw"
    takes_k = False

    def build(self, params: FamilyParams):
        return gen_example31_dpw()


@register_family
class Example31Cocoa(FamilyBase):
    name = "example31-cocoa"
    kind = "cocoa"
    takes_k = False

    def build(self, params: FamilyParams):
        return gen_example31_cocoa()
