"""The chains C^k: two-state members whose product DPW needs 2^k states"""
from ..automata.constructions import cocoa_to_dpw
from ..models.automaton import Alphabet, Automaton
from ..models.cocoa import Cocoa
from ..models.family_params import FamilyParams
from ..models.lasso_word import LassoWord
from ..utils.errors import IndexOutOfRangeError
from .base import FamilyBase, register_family


def c_alphabet(k: int) -> Alphabet:
    return Alphabet(tuple(f"x_{m}" for m in range(1, k + 2)) +
                    tuple(f"y_{m}" for m in range(1, k + 2)))


def gen_c_member(k: int, j: int) -> Automaton:
    """Member j: p leaves to q on x_1..x_j, q returns to p on y_1..y_j, both rejecting"""
    alphabet = c_alphabet(k)
    x_triggers = {f"x_{m}" for m in range(1, j + 1)}
    y_triggers = {f"y_{m}" for m in range(1, j + 1)}
    p_row = [(1, 1) if symbol in x_triggers else (0, 2) for symbol in alphabet]
    q_row = [(0, 1) if symbol in y_triggers else (1, 2) for symbol in alphabet]
    return Automaton.from_step_table(alphabet, 0, [p_row, q_row], name=f"C{k}-member-{j}",
                                     labels=["p", "q"])


def gen_cocoa_C(k: int) -> Cocoa:
    return Cocoa(tuple(gen_c_member(k, j) for j in range(1, k + 1)), name=f"cocoa-c-{k}")


def gen_dpw_C(k: int) -> Automaton:
    """The tight 2^k-state parity automaton for L(C^k)"""
    return cocoa_to_dpw(gen_cocoa_C(k), name=f"dpw-c-{k}")


def lasso_in_C_member(k: int, j: int, word: LassoWord) -> bool:
    """x_1..x_j or y_1..y_j occur only finitely often"""
    if not 1 <= j <= k:
        raise IndexOutOfRangeError(f"member index {j} outside 1..{k}", k=k, level=j)
    letters = word.loop_letters
    x_seen = any(f"x_{m}" in letters for m in range(1, j + 1))
    y_seen = any(f"y_{m}" in letters for m in range(1, j + 1))
    return not (x_seen and y_seen)


@register_family
class CocoaC(FamilyBase):
    name = "cocoa-c"
    kind = "cocoa"

    def build(self, params: FamilyParams):
        return gen_cocoa_C(params.k)


@register_family
class DpwC(FamilyBase):
    name = "dpw-c"

    def build(self, params: FamilyParams):
        return gen_dpw_C(params.k)
