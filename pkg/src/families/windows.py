"""Parity-and-window languages L_i^k, their mirrored versions and the 2^k-state DPWs.

L_i^k holds the words that eventually only use a_0..a_{4k-2i+1} after an
even number of X_i, or eventually only a_0..a_{4k-2i}. The hatted family
uses Y_j and the mirrored windows a_{2j-2}..a_{4k-1} / a_{2j-1}..a_{4k-1}.
Level 0 is the universal language in both families.
"""
from typing import Dict, FrozenSet

from ..automata.core import rename_letters, universal_cobuchi
from ..models.automaton import Alphabet, Automaton
from ..models.cocoa import Cocoa
from ..models.family_params import FamilyParams, IndexPair
from ..models.lasso_word import LassoWord
from ..utils.errors import IndexOutOfRangeError
from .base import FamilyBase, register_family


def window_alphabet(k: int) -> Alphabet:
    return Alphabet(tuple(f"X_{m}" for m in range(1, k + 1)) +
                    tuple(f"Y_{m}" for m in range(1, k + 1)) +
                    tuple(f"a_{m}" for m in range(4 * k)))


def _letters(low: int, high: int) -> FrozenSet[str]:
    return frozenset(f"a_{m}" for m in range(low, high + 1))


def _check_level(k: int, level: int):
    if k < 1:
        raise IndexOutOfRangeError(f"k must be positive, got {k}", k=k)
    if not 0 <= level <= k:
        raise IndexOutOfRangeError(f"level {level} outside 0..{k}", k=k, level=level)


def l_windows(k: int, i: int):
    """(window after an even X_i count, window regardless of parity)"""
    return _letters(0, 4 * k - 2 * i + 1), _letters(0, 4 * k - 2 * i)


def lhat_windows(k: int, j: int):
    return _letters(2 * j - 2, 4 * k - 1), _letters(2 * j - 1, 4 * k - 1)


def _parity_window_dcw(k: int, flip: str, even_window, odd_window, name: str) -> Automaton:
    alphabet = window_alphabet(k)
    rows = []
    for state, window in ((0, even_window), (1, odd_window)):
        row = []
        for symbol in alphabet:
            if symbol == flip:
                row.append((1 - state, 1))
            else:
                row.append((state, 2 if symbol in window else 1))
        rows.append(row)
    return Automaton.from_step_table(alphabet, 0, rows, name=name, labels=["even", "odd"])


def gen_dcw_L(k: int, i: int) -> Automaton:
    _check_level(k, i)
    if i == 0:
        return universal_cobuchi(window_alphabet(k), name=f"L{k}-0")
    return _parity_window_dcw(k, f"X_{i}", *l_windows(k, i), name=f"L{k}-{i}")


def gen_dcw_Lhat(k: int, j: int) -> Automaton:
    _check_level(k, j)
    if j == 0:
        return universal_cobuchi(window_alphabet(k), name=f"Lhat{k}-0")
    return _parity_window_dcw(k, f"Y_{j}", *lhat_windows(k, j), name=f"Lhat{k}-{j}")


def _in_window_language(word: LassoWord, flip: str, even_window, odd_window) -> bool:
    letters = word.loop_letters
    if letters <= odd_window:
        return True
    return letters <= even_window and word.stem.count(flip) % 2 == 0


def lasso_in_L(k: int, i: int, word: LassoWord) -> bool:
    _check_level(k, i)
    if i == 0:
        return True
    return _in_window_language(word, f"X_{i}", *l_windows(k, i))


def lasso_in_Lhat(k: int, j: int, word: LassoWord) -> bool:
    _check_level(k, j)
    if j == 0:
        return True
    return _in_window_language(word, f"Y_{j}", *lhat_windows(k, j))


def greatest_pair(k: int, word: LassoWord) -> IndexPair:
    i = max(level for level in range(k + 1) if lasso_in_L(k, level, word))
    j = max(level for level in range(k + 1) if lasso_in_Lhat(k, level, word))
    return IndexPair(i, j)


def gen_cocoa_L(k: int) -> Cocoa:
    return Cocoa(tuple(gen_dcw_L(k, i) for i in range(1, k + 1)), name=f"cocoa-l-{k}")


def gen_cocoa_Lhat(k: int) -> Cocoa:
    return Cocoa(tuple(gen_dcw_Lhat(k, j) for j in range(1, k + 1)), name=f"cocoa-lhat-{k}")


def gen_dpw_P(k: int) -> Automaton:
    """Bit-vector DPW; bit i tracks the parity of X_i.

    Upper-case letters have color 0, a_{4k-2i} color i, a_{4k-2i+1} color i
    or i-1 depending on bit i, and a_0..a_{2k-1} color k.
    """
    if k < 1:
        raise IndexOutOfRangeError(f"k must be positive, got {k}", k=k)
    alphabet = window_alphabet(k)
    fixed: Dict[str, int] = {f"a_{4 * k - 2 * i}": i for i in range(1, k + 1)}
    rows, labels = [], []
    for state in range(2 ** k):
        bits = [(state >> (i - 1)) & 1 for i in range(1, k + 1)]
        labels.append("".join(map(str, bits)))
        row = []
        for symbol in alphabet:
            kind, index = symbol.split("_")
            index = int(index)
            if kind == "X":
                row.append((state ^ (1 << (index - 1)), 0))
            elif kind == "Y":
                row.append((state, 0))
            elif symbol in fixed:
                row.append((state, fixed[symbol]))
            elif index >= 2 * k + 1:
                # a_{4k-2i+1}
                i = (4 * k + 1 - index) // 2
                row.append((state, i - 1 if bits[i - 1] else i))
            else:
                row.append((state, k))
        rows.append(row)
    return Automaton.from_step_table(alphabet, 0, rows, name=f"dpw-p-{k}", labels=labels)


def hat_mapping(k: int) -> Dict[str, str]:
    """X_i <-> Y_i and a_m <-> a_{4k-1-m}"""
    mapping = {}
    for m in range(1, k + 1):
        mapping[f"X_{m}"] = f"Y_{m}"
        mapping[f"Y_{m}"] = f"X_{m}"
    for m in range(4 * k):
        mapping[f"a_{m}"] = f"a_{4 * k - 1 - m}"
    return mapping


def gen_dpw_Phat(k: int) -> Automaton:
    return rename_letters(gen_dpw_P(k), hat_mapping(k)).renamed(f"dpw-phat-{k}")


@register_family
class DcwL(FamilyBase):
    name = "dcw-l"
    levels = ("i",)

    def build(self, params: FamilyParams):
        return gen_dcw_L(params.k, params.i)


@register_family
class DcwLhat(FamilyBase):
    name = "dcw-lhat"
    levels = ("j",)

    def build(self, params: FamilyParams):
        return gen_dcw_Lhat(params.k, params.j)


@register_family
class CocoaL(FamilyBase):
    name = "cocoa-l"
    kind = "cocoa"

    def build(self, params: FamilyParams):
        return gen_cocoa_L(params.k)


@register_family
class CocoaLhat(FamilyBase):
    name = "cocoa-lhat"
    kind = "cocoa"

    def build(self, params: FamilyParams):
        return gen_cocoa_Lhat(params.k)


@register_family
class DpwP(FamilyBase):
    name = "dpw-p"

    def build(self, params: FamilyParams):
        return gen_dpw_P(params.k)


@register_family
class DpwPhat(FamilyBase):
    name = "dpw-phat"

    def build(self, params: FamilyParams):
        return gen_dpw_Phat(params.k)
