"""Chain for the intersection of the L^k and hatted L^k languages.

Level u accepts a word iff its greatest index pair dominates some pair of
``gamma(k, u)``; each level is a disjunction of pairwise conjunctions.
"""
from typing import Iterable, Set

from ..automata.constructions import dcw_conjunction, dcw_disjunction
from ..automata.core import empty_cobuchi
from ..models.cocoa import Cocoa
from ..models.family_params import FamilyParams, IndexPair
from ..models.lasso_word import LassoWord
from ..utils.errors import IndexOutOfRangeError
from .base import FamilyBase, register_family
from .windows import gen_dcw_L, gen_dcw_Lhat, greatest_pair


def gamma(k: int, u: int) -> Set[IndexPair]:
    if not 0 <= u <= 2 * k:
        raise IndexOutOfRangeError(f"level {u} outside 0..{2 * k}", k=k, level=u)
    pairs = set()
    for i in range(k + 1):
        for j in range(k + 1):
            if u % 2 == 0:
                if i + j == u and i % 2 == 0 and j % 2 == 0:
                    pairs.add(IndexPair(i, j))
            elif u <= i + j <= u + 1 and (i % 2 == 1 or j % 2 == 1):
                pairs.add(IndexPair(i, j))
    return pairs


def nondominated(pairs: Iterable[IndexPair]) -> Set[IndexPair]:
    pairs = set(pairs)
    return {pair for pair in pairs
            if not any(other != pair and pair.dominated_by(other) for other in pairs)}


def downward_closure(pair: IndexPair) -> Set[IndexPair]:
    return {IndexPair(i, j) for i in range(pair.i + 1) for j in range(pair.j + 1)}


def theorem2_color(k: int, word: LassoWord) -> int:
    """Chain color from the greatest pair: one less than the sum when both are odd"""
    i, j = greatest_pair(k, word)
    if i % 2 == 1 and j % 2 == 1:
        return i + j - 1
    return i + j


def gen_cocoa_theorem2(k: int, nondominated_only: bool = False) -> Cocoa:
    members = []
    for u in range(1, 2 * k + 1):
        pairs = gamma(k, u)
        if nondominated_only:
            pairs = nondominated(pairs)
        conjunctions = [
            dcw_conjunction([gen_dcw_L(k, pair.i), gen_dcw_Lhat(k, pair.j)],
                            name=f"L{k}-{pair.i}&Lhat{k}-{pair.j}")
            for pair in sorted(pairs)
        ]
        name = f"theorem2-{k}-level-{u}"
        if not conjunctions:
            # top level for odd k has no pair
            members.append(empty_cobuchi(gen_dcw_L(k, 0).alphabet, name=name))
            continue
        members.append(dcw_disjunction(conjunctions, name=name))
    suffix = "-nondominated" if nondominated_only else ""
    return Cocoa(tuple(members), name=f"cocoa-theorem2-{k}{suffix}")


@register_family
class CocoaTheorem2(FamilyBase):
    name = "cocoa-theorem2"
    kind = "cocoa"

    def build(self, params: FamilyParams):
        return gen_cocoa_theorem2(params.k, nondominated_only=params.nondominated)
