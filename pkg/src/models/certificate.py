from dataclasses import dataclass, field
from typing import FrozenSet, Iterator, Optional, Tuple

from .automaton import Scc
from .family_params import IndexPair


@dataclass(frozen=True)
class CertificateNode:
    """One nested SCC of a lower-bound argument.

    ``letters`` is the set the state set is closed under; ``children`` is
    empty for a leaf and holds the x-side then y-side node otherwise.
    """
    level: IndexPair
    states: FrozenSet[int]
    letters: Tuple[str, ...]
    children: Tuple['CertificateNode', ...] = ()
    scc: Optional[Scc] = field(default=None, compare=False)

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def leaf_count(self) -> int:
        if self.is_leaf:
            return 1
        return sum(child.leaf_count() for child in self.children)

    def walk(self) -> Iterator['CertificateNode']:
        yield self
        for child in self.children:
            yield from child.walk()


@dataclass(frozen=True)
class LowerBoundCertificate:
    k: int
    root: CertificateNode
    bound: int

    def nodes(self) -> Iterator[CertificateNode]:
        return self.root.walk()

    @property
    def node_count(self) -> int:
        return sum(1 for _ in self.nodes())
