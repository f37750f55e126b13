"""Witness search over products of deterministic parity automata"""
import itertools
from collections import deque
from typing import Dict, List, Optional, Sequence, Set, Tuple

import networkx as nx

from .constructions import mh_determinize
from .core import reachable_states, universal_cobuchi
from ..models.automaton import Automaton
from ..models.constraints import ParityConstraint, Polarity, ResidualPartition
from ..models.lasso_word import LassoWord
from ..utils.errors import AlphabetMismatchError, InvalidAutomatonError, NotDeterministicError
from ..utils.logger import get_logger


logger = get_logger("automata.decision")


class _JointProduct:
    """Reachable part of the synchronous product of deterministic automata"""

    def __init__(self, automata: Sequence[Automaton]):
        tables = [aut.step_table for aut in automata]
        letters = len(automata[0].alphabet)
        start = tuple(aut.initial for aut in automata)
        index = {start: 0}
        self.nodes = [start]
        # adjacency[node][position] = (target node, colors per automaton)
        self.adjacency: List[List[Tuple[int, Tuple[int, ...]]]] = []
        queue = deque([start])
        while queue:
            states = queue.popleft()
            row = []
            for position in range(letters):
                steps = [table[q][position] for table, q in zip(tables, states)]
                target = tuple(t for t, _ in steps)
                if target not in index:
                    index[target] = len(self.nodes)
                    self.nodes.append(target)
                    queue.append(target)
                row.append((index[target], tuple(c for _, c in steps)))
            self.adjacency.append(row)

    def colors_present(self, component: int) -> Set[int]:
        return {colors[component] for row in self.adjacency for _, colors in row}

    def edges(self, floor: Tuple[int, ...]) -> List[Tuple[int, int, int, Tuple[int, ...]]]:
        """Edges whose colors are componentwise at least ``floor``"""
        kept = []
        for source, row in enumerate(self.adjacency):
            for position, (target, colors) in enumerate(row):
                if all(c >= f for c, f in zip(colors, floor)):
                    kept.append((source, position, target, colors))
        return kept


def _shortlex_path(adjacency: Dict[int, List[Tuple[int, int]]], source: int,
                   target: int) -> List[int]:
    """Letters of the shortest, then alphabetically least, path from source to target"""
    if source == target:
        return []
    parent = {source: None}
    queue = deque([source])
    while queue:
        node = queue.popleft()
        for position, following in adjacency.get(node, ()):
            if following in parent:
                continue
            parent[following] = (node, position)
            if following == target:
                letters = []
                while parent[following] is not None:
                    following, position = parent[following]
                    letters.append(position)
                return letters[::-1]
            queue.append(following)
    raise InvalidAutomatonError(f"no path from {source} to {target}")


def _adjacency(edges) -> Dict[int, List[Tuple[int, int]]]:
    adjacency: Dict[int, List[Tuple[int, int]]] = {}
    for source, position, target, _ in edges:
        adjacency.setdefault(source, []).append((position, target))
    for successors in adjacency.values():
        successors.sort()
    return adjacency


def _check_constraints(constraints: Sequence[ParityConstraint]):
    if not constraints:
        raise InvalidAutomatonError("at least one constraint is required")
    alphabet = constraints[0].automaton.alphabet
    for index, constraint in enumerate(constraints, start=1):
        if constraint.automaton.alphabet != alphabet:
            raise AlphabetMismatchError(f"constraint {index} has a different alphabet",
                                        index=index)
        if not constraint.automaton.is_deterministic:
            raise NotDeterministicError(f"constraint {index} is not deterministic", index=index)


def multi_parity_witness(constraints: Sequence[ParityConstraint]) -> Optional[LassoWord]:
    """A lasso meeting every acceptance/rejection constraint, or None"""
    _check_constraints(constraints)
    automata = [constraint.automaton for constraint in constraints]
    product = _JointProduct(automata)
    full_adjacency = _adjacency(product.edges(tuple(0 for _ in automata)))

    candidates = []
    for component, constraint in enumerate(constraints):
        allowed = sorted(c for c in product.colors_present(component)
                         if constraint.polarity.admits(c))
        if not allowed:
            return None
        candidates.append(allowed)

    for target in sorted(itertools.product(*candidates), key=lambda t: (sum(t), t)):
        edges = product.edges(target)
        graph = nx.DiGraph()
        graph.add_edges_from((source, following) for source, _, following, _ in edges)
        components = sorted(nx.strongly_connected_components(graph), key=min)
        owner = {node: rank for rank, component in enumerate(components) for node in component}
        grouped: Dict[int, list] = {}
        for edge in edges:
            if owner[edge[0]] == owner[edge[2]]:
                grouped.setdefault(owner[edge[0]], []).append(edge)
        for rank, component in enumerate(components):
            internal = grouped.get(rank, [])
            required = []
            for index, wanted in enumerate(target):
                hit = next((edge for edge in internal if edge[3][index] == wanted), None)
                if hit is None:
                    break
                if hit not in required:
                    required.append(hit)
            else:
                return _reconstruct(product, automata[0], full_adjacency, internal,
                                    min(component), required)
    return None


def _reconstruct(product: _JointProduct, reference: Automaton, full_adjacency,
                 internal, entry: int, required) -> LassoWord:
    inside = _adjacency(internal)
    stem = _shortlex_path(full_adjacency, 0, entry)
    loop: List[int] = []
    current = entry
    for source, position, target, _ in required:
        loop.extend(_shortlex_path(inside, current, source))
        loop.append(position)
        current = target
    loop.extend(_shortlex_path(inside, current, entry))
    symbols = reference.alphabet
    return LassoWord(tuple(symbols[p] for p in stem), tuple(symbols[p] for p in loop))


def dpw_contains(a: Automaton, b: Automaton) -> Tuple[bool, Optional[LassoWord]]:
    """Whether L(a) is a subset of L(b); otherwise a lasso in L(a) minus L(b)"""
    witness = multi_parity_witness([ParityConstraint(a, Polarity.ACCEPT),
                                    ParityConstraint(b, Polarity.REJECT)])
    return witness is None, witness


def dpw_equivalent(a: Automaton, b: Automaton) -> Tuple[bool, Optional[LassoWord]]:
    contained, witness = dpw_contains(a, b)
    if not contained:
        return False, witness
    return dpw_contains(b, a)


def dpw_is_empty(aut: Automaton) -> Tuple[bool, Optional[LassoWord]]:
    witness = multi_parity_witness([ParityConstraint(aut, Polarity.ACCEPT)])
    return witness is None, witness


def _as_deterministic(aut: Automaton) -> Automaton:
    if aut.is_deterministic:
        return aut
    if aut.is_cobuchi:
        return mh_determinize(aut)
    raise NotDeterministicError(f"automaton {aut.name} is neither deterministic nor co-Buechi")


def is_universal(aut: Automaton) -> bool:
    """Language equivalence with the one-state all-accepting automaton"""
    return dpw_equivalent(_as_deterministic(aut), universal_cobuchi(aut.alphabet))[0]


def is_empty(aut: Automaton) -> bool:
    return dpw_is_empty(_as_deterministic(aut))[0]


def residual_partition(dpw: Automaton) -> ResidualPartition:
    """Group reachable states by the language accepted from them.

    Each state is compared against one representative per class; witnesses
    separating every pair of representatives are kept.
    """
    if not dpw.is_deterministic:
        raise NotDeterministicError(f"automaton {dpw.name} is not deterministic")

    classes: List[List[int]] = []
    witnesses: Dict[Tuple[int, int], LassoWord] = {}
    for state in sorted(reachable_states(dpw)):
        rooted = dpw.with_initial(state)
        separations = {}
        for members in classes:
            representative = members[0]
            same, witness = dpw_equivalent(dpw.with_initial(representative), rooted)
            if same:
                members.append(state)
                break
            separations[(representative, state)] = witness
        else:
            classes.append([state])
            witnesses.update(separations)

    partition = ResidualPartition(tuple(frozenset(members) for members in classes), witnesses)
    logger.logger.debug(f"residual_partition of {dpw.name}: {partition.class_count} classes")
    return partition
