"""Structural operations on automata: validation, reachability, renaming and SCCs"""
from collections import deque
from typing import Iterable, List, Mapping, Optional, Set

import networkx as nx

from ..models.automaton import Alphabet, Automaton, Scc
from ..models.diagnostics import Diagnostic, DiagnosticCode
from ..utils.errors import InvalidAutomatonError, InvalidSymbolError, NotBijectiveError


def validate_automaton(aut: Automaton) -> List[Diagnostic]:
    """Check input-completeness, color uniformity and state ranges"""
    diagnostics = []

    if aut.state_count < 1:
        return [Diagnostic(DiagnosticCode.NO_STATES, "automaton has no states")]

    if not 0 <= aut.initial < aut.state_count:
        diagnostics.append(Diagnostic(
            DiagnosticCode.INITIAL_OUT_OF_RANGE,
            f"initial state {aut.initial} not below state count {aut.state_count}",
            state=aut.initial))

    for state, row in enumerate(aut.delta):
        for position, cell in enumerate(row):
            symbol = aut.alphabet[position]
            if not cell:
                diagnostics.append(Diagnostic(
                    DiagnosticCode.INPUT_INCOMPLETE, "no successor", state=state, symbol=symbol))
                continue
            colors = {color for _, color in cell}
            if len(colors) > 1:
                diagnostics.append(Diagnostic(
                    DiagnosticCode.NON_UNIFORM_COLOR,
                    f"successors carry colors {sorted(colors)}", state=state, symbol=symbol))
            if min(colors) < 0:
                diagnostics.append(Diagnostic(
                    DiagnosticCode.NEGATIVE_COLOR, "negative color", state=state, symbol=symbol))
            for target, _ in cell:
                if not 0 <= target < aut.state_count:
                    diagnostics.append(Diagnostic(
                        DiagnosticCode.TARGET_OUT_OF_RANGE,
                        f"target {target} out of range", state=state, symbol=symbol))

    return diagnostics


def ensure_valid(aut: Automaton) -> Automaton:
    diagnostics = validate_automaton(aut)
    if diagnostics:
        raise InvalidAutomatonError(
            f"automaton {aut.name} is invalid: {diagnostics[0]}", diagnostics)
    return aut


def is_deterministic(aut: Automaton) -> bool:
    return aut.is_deterministic


def universal_cobuchi(alphabet: Alphabet, name: str = "universal") -> Automaton:
    """One state, every symbol an accepting self-loop"""
    return Automaton.from_step_table(alphabet, 0, [[(0, 2)] * len(alphabet)], name=name)


def empty_cobuchi(alphabet: Alphabet, name: str = "empty") -> Automaton:
    """One state, every symbol a rejecting self-loop"""
    return Automaton.from_step_table(alphabet, 0, [[(0, 1)] * len(alphabet)], name=name)


def reachable_states(aut: Automaton, letters: Optional[Iterable[str]] = None) -> Set[int]:
    positions = _positions(aut, letters)
    seen = {aut.initial}
    queue = deque([aut.initial])
    while queue:
        state = queue.popleft()
        for position in positions:
            for target, _ in aut.delta[state][position]:
                if target not in seen:
                    seen.add(target)
                    queue.append(target)
    return seen


def reachable_restrict(aut: Automaton) -> Automaton:
    """Drop unreachable states, renumbering the rest in their original order"""
    keep = sorted(reachable_states(aut))
    if len(keep) == aut.state_count:
        return aut
    renumber = {old: new for new, old in enumerate(keep)}
    delta = tuple(
        tuple(tuple(sorted((renumber[t], c) for t, c in cell)) for cell in aut.delta[old])
        for old in keep
    )
    labels = tuple(aut.labels[old] for old in keep) if aut.labels else ()
    return Automaton(aut.alphabet, len(keep), renumber[aut.initial], delta,
                     name=aut.name, labels=labels)


def rename_letters(aut: Automaton, mapping: Mapping[str, str]) -> Automaton:
    """Relabel transitions by a bijection on the alphabet; the symbol order is kept"""
    symbols = set(aut.symbols)
    if set(mapping) != symbols:
        missing = sorted(symbols - set(mapping))
        raise NotBijectiveError(f"mapping does not cover the alphabet (missing {missing})")
    images = list(mapping.values())
    if set(images) != symbols or len(images) != len(set(images)):
        raise NotBijectiveError("mapping is not a permutation of the alphabet")

    target_of = [aut.alphabet.index(mapping[symbol]) for symbol in aut.symbols]
    delta = []
    for row in aut.delta:
        renamed = [()] * len(row)
        for position, cell in enumerate(row):
            renamed[target_of[position]] = cell
        delta.append(tuple(renamed))
    return Automaton(aut.alphabet, aut.state_count, aut.initial, tuple(delta),
                     name=aut.name, labels=aut.labels)


def _positions(aut: Automaton, letters: Optional[Iterable[str]]) -> List[int]:
    if letters is None:
        return list(range(len(aut.alphabet)))
    positions = []
    for symbol in letters:
        if symbol not in aut.alphabet:
            raise InvalidSymbolError(f"symbol {symbol!r} is not in the alphabet of {aut.name}",
                                     symbol=symbol)
        positions.append(aut.alphabet.index(symbol))
    return sorted(set(positions))


def transition_graph(aut: Automaton, letters: Optional[Iterable[str]] = None,
                     states: Optional[Iterable[int]] = None) -> nx.DiGraph:
    """State graph restricted to the given letters and (optionally) a state subset"""
    positions = _positions(aut, letters)
    nodes = set(aut.states) if states is None else set(states)
    graph = nx.DiGraph()
    graph.add_nodes_from(sorted(nodes))
    for state in sorted(nodes):
        for position in positions:
            for target, _ in aut.delta[state][position]:
                if target in nodes:
                    graph.add_edge(state, target)
    return graph


def _internal_transitions(aut: Automaton, component: Set[int], positions: List[int]):
    transitions = set()
    for state in component:
        for position in positions:
            for target, color in aut.delta[state][position]:
                if target in component:
                    transitions.add((state, aut.alphabet[position], target, color))
    return frozenset(transitions)


def _is_trivial(graph: nx.DiGraph, component: Set[int]) -> bool:
    if len(component) > 1:
        return False
    state = next(iter(component))
    return not graph.has_edge(state, state)


def scc_decompose(aut: Automaton, allowed_letters: Iterable[str],
                  states: Optional[Iterable[int]] = None) -> List[Scc]:
    """Maximal non-trivial SCCs over the allowed letters, ordered by least state"""
    positions = _positions(aut, allowed_letters)
    if not positions:
        return []
    graph = transition_graph(aut, [aut.alphabet[p] for p in positions], states)
    components = [
        component for component in nx.strongly_connected_components(graph)
        if not _is_trivial(graph, component)
    ]
    components.sort(key=min)
    return [Scc(frozenset(component), _internal_transitions(aut, component, positions))
            for component in components]


def terminal_sccs(aut: Automaton, letters: Optional[Iterable[str]] = None,
                  states: Optional[Iterable[int]] = None,
                  reachable_only: bool = False) -> List[Scc]:
    """SCCs that no allowed transition leaves, ordered by least state"""
    positions = _positions(aut, letters)
    if states is None and reachable_only:
        states = reachable_states(aut)
    graph = transition_graph(aut, [aut.alphabet[p] for p in positions], states)
    condensed = nx.condensation(graph)
    result = []
    for node in condensed.nodes:
        if condensed.out_degree(node) != 0:
            continue
        component = set(condensed.nodes[node]['members'])
        if _is_trivial(graph, component):
            continue
        result.append(Scc(frozenset(component), _internal_transitions(aut, component, positions)))
    result.sort(key=lambda scc: scc.min_state)
    return result

