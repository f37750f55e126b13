"""Boolean constructions, breakpoint determinization and the chain-to-parity product"""
import time
from collections import deque
from typing import Callable, Hashable, List, Sequence, Tuple

from ..models.automaton import Alphabet, Automaton
from ..models.cocoa import Cocoa
from ..utils.errors import (
    AlphabetMismatchError, InvalidAutomatonError, NotCoBuchiError, NotDeterministicError
)
from ..utils.logger import get_logger


logger = get_logger("automata.constructions")

Successor = Callable[[Hashable, int], Tuple[Hashable, int]]


def build_reachable(alphabet: Alphabet, initial: Hashable, successor: Successor,
                    name: str, label: Callable[[Hashable], str] = str) -> Automaton:
    """Explore a deterministic construction breadth-first from ``initial``.

    ``successor(key, position)`` returns ``(next key, color)``; states are
    numbered in discovery order, so the initial state is 0.
    """
    index = {initial: 0}
    keys = [initial]
    steps: List[List[Tuple[int, int]]] = []
    queue = deque([initial])
    while queue:
        key = queue.popleft()
        row = []
        for position in range(len(alphabet)):
            target, color = successor(key, position)
            if target not in index:
                index[target] = len(keys)
                keys.append(target)
                queue.append(target)
            row.append((index[target], color))
        steps.append(row)
    return Automaton.from_step_table(alphabet, 0, steps, name=name,
                                     labels=[label(key) for key in keys])


def _check_members(members: Sequence[Automaton]) -> Alphabet:
    if not members:
        raise InvalidAutomatonError("at least one operand is required")
    alphabet = members[0].alphabet
    for index, member in enumerate(members, start=1):
        if member.alphabet != alphabet:
            raise AlphabetMismatchError(f"operand {index} has a different alphabet", index=index)
        if not member.is_deterministic:
            raise NotDeterministicError(f"operand {index} is not deterministic", index=index)
        if not member.is_cobuchi:
            raise NotCoBuchiError(f"operand {index} uses colors {sorted(member.colors)}",
                                  index=index)
    return alphabet


def _tuple_label(members: Sequence[Automaton], states: Tuple[int, ...]) -> str:
    return "(" + ",".join(m.label(q) for m, q in zip(members, states)) + ")"


def dcw_conjunction(members: Sequence[Automaton], name: str = "conjunction") -> Automaton:
    """Product co-Buechi automaton accepting the intersection"""
    alphabet = _check_members(members)
    tables = [member.step_table for member in members]
    start = time.time()

    def successor(states, position):
        targets, accepting = [], True
        for table, state in zip(tables, states):
            target, color = table[state][position]
            targets.append(target)
            accepting = accepting and color == 2
        return tuple(targets), 2 if accepting else 1

    result = build_reachable(alphabet, tuple(m.initial for m in members), successor, name,
                             label=lambda states: _tuple_label(members, states))
    logger.log_construction("dcw_conjunction", name, result.state_count, time.time() - start)
    return result


def dcw_disjunction(members: Sequence[Automaton], name: str = "disjunction") -> Automaton:
    """Product with a round-robin pointer accepting the union.

    The pointed member's color is the product color; the pointer moves on
    whenever that member takes a rejecting transition.
    """
    alphabet = _check_members(members)
    tables = [member.step_table for member in members]
    count = len(members)
    start = time.time()

    def successor(key, position):
        states, pointer = key
        steps = [table[state][position] for table, state in zip(tables, states)]
        color = steps[pointer][1]
        following = (pointer + 1) % count if color == 1 else pointer
        return (tuple(target for target, _ in steps), following), color

    result = build_reachable(
        alphabet, (tuple(m.initial for m in members), 0), successor, name,
        label=lambda key: f"{_tuple_label(members, key[0])}@{key[1] + 1}")
    logger.log_construction("dcw_disjunction", name, result.state_count, time.time() - start)
    return result


def mh_determinize(ncw: Automaton) -> Automaton:
    """Breakpoint construction; deterministic inputs are returned unchanged"""
    if not ncw.is_cobuchi:
        raise NotCoBuchiError(f"automaton {ncw.name} uses colors {sorted(ncw.colors)}")
    if ncw.is_deterministic:
        return ncw
    start = time.time()
    delta = ncw.delta

    def successor(key, position):
        current, pending = key
        reached = frozenset(t for q in current for t, _ in delta[q][position])
        surviving = frozenset(t for q in pending for t, c in delta[q][position] if c == 2)
        if surviving:
            return (reached, surviving), 2
        return (reached, reached), 1

    def label(key):
        current, pending = key
        return "{" + ",".join(map(str, sorted(current))) + "}/{" + \
            ",".join(map(str, sorted(pending))) + "}"

    seed = frozenset([ncw.initial])
    result = build_reachable(ncw.alphabet, (seed, seed), successor, f"{ncw.name}-det", label)
    logger.log_construction("mh_determinize", result.name, result.state_count,
                            time.time() - start, bound=3 ** ncw.state_count)
    return result


def cocoa_to_dpw(chain: Cocoa, name: str = None) -> Automaton:
    """Deterministic parity automaton for the chain language.

    The product color is the lowest index j such that member j+1 rejects on
    this step, or the chain length when every member accepts.
    """
    members = [mh_determinize(member) for member in chain.members]
    tables = [member.step_table for member in members]
    levels = len(members)
    name = name or f"{chain.name}-dpw"
    start = time.time()

    def successor(states, position):
        targets, color = [], levels
        for level, (table, state) in enumerate(zip(tables, states)):
            target, member_color = table[state][position]
            targets.append(target)
            if member_color == 1 and level < color:
                color = level
        return tuple(targets), color

    result = build_reachable(chain.alphabet, tuple(m.initial for m in members), successor, name,
                             label=lambda states: _tuple_label(members, states))
    logger.log_construction("cocoa_to_dpw", name, result.state_count, time.time() - start)
    return result


def dpw_complement(dpw: Automaton) -> Automaton:
    """Shift every color up by one"""
    if not dpw.is_deterministic:
        raise NotDeterministicError(f"automaton {dpw.name} is not deterministic")
    delta = tuple(tuple(tuple((t, c + 1) for t, c in cell) for cell in row) for row in dpw.delta)
    return Automaton(dpw.alphabet, dpw.state_count, dpw.initial, delta,
                     name=f"{dpw.name}-complement", labels=dpw.labels)
