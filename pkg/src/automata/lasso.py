"""Evaluation of automata and chains on ultimately periodic words"""
import itertools
import os
import random
from collections import deque
from typing import Any, Iterable, Iterator, List, Mapping, Optional, Tuple

import networkx as nx

from ..models.automaton import Alphabet, Automaton
from ..models.cocoa import Cocoa
from ..models.lasso_word import LassoWord
from ..utils.errors import AlphabetMismatchError, NotCoBuchiError, NotDeterministicError


def check_alphabet(alphabet: Alphabet, word: LassoWord, name: str = "automaton"):
    foreign = sorted(symbol for symbol in word.letters if symbol not in alphabet)
    if foreign:
        raise AlphabetMismatchError(
            f"lasso {word} uses symbols {foreign} outside the alphabet of {name}",
            symbols=foreign)


def dpw_color(dpw: Automaton, word: LassoWord) -> int:
    """Dominating color of the unique run of a deterministic automaton"""
    if not dpw.is_deterministic:
        raise NotDeterministicError(f"automaton {dpw.name} is not deterministic")
    check_alphabet(dpw.alphabet, word, dpw.name)

    table = dpw.step_table
    stem = [dpw.alphabet.index(symbol) for symbol in word.stem]
    loop = [dpw.alphabet.index(symbol) for symbol in word.loop]

    state = dpw.initial
    for position in stem:
        state = table[state][position][0]

    # state at each loop start -> pass index; the run is periodic once one repeats
    first_pass = {}
    pass_minima: List[int] = []
    while state not in first_pass:
        first_pass[state] = len(pass_minima)
        lowest = None
        for position in loop:
            state, color = table[state][position]
            lowest = color if lowest is None else min(lowest, color)
        pass_minima.append(lowest)

    return min(pass_minima[first_pass[state]:])


def dpw_accepts(dpw: Automaton, word: LassoWord) -> bool:
    return dpw_color(dpw, word) % 2 == 0


def ncw_accepts(ncw: Automaton, word: LassoWord) -> bool:
    """Whether some run of a co-Buechi automaton sees color 1 only finitely often"""
    if not ncw.is_cobuchi:
        raise NotCoBuchiError(f"automaton {ncw.name} uses colors {sorted(ncw.colors)}")
    check_alphabet(ncw.alphabet, word, ncw.name)

    stem = [ncw.alphabet.index(symbol) for symbol in word.stem]
    loop = [ncw.alphabet.index(symbol) for symbol in word.loop]
    period = len(loop)

    current = {ncw.initial}
    for position in stem:
        current = {target for state in current for target, _ in ncw.delta[state][position]}

    # nodes are (state, offset into the loop)
    seen = {(state, 0) for state in current}
    queue = deque(sorted(seen))
    accepting = nx.DiGraph()
    while queue:
        state, offset = queue.popleft()
        following = (offset + 1) % period
        for target, color in ncw.delta[state][loop[offset]]:
            node = (target, following)
            if color == 2:
                accepting.add_edge((state, offset), node)
            if node not in seen:
                seen.add(node)
                queue.append(node)

    for component in nx.strongly_connected_components(accepting):
        if len(component) > 1:
            return True
        node = next(iter(component))
        if accepting.has_edge(node, node):
            return True
    return False


def member_accepts(member: Automaton, word: LassoWord) -> bool:
    if member.is_deterministic:
        return dpw_accepts(member, word)
    return ncw_accepts(member, word)


def cocoa_color(chain: Cocoa, word: LassoWord) -> int:
    """Highest chain level whose member accepts, 0 when none does"""
    check_alphabet(chain.alphabet, word, chain.name)
    for level in range(len(chain), 0, -1):
        if member_accepts(chain.member(level), word):
            return level
    return 0


def cocoa_accepts(chain: Cocoa, word: LassoWord) -> bool:
    return cocoa_color(chain, word) % 2 == 0


def accepting_levels(chain: Cocoa, word: LassoWord) -> List[int]:
    check_alphabet(chain.alphabet, word, chain.name)
    return [level for level in range(1, len(chain) + 1)
            if member_accepts(chain.member(level), word)]


def default_bounds(alphabet: Alphabet, sampling: Mapping[str, Any]) -> Tuple[int, int]:
    """(max stem, max loop) for exhaustive enumeration over this alphabet.

    ``sampling`` is the ``sampling`` config section; alphabets above
    ``large_alphabet_threshold`` symbols get the large-alphabet bounds.
    """
    if len(alphabet) <= sampling['large_alphabet_threshold']:
        return sampling['max_stem'], sampling['max_loop']
    return sampling['large_alphabet_max_stem'], sampling['large_alphabet_max_loop']


def sample_lassos(alphabet: Alphabet, sampling: Mapping[str, Any],
                  seed: Optional[int] = None) -> Iterator[LassoWord]:
    """Bounded-exhaustive lassos followed by ``random_count`` seeded random ones"""
    max_stem, max_loop = default_bounds(alphabet, sampling)
    yield from enumerate_lassos(alphabet.symbols, max_stem, max_loop)
    if seed is None:
        seed = sampling.get('seed')
    yield from random_lassos(alphabet.symbols, sampling['random_count'], max_stem + 2,
                             max_loop + 2, seed=seed)

def enumerate_lassos(symbols: Iterable[str], max_stem: int, max_loop: int) -> Iterator[LassoWord]:
    """All lassos with |stem| <= max_stem and 1 <= |loop| <= max_loop.

    Ordered by stem length, stem, loop length, loop; letters follow the given order.
    """
    symbols = tuple(symbols)
    for stem_length in range(max_stem + 1):
        for stem in itertools.product(symbols, repeat=stem_length):
            for loop_length in range(1, max_loop + 1):
                for loop in itertools.product(symbols, repeat=loop_length):
                    yield LassoWord(stem, loop)


def resolve_seed(seed: Optional[int] = None) -> int:
    if seed is not None:
        return seed
    return int(os.environ.get("COCOAKIT_SEED", 0))


def random_lassos(symbols: Iterable[str], count: int, max_stem: int, max_loop: int,
                  seed: Optional[int] = None) -> List[LassoWord]:
    """Reproducible random lassos; stem and loop lengths are drawn uniformly"""
    symbols = tuple(symbols)
    rng = random.Random(resolve_seed(seed))
    words = []
    for _ in range(count):
        stem = [rng.choice(symbols) for _ in range(rng.randint(0, max_stem))]
        loop = [rng.choice(symbols) for _ in range(rng.randint(1, max_loop))]
        words.append(LassoWord(tuple(stem), tuple(loop)))
    return words
