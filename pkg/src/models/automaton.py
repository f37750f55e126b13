from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from ..utils.errors import InvalidAutomatonError, InvalidSymbolError, NotDeterministicError


FORBIDDEN_SYMBOL_CHARS = ("|", ".")

# (state, symbol, color, target) as written in AUT files
TransitionEntry = Tuple[int, str, int, int]


@dataclass(frozen=True)
class Alphabet:
    """Ordered set of symbol names; the order is the canonical iteration order"""
    symbols: Tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, 'symbols', tuple(self.symbols))
        if not self.symbols:
            raise InvalidSymbolError("alphabet must contain at least one symbol")
        seen = set()
        for symbol in self.symbols:
            if not isinstance(symbol, str) or not symbol:
                raise InvalidSymbolError(f"invalid symbol {symbol!r}", symbol=symbol)
            if any(ch.isspace() for ch in symbol) or any(ch in symbol for ch in FORBIDDEN_SYMBOL_CHARS):
                raise InvalidSymbolError(f"symbol {symbol!r} contains a reserved character", symbol=symbol)
            if symbol in seen:
                raise InvalidSymbolError(f"duplicate symbol {symbol!r}", symbol=symbol)
            seen.add(symbol)

    @cached_property
    def _positions(self) -> Dict[str, int]:
        return {symbol: index for index, symbol in enumerate(self.symbols)}

    def index(self, symbol: str) -> int:
        try:
            return self._positions[symbol]
        except KeyError:
            raise InvalidSymbolError(f"symbol {symbol!r} is not in the alphabet", symbol=symbol) from None

    def __contains__(self, symbol) -> bool:
        return symbol in self._positions

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __getitem__(self, position: int) -> str:
        return self.symbols[position]


@dataclass(frozen=True)
class Automaton:
    """Transition-based colored omega-automaton with dense integer states.

    ``delta[q][a]`` holds the sorted, duplicate-free successor entries
    ``(target, color)`` of state ``q`` on the symbol at alphabet position ``a``.
    Co-Buechi automata are the ones whose colors lie in {1, 2}; it is a
    computed property, not a declared kind.
    """
    alphabet: Alphabet
    state_count: int
    initial: int
    delta: Tuple[Tuple[Tuple[Tuple[int, int], ...], ...], ...]
    name: str = field(default="aut", compare=False)
    labels: Tuple[str, ...] = field(default=(), compare=False)

    @classmethod
    def from_transitions(cls, alphabet: Alphabet, state_count: int, initial: int,
                         transitions: Iterable[TransitionEntry], name: str = "aut",
                         labels: Optional[Sequence[str]] = None) -> 'Automaton':
        """Build an automaton from ``(src, symbol, color, dst)`` entries.

        Missing entries are kept missing so validation can report them.
        """
        table: List[List[set]] = [[set() for _ in alphabet] for _ in range(state_count)]
        for src, symbol, color, dst in transitions:
            if not 0 <= src < state_count:
                raise InvalidAutomatonError(f"source state {src} out of range")
            table[src][alphabet.index(symbol)].add((dst, color))
        delta = tuple(tuple(tuple(sorted(cell)) for cell in row) for row in table)
        return cls(alphabet, state_count, initial, delta, name=name,
                   labels=tuple(labels) if labels else ())

    @classmethod
    def from_step_table(cls, alphabet: Alphabet, initial: int,
                        steps: Sequence[Sequence[Tuple[int, int]]], name: str = "aut",
                        labels: Optional[Sequence[str]] = None) -> 'Automaton':
        """Build a deterministic automaton from ``steps[q][a] = (target, color)``"""
        delta = tuple(tuple((cell,) for cell in row) for row in steps)
        return cls(alphabet, len(delta), initial, delta, name=name,
                   labels=tuple(labels) if labels else ())

    @property
    def symbols(self) -> Tuple[str, ...]:
        return self.alphabet.symbols

    @property
    def states(self) -> range:
        return range(self.state_count)

    def successors(self, state: int, symbol: str) -> Tuple[Tuple[int, int], ...]:
        return self.delta[state][self.alphabet.index(symbol)]

    def transitions(self) -> Iterator[TransitionEntry]:
        """Iterate ``(src, symbol, color, dst)`` in state, alphabet, target order"""
        for src, row in enumerate(self.delta):
            for position, cell in enumerate(row):
                for dst, color in cell:
                    yield src, self.alphabet[position], color, dst

    @cached_property
    def is_deterministic(self) -> bool:
        return all(len(cell) == 1 for row in self.delta for cell in row)

    @cached_property
    def colors(self) -> FrozenSet[int]:
        return frozenset(color for row in self.delta for cell in row for _, color in cell)

    @property
    def color_count(self) -> int:
        return len(self.colors)

    @cached_property
    def is_cobuchi(self) -> bool:
        return self.colors <= {1, 2}

    @cached_property
    def step_table(self) -> Tuple[Tuple[Tuple[int, int], ...], ...]:
        """``step_table[q][a] = (target, color)`` for deterministic automata"""
        if not self.is_deterministic:
            raise NotDeterministicError(f"automaton {self.name} is not deterministic")
        return tuple(tuple(cell[0] for cell in row) for row in self.delta)

    def step(self, state: int, symbol: str) -> Tuple[int, int]:
        return self.step_table[state][self.alphabet.index(symbol)]

    def with_initial(self, state: int) -> 'Automaton':
        return Automaton(self.alphabet, self.state_count, state, self.delta,
                         name=self.name, labels=self.labels)

    def renamed(self, name: str) -> 'Automaton':
        return Automaton(self.alphabet, self.state_count, self.initial, self.delta,
                         name=name, labels=self.labels)

    def label(self, state: int) -> str:
        if self.labels and state < len(self.labels):
            return self.labels[state]
        return str(state)

    def to_dict(self) -> Dict:
        return {
            'name': self.name,
            'alphabet': list(self.symbols),
            'states': self.state_count,
            'initial': self.initial,
            'deterministic': self.is_deterministic,
            'colors': sorted(self.colors),
        }


@dataclass(frozen=True)
class Scc:
    """Strongly connected component: states plus the internal transitions"""
    states: FrozenSet[int]
    transitions: FrozenSet[Tuple[int, str, int, int]] = frozenset()

    @property
    def min_state(self) -> int:
        return min(self.states)

    def __len__(self) -> int:
        return len(self.states)

    def __contains__(self, state) -> bool:
        return state in self.states
