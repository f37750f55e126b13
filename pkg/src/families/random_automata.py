"""Seeded random co-Buechi automata and chains for size experiments"""
import random
from typing import List, Optional, Sequence

from ..automata.constructions import mh_determinize
from ..automata.decision import dpw_contains
from ..models.automaton import Alphabet, Automaton
from ..models.cocoa import Cocoa


def random_cobuchi(rng: random.Random, states: int, alphabet: Alphabet,
                   deterministic: bool = False, name: str = "random") -> Automaton:
    """Each (state, symbol) gets one color and one or two targets"""
    transitions = []
    for state in range(states):
        for symbol in alphabet:
            color = rng.choice((1, 2))
            fanout = 1 if deterministic else rng.randint(1, min(2, states))
            for target in rng.sample(range(states), fanout):
                transitions.append((state, symbol, color, target))
    return Automaton.from_transitions(alphabet, states, 0, transitions, name=name)


def _properly_below(candidate: Automaton, upper: Automaton) -> bool:
    lower_det, upper_det = mh_determinize(candidate), mh_determinize(upper)
    return dpw_contains(lower_det, upper_det)[0] and not dpw_contains(upper_det, lower_det)[0]


def random_chain(rng: random.Random, alphabet: Alphabet = None, length: int = 3,
                 max_states: int = 3, attempts: int = 60, deterministic: bool = False,
                 name: Optional[str] = None) -> Cocoa:
    """Grow a falling chain greedily from random candidates.

    A candidate is kept only if its language lies strictly below the current
    last member, so the result always validates; it may be shorter than
    ``length`` when the attempts run out.
    """
    alphabet = alphabet or Alphabet(("a", "b", "c"))
    members: List[Automaton] = [
        random_cobuchi(rng, rng.randint(1, max_states), alphabet, deterministic, name="member-1")]
    for _ in range(attempts):
        if len(members) >= length:
            break
        candidate = random_cobuchi(rng, rng.randint(1, max_states), alphabet, deterministic,
                                   name=f"member-{len(members) + 1}")
        if _properly_below(candidate, members[-1]):
            members.append(candidate)
    return Cocoa(tuple(members), name=name or "random-chain")


def random_chains(seed: int, count: int, **kwargs) -> Sequence[Cocoa]:
    rng = random.Random(seed)
    return [random_chain(rng, name=f"random-chain-{index}", **kwargs) for index in range(count)]
