import pytest
from pathlib import Path

# Add project root to path
import sys
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.models.automaton import Alphabet, Automaton
from src.models.cocoa import Cocoa
from src.models.lasso_word import LassoWord


@pytest.fixture
def ab_alphabet():
    """Two-letter alphabet used by the hand-written automata"""
    return Alphabet(("a", "b"))


@pytest.fixture
def finitely_many_a(ab_alphabet):
    """One-state DCW: every a is rejecting"""
    return Automaton.from_step_table(ab_alphabet, 0, [[(0, 1), (0, 2)]], name="fin-a")


@pytest.fixture
def finitely_many_b(ab_alphabet):
    """One-state DCW: every b is rejecting"""
    return Automaton.from_step_table(ab_alphabet, 0, [[(0, 2), (0, 1)]], name="fin-b")


@pytest.fixture
def no_letters(ab_alphabet):
    """One-state DCW rejecting everything"""
    return Automaton.from_step_table(ab_alphabet, 0, [[(0, 1), (0, 1)]], name="none")


@pytest.fixture
def guess_eventually_b(ab_alphabet):
    """Nondeterministic co-Buechi automaton for 'finitely many a'.

    State 0 waits and may jump to state 1 on b; state 1 rejects on a by
    moving to a dead rejecting sink (state 2).
    """
    transitions = [
        (0, "a", 1, 0), (0, "b", 1, 0), (0, "b", 1, 1),
        (1, "a", 1, 2), (1, "b", 2, 1),
        (2, "a", 1, 2), (2, "b", 1, 2),
    ]
    return Automaton.from_transitions(ab_alphabet, 3, 0, transitions, name="guess-b")


@pytest.fixture
def simple_chain(finitely_many_a, no_letters):
    """Chain fin-a > none: color 1 iff finitely many a"""
    return Cocoa((finitely_many_a, no_letters), name="simple")


@pytest.fixture
def lasso():
    """Parse helper"""
    return LassoWord.parse


@pytest.fixture
def test_config():
    """Complete test configuration"""
    return {
        "sampling": {
            "seed": 0,
            "max_stem": 2,
            "max_loop": 3,
            "large_alphabet_threshold": 8,
            "large_alphabet_max_stem": 1,
            "large_alphabet_max_loop": 2,
            "random_count": 200
        },
        "tables": {
            "max_workers": 2,
            "kmax": {
                "theorem1": 3,
                "theorem2": 2,
                "prop1": 3,
                "prop2": 2,
                "prop4": 2
            }
        },
        "logging": {
            "level": "INFO",
            "console_level": "WARNING",
            "file": "logs/test.log"
        }
    }
