import pytest

from src.automata.lasso import (
    accepting_levels, cocoa_accepts, cocoa_color, default_bounds, dpw_accepts, dpw_color,
    enumerate_lassos, member_accepts, ncw_accepts, random_lassos, resolve_seed, sample_lassos
)
from src.families.example31 import gen_example31_dpw
from src.families.prop1 import gen_prop1_dpw
from src.families.windows import gen_dpw_P
from src.models.automaton import Alphabet, Automaton
from src.models.lasso_word import LassoWord
from src.utils.errors import AlphabetMismatchError, NotCoBuchiError, NotDeterministicError


class TestDpwColor:

    @pytest.mark.parametrize("text,color", [
        ("|1", 1), ("|2", 2), ("|3", 3), ("1 1|3 2", 2), ("|3 2 3", 2), ("2|1 3", 1),
    ])
    def test_one_state_colors(self, text, color):
        """On a one-state automaton the least loop color dominates"""
        dpw = gen_prop1_dpw(3)
        assert dpw_color(dpw, LassoWord.parse(text)) == color
        assert dpw_accepts(dpw, LassoWord.parse(text)) is (color % 2 == 0)

    def test_run_periodic_after_several_passes(self, ab_alphabet):
        """A toggle state makes the loop 'a' need two passes before repeating"""
        toggle = Automaton.from_step_table(ab_alphabet, 0, [
            [(1, 3), (0, 3)],
            [(0, 2), (1, 3)],
        ])
        assert dpw_color(toggle, LassoWord.parse("|a")) == 2
        assert dpw_color(toggle, LassoWord.parse("a|b")) == 3

    def test_stem_colors_do_not_count(self, finitely_many_a):
        assert dpw_color(finitely_many_a, LassoWord.parse("a a a|b")) == 2

    def test_nondeterministic_refused(self, guess_eventually_b):
        with pytest.raises(NotDeterministicError):
            dpw_color(guess_eventually_b, LassoWord.parse("|a"))

    def test_foreign_symbol(self, finitely_many_a):
        with pytest.raises(AlphabetMismatchError):
            dpw_color(finitely_many_a, LassoWord.parse("|c"))

    @pytest.mark.parametrize("dpw", [gen_prop1_dpw(3), gen_example31_dpw(), gen_dpw_P(1)],
                             ids=["prop1-3", "example31", "p-1"])
    def test_same_word_same_color(self, dpw):
        """Unrolling, doubling or rotating the loop keeps the color"""
        for word in random_lassos(dpw.alphabet.symbols, 300, 3, 4, seed=5):
            stem, loop = word.stem, word.loop
            color = dpw_color(dpw, word)
            assert dpw_color(dpw, LassoWord(stem + loop, loop)) == color
            assert dpw_color(dpw, LassoWord(stem, loop + loop)) == color
            assert dpw_color(dpw, LassoWord(stem + loop[:1], loop[1:] + loop[:1])) == color


class TestNcwAccepts:

    @pytest.mark.parametrize("text,accepted", [
        ("|b", True), ("a a|b", True), ("|a", False), ("|a b", False), ("b|b b a", False),
    ])
    def test_guessing_automaton(self, guess_eventually_b, text, accepted):
        """Some run must eventually stay on accepting transitions"""
        assert ncw_accepts(guess_eventually_b, LassoWord.parse(text)) is accepted

    def test_agrees_with_deterministic_version(self, guess_eventually_b, finitely_many_a):
        for word in enumerate_lassos(("a", "b"), 2, 3):
            assert ncw_accepts(guess_eventually_b, word) == dpw_accepts(finitely_many_a, word)

    def test_parity_refused(self):
        dpw = gen_prop1_dpw(3)
        with pytest.raises(NotCoBuchiError):
            ncw_accepts(dpw, LassoWord.parse("|1"))

    def test_member_accepts_dispatch(self, guess_eventually_b, finitely_many_a):
        word = LassoWord.parse("a|b")
        assert member_accepts(guess_eventually_b, word)
        assert member_accepts(finitely_many_a, word)


class TestCocoaColor:

    @pytest.mark.parametrize("text,color", [("|b", 1), ("|a", 0), ("b|a b", 0)])
    def test_simple_chain(self, simple_chain, text, color):
        """Color is the highest accepting level; even colors accept"""
        word = LassoWord.parse(text)
        assert cocoa_color(simple_chain, word) == color
        assert cocoa_accepts(simple_chain, word) is (color % 2 == 0)

    def test_accepting_levels(self, simple_chain):
        assert accepting_levels(simple_chain, LassoWord.parse("|b")) == [1]
        assert accepting_levels(simple_chain, LassoWord.parse("|a")) == []

    def test_foreign_symbol(self, simple_chain):
        with pytest.raises(AlphabetMismatchError):
            cocoa_color(simple_chain, LassoWord.parse("|z"))


class TestLassoEnumeration:

    def test_counts(self):
        """|stem| <= 1 and |loop| <= 2 over two letters: 3 stems times 6 loops"""
        words = list(enumerate_lassos(("a", "b"), 1, 2))
        assert len(words) == 18
        assert str(words[0]) == "|a"
        assert str(words[-1]) == "b|b b"

    def test_no_duplicates(self):
        words = list(enumerate_lassos(("a", "b", "c"), 2, 2))
        assert len(words) == len(set(words))

    def test_default_bounds(self, test_config):
        sampling = test_config["sampling"]
        assert default_bounds(Alphabet(tuple("abc")), sampling) == (2, 3)
        assert default_bounds(Alphabet(tuple(f"s{m}" for m in range(12))), sampling) == (1, 2)

    def test_default_bounds_follow_config(self, test_config):
        sampling = dict(test_config["sampling"], max_stem=1, large_alphabet_threshold=2)
        assert default_bounds(Alphabet(("a", "b")), sampling) == (1, 3)
        assert default_bounds(Alphabet(tuple("abc")), sampling) == (1, 2)

    def test_sample_lassos(self, test_config):
        """Enumeration first, then random_count seeded draws"""
        sampling = dict(test_config["sampling"], random_count=25)
        alphabet = Alphabet(("a", "b"))
        words = list(sample_lassos(alphabet, sampling))
        exhaustive = list(enumerate_lassos(("a", "b"), 2, 3))
        assert words[:len(exhaustive)] == exhaustive
        assert len(words) == len(exhaustive) + 25
        assert words == list(sample_lassos(alphabet, sampling))

    def test_random_lassos_reproducible(self):
        first = random_lassos(("a", "b"), 50, 2, 3, seed=7)
        second = random_lassos(("a", "b"), 50, 2, 3, seed=7)
        assert first == second
        assert all(len(word.stem) <= 2 and 1 <= len(word.loop) <= 3 for word in first)

    def test_seed_from_environment(self, monkeypatch):
        monkeypatch.setenv("COCOAKIT_SEED", "11")
        assert resolve_seed() == 11
        assert resolve_seed(3) == 3
        monkeypatch.delenv("COCOAKIT_SEED")
        assert resolve_seed() == 0
