import math
import random

import pytest

from src.automata.constructions import (
    build_reachable, cocoa_to_dpw, dcw_conjunction, dcw_disjunction, dpw_complement,
    mh_determinize
)
from src.automata.lasso import (
    cocoa_accepts, cocoa_color, dpw_accepts, dpw_color, enumerate_lassos, ncw_accepts
)
from src.families.cocoa_c import gen_c_member, gen_cocoa_C
from src.families.prop1 import gen_prop1_cocoa, gen_prop1_dpw
from src.families.random_automata import random_chains, random_cobuchi
from src.families.windows import gen_dcw_L, gen_dcw_Lhat
from src.models.automaton import Alphabet, Automaton
from src.models.cocoa import Cocoa
from src.utils.errors import (
    AlphabetMismatchError, InvalidAutomatonError, NotCoBuchiError, NotDeterministicError
)


@pytest.fixture(scope="module")
def random_chain_batch():
    """Twenty seeded chains, members up to 3 states over {a, b, c}"""
    return random_chains(0, 20)


class TestBuildReachable:

    def test_discovery_order(self, ab_alphabet):
        """A counter mod 3 on a, numbered as discovered"""
        aut = build_reachable(ab_alphabet, 0,
                              lambda key, position: ((key + 1) % 3 if position == 0 else key, 2),
                              "mod3")
        assert aut.state_count == 3
        assert aut.initial == 0
        assert aut.step(0, "a") == (1, 2)
        assert aut.step(2, "a") == (0, 2)
        assert aut.labels == ("0", "1", "2")


class TestConjunctionDisjunction:

    def test_conjunction_language(self, finitely_many_a, finitely_many_b):
        conjunction = dcw_conjunction([finitely_many_a, finitely_many_b])
        for word in enumerate_lassos(("a", "b"), 2, 3):
            expected = dpw_accepts(finitely_many_a, word) and dpw_accepts(finitely_many_b, word)
            assert dpw_accepts(conjunction, word) is expected

    def test_disjunction_language(self, finitely_many_a, finitely_many_b):
        """Union of 'finitely many a' and 'finitely many b'"""
        disjunction = dcw_disjunction([finitely_many_a, finitely_many_b])
        assert disjunction.is_cobuchi
        for word in enumerate_lassos(("a", "b"), 2, 3):
            expected = dpw_accepts(finitely_many_a, word) or dpw_accepts(finitely_many_b, word)
            assert dpw_accepts(disjunction, word) is expected

    def test_product_size_bounds(self):
        """Conjunction stays within |A|*|B|, disjunction within |A|*|B|*2"""
        first, second = gen_c_member(2, 1), gen_c_member(2, 2)
        assert dcw_conjunction([first, second]).state_count <= 4
        assert dcw_disjunction([first, second]).state_count <= 8

    @pytest.mark.parametrize("seed", range(50))
    def test_random_pairs(self, seed):
        """Seeded DCW pairs: size bounds and lasso agreement for both products"""
        rng = random.Random(seed)
        alphabet = Alphabet(("a", "b", "c"))
        first = random_cobuchi(rng, rng.randint(1, 4), alphabet, deterministic=True)
        second = random_cobuchi(rng, rng.randint(1, 4), alphabet, deterministic=True)
        conjunction = dcw_conjunction([first, second])
        disjunction = dcw_disjunction([first, second])
        product = first.state_count * second.state_count

        assert conjunction.state_count <= product
        assert disjunction.state_count <= product * 2
        for word in enumerate_lassos(alphabet.symbols, 2, 3):
            accepted = dpw_accepts(first, word), dpw_accepts(second, word)
            assert dpw_accepts(conjunction, word) is all(accepted)
            assert dpw_accepts(disjunction, word) is any(accepted)

    @pytest.mark.parametrize("first,second", [
        (gen_dcw_L(2, 1), gen_dcw_Lhat(2, 1)),
        (gen_dcw_L(2, 2), gen_dcw_Lhat(2, 0)),
        (gen_c_member(3, 1), gen_c_member(3, 3)),
    ])
    def test_family_pairs(self, first, second):
        product = first.state_count * second.state_count
        assert dcw_conjunction([first, second]).state_count <= product
        assert dcw_disjunction([first, second]).state_count <= product * 2

    def test_operand_checks(self, finitely_many_a, guess_eventually_b):
        with pytest.raises(InvalidAutomatonError):
            dcw_conjunction([])
        with pytest.raises(NotDeterministicError):
            dcw_disjunction([finitely_many_a, guess_eventually_b])
        other = Automaton.from_step_table(Alphabet(("a",)), 0, [[(0, 2)]])
        with pytest.raises(AlphabetMismatchError):
            dcw_conjunction([finitely_many_a, other])
        with pytest.raises(NotCoBuchiError):
            dcw_conjunction([gen_prop1_dpw(3)])


class TestDeterminization:

    def test_deterministic_input_unchanged(self, finitely_many_a):
        assert mh_determinize(finitely_many_a) is finitely_many_a

    def test_language_preserved(self, guess_eventually_b):
        """The breakpoint DCW agrees with the nondeterministic one"""
        deterministic = mh_determinize(guess_eventually_b)
        assert deterministic.is_deterministic
        assert deterministic.is_cobuchi
        assert deterministic.state_count <= 3 ** guess_eventually_b.state_count
        for word in enumerate_lassos(("a", "b"), 2, 3):
            assert dpw_accepts(deterministic, word) == ncw_accepts(guess_eventually_b, word)

    def test_parity_refused(self):
        with pytest.raises(NotCoBuchiError):
            mh_determinize(gen_prop1_dpw(3))


class TestCocoaToDpw:

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_c_chain_sizes(self, k):
        """The product of C^k has exactly 2^k reachable states and k+1 colors"""
        dpw = cocoa_to_dpw(gen_cocoa_C(k))
        assert dpw.state_count == 2 ** k
        assert dpw.colors == frozenset(range(k + 1))

    def test_colors_agree_with_chain(self):
        chain = gen_cocoa_C(2)
        dpw = cocoa_to_dpw(chain)
        for word in enumerate_lassos(chain.alphabet.symbols, 1, 2):
            assert dpw_color(dpw, word) == cocoa_color(chain, word)

    def test_prop1_chain_collapses_to_one_state(self):
        dpw = cocoa_to_dpw(gen_prop1_cocoa(3))
        assert dpw.state_count == 1
        for word in enumerate_lassos(("1", "2", "3"), 1, 2):
            assert dpw_color(dpw, word) == dpw_color(gen_prop1_dpw(3), word)

    def test_nondeterministic_members(self, guess_eventually_b, no_letters):
        """Nondeterministic members are determinized first"""
        chain = Cocoa((guess_eventually_b, no_letters))
        dpw = cocoa_to_dpw(chain, name="mixed")
        assert dpw.name == "mixed"
        for word in enumerate_lassos(("a", "b"), 2, 2):
            assert dpw_color(dpw, word) == cocoa_color(chain, word)

    @pytest.mark.parametrize("index", range(20))
    def test_random_chain_products(self, random_chain_batch, index):
        """Product within the 3^|member| bound and equal to direct chain evaluation"""
        chain = random_chain_batch[index]
        dpw = cocoa_to_dpw(chain)
        assert dpw.state_count <= math.prod(3 ** member.state_count for member in chain.members)
        for word in enumerate_lassos(chain.alphabet.symbols, 2, 3):
            assert dpw_accepts(dpw, word) is cocoa_accepts(chain, word)


class TestComplement:

    def test_shifts_colors(self):
        dpw = gen_prop1_dpw(3)
        complement = dpw_complement(dpw)
        assert complement.colors == frozenset({2, 3, 4})
        for word in enumerate_lassos(("1", "2", "3"), 1, 2):
            assert dpw_accepts(complement, word) is not dpw_accepts(dpw, word)

    def test_nondeterministic_refused(self, guess_eventually_b):
        with pytest.raises(NotDeterministicError):
            dpw_complement(guess_eventually_b)
