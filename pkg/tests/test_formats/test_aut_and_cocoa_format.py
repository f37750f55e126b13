import pytest

from src.automata.lasso import cocoa_color, enumerate_lassos
from src.families.cocoa_c import gen_cocoa_C
from src.formats import (
    format_aut, format_cocoa, load_document, parse_aut, parse_cocoa, parse_document,
    save_document
)
from src.models.automaton import Automaton
from src.models.cocoa import Cocoa
from src.utils.errors import InvalidAutomatonError, ParseError


FIN_A_TEXT = """aut fin-a
alphabet a b
states 1
initial 0
trans 0 a 1 0
trans 0 b 2 0
end
"""


class TestAutFormat:

    def test_format(self, finitely_many_a):
        assert format_aut(finitely_many_a) == FIN_A_TEXT

    def test_parse(self, finitely_many_a):
        parsed = parse_aut(FIN_A_TEXT)
        assert parsed == finitely_many_a
        assert parsed.name == "fin-a"

    def test_nondeterministic_entries_survive(self, guess_eventually_b):
        parsed = parse_aut(format_aut(guess_eventually_b))
        assert parsed == guess_eventually_b
        assert not parsed.is_deterministic

    def test_blank_lines_ignored(self, finitely_many_a):
        assert parse_aut("\n" + FIN_A_TEXT.replace("states 1\n", "states 1\n\n")) == finitely_many_a

    @pytest.mark.parametrize("text,line", [
        (FIN_A_TEXT.replace("trans 0 a 1 0", "trans 0 c 1 0"), 5),
        (FIN_A_TEXT.replace("states 1", "states one"), 3),
        (FIN_A_TEXT.replace("initial 0", "start 0"), 4),
        (FIN_A_TEXT.replace("trans 0 b 2 0", "trans 3 b 2 0"), 6),
        (FIN_A_TEXT.replace("end\n", ""), 7),
    ])
    def test_parse_errors_carry_line(self, text, line):
        with pytest.raises(ParseError) as excinfo:
            parse_aut(text)
        assert excinfo.value.line == line
        assert str(excinfo.value).startswith(f"line {line}:")

    def test_incomplete_automaton_rejected(self):
        """Structurally broken input fails validation after parsing"""
        text = FIN_A_TEXT.replace("trans 0 b 2 0\n", "")
        with pytest.raises(InvalidAutomatonError) as excinfo:
            parse_aut(text)
        assert excinfo.value.diagnostics

    def test_trailing_content(self):
        with pytest.raises(ParseError):
            parse_aut(FIN_A_TEXT + "end\n")


class TestCocoaFormat:

    def test_format_layout(self, simple_chain):
        text = format_cocoa(simple_chain)
        assert text.startswith("cocoa simple 2\naut fin-a\n")
        assert text.endswith("end\nendcocoa\n")

    def test_parse_keeps_languages(self):
        chain = gen_cocoa_C(2)
        parsed = parse_cocoa(format_cocoa(chain))
        assert parsed == chain
        for word in enumerate_lassos(chain.alphabet.symbols, 1, 2):
            assert cocoa_color(parsed, word) == cocoa_color(chain, word)

    def test_member_count_mismatch(self, simple_chain):
        text = format_cocoa(simple_chain).replace("cocoa simple 2", "cocoa simple 3")
        with pytest.raises(ParseError):
            parse_cocoa(text)

    def test_bad_header(self):
        with pytest.raises(ParseError) as excinfo:
            parse_cocoa("cocoa only-name\n")
        assert excinfo.value.line == 1

    def test_parse_document_dispatch(self, simple_chain, finitely_many_a):
        assert isinstance(parse_document(format_cocoa(simple_chain)), Cocoa)
        assert isinstance(parse_document(FIN_A_TEXT), Automaton)

    def test_save_and_load(self, tmp_path, simple_chain):
        path = save_document(simple_chain, tmp_path / "nested" / "simple.cocoa")
        assert path.exists()
        assert load_document(path) == simple_chain

    def test_load_missing_file(self, tmp_path):
        with pytest.raises(ParseError):
            load_document(tmp_path / "missing.aut")

    def test_load_invalid_utf8(self, tmp_path):
        path = tmp_path / "bad.aut"
        path.write_bytes(b"aut bad\nalphabet \xff\xfe\nstates 1\ninitial 0\nend\n")
        with pytest.raises(ParseError, match="not valid UTF-8"):
            load_document(path)
