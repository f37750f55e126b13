"""AUT v1: line-based text format for a single automaton.

    aut <name>
    alphabet <sym> <sym> ...
    states <n>
    initial <q>
    trans <src> <sym> <color> <dst>     (one line per successor entry)
    end
"""
from typing import List, Tuple

from ..automata.core import validate_automaton
from ..models.automaton import Alphabet, Automaton
from ..utils.errors import CocoaKitError, InvalidAutomatonError, ParseError


def format_aut(aut: Automaton) -> str:
    lines = [
        f"aut {aut.name}",
        "alphabet " + " ".join(aut.symbols),
        f"states {aut.state_count}",
        f"initial {aut.initial}",
    ]
    lines.extend(f"trans {src} {symbol} {color} {dst}"
                 for src, symbol, color, dst in aut.transitions())
    lines.append("end")
    return "\n".join(lines) + "\n"


def _expect(lines: List[str], index: int, keyword: str, arity: int = None) -> List[str]:
    if index >= len(lines):
        raise ParseError(f"unexpected end of input, expected '{keyword}'", line=index + 1)
    fields = lines[index].split(" ")
    if fields[0] != keyword:
        raise ParseError(f"expected '{keyword}', found {lines[index]!r}", line=index + 1)
    if arity is not None and len(fields) != arity + 1:
        raise ParseError(f"'{keyword}' takes {arity} field(s)", line=index + 1)
    return fields[1:]


def _int(text: str, index: int, what: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {text!r}", line=index + 1) from None
    if value < 0:
        raise ParseError(f"{what} must be non-negative", line=index + 1)
    return value


def parse_aut_lines(lines: List[str], start: int = 0) -> Tuple[Automaton, int]:
    """Parse one AUT block beginning at ``lines[start]``; return it and the next index"""
    index = start
    name_fields = _expect(lines, index, "aut")
    if len(name_fields) != 1 or not name_fields[0]:
        raise ParseError("'aut' takes exactly one name", line=index + 1)
    name = name_fields[0]
    index += 1

    symbols = _expect(lines, index, "alphabet")
    try:
        alphabet = Alphabet(tuple(symbols))
    except CocoaKitError as e:
        raise ParseError(e.message, line=index + 1) from None
    index += 1

    state_count = _int(_expect(lines, index, "states", 1)[0], index, "state count")
    index += 1
    initial = _int(_expect(lines, index, "initial", 1)[0], index, "initial state")
    index += 1

    entries = []
    while index < len(lines) and lines[index].startswith("trans "):
        fields = _expect(lines, index, "trans", 4)
        src = _int(fields[0], index, "source")
        if src >= state_count:
            raise ParseError(f"source state {src} out of range", line=index + 1)
        if fields[1] not in alphabet:
            raise ParseError(f"symbol {fields[1]!r} is not in the alphabet", line=index + 1)
        entries.append((src, fields[1], _int(fields[2], index, "color"),
                        _int(fields[3], index, "target")))
        index += 1

    _expect(lines, index, "end", 0)
    index += 1

    aut = Automaton.from_transitions(alphabet, state_count, initial, entries, name=name)
    diagnostics = validate_automaton(aut)
    if diagnostics:
        raise InvalidAutomatonError(f"automaton {name}: {diagnostics[0]}", diagnostics)
    return aut, index


def split_lines(text: str) -> List[str]:
    return [line.rstrip("\r") for line in text.split("\n") if line.strip()]


def parse_aut(text: str) -> Automaton:
    lines = split_lines(text)
    aut, index = parse_aut_lines(lines)
    if index != len(lines):
        raise ParseError("trailing content after 'end'", line=index + 1)
    return aut
