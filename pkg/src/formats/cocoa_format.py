"""COCOA files: a header, the member AUT blocks in chain order, a footer"""
from pathlib import Path
from typing import Union

from ..models.automaton import Automaton
from ..models.cocoa import Cocoa
from ..utils.errors import CocoaKitError, ParseError
from .aut_format import format_aut, parse_aut, parse_aut_lines, split_lines


def format_cocoa(chain: Cocoa) -> str:
    parts = [f"cocoa {chain.name} {len(chain)}\n"]
    parts.extend(format_aut(member) for member in chain.members)
    parts.append("endcocoa\n")
    return "".join(parts)


def parse_cocoa(text: str) -> Cocoa:
    lines = split_lines(text)
    if not lines:
        raise ParseError("empty input", line=1)
    header = lines[0].split(" ")
    if header[0] != "cocoa" or len(header) != 3:
        raise ParseError("expected 'cocoa <name> <n>'", line=1)
    try:
        count = int(header[2])
    except ValueError:
        raise ParseError(f"member count must be an integer, got {header[2]!r}", line=1) from None
    if count < 1:
        raise ParseError("a chain needs at least one member", line=1)

    members, index = [], 1
    for _ in range(count):
        member, index = parse_aut_lines(lines, index)
        members.append(member)
    if index >= len(lines) or lines[index] != "endcocoa":
        raise ParseError("expected 'endcocoa'", line=index + 1)
    if index + 1 != len(lines):
        raise ParseError("trailing content after 'endcocoa'", line=index + 2)

    try:
        return Cocoa(tuple(members), name=header[1])
    except CocoaKitError as e:
        raise ParseError(e.message) from None


def parse_document(text: str) -> Union[Automaton, Cocoa]:
    """Parse AUT or COCOA text, chosen by the first keyword"""
    stripped = text.lstrip()
    if stripped.startswith("cocoa "):
        return parse_cocoa(text)
    return parse_aut(text)


def format_document(value: Union[Automaton, Cocoa]) -> str:
    if isinstance(value, Cocoa):
        return format_cocoa(value)
    return format_aut(value)


def load_document(path: Union[str, Path]) -> Union[Automaton, Cocoa]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}") from None
    except UnicodeDecodeError as e:
        raise ParseError(f"{path} is not valid UTF-8: {e.reason}") from None
    return parse_document(text)


def save_document(value: Union[Automaton, Cocoa], path: Union[str, Path]) -> Path:
    path = Path(path)
    if path.parent and not path.parent.exists():
        path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(format_document(value))
    return path
