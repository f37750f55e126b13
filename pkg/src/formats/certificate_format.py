"""S-expression text for lower-bound certificates"""
import re
from pathlib import Path
from typing import List, Union

from ..models.certificate import CertificateNode, LowerBoundCertificate
from ..models.family_params import IndexPair
from ..utils.errors import ParseError


TOKEN = re.compile(r"\(|\)|[^\s()]+")

Expression = Union[str, list]


def _format_node(node: CertificateNode, depth: int) -> List[str]:
    indent = "  " * depth
    states = " ".join(map(str, sorted(node.states)))
    letters = " ".join(node.letters)
    head = f"{indent}(node (level {node.level.i} {node.level.j}) (states {states}) (letters {letters})"
    if node.is_leaf:
        return [head + ")"]
    lines = [head]
    for child in node.children:
        lines.extend(_format_node(child, depth + 1))
    lines[-1] += ")"
    return lines


def format_certificate(certificate: LowerBoundCertificate) -> str:
    lines = ["(certificate", f"  (k {certificate.k})", f"  (bound {certificate.bound})"]
    lines.extend(_format_node(certificate.root, 1))
    lines[-1] += ")"
    return "\n".join(lines) + "\n"


def _read(text: str) -> Expression:
    tokens = TOKEN.findall(text)
    if not tokens:
        raise ParseError("empty certificate")
    position = 0

    def expression():
        nonlocal position
        if position >= len(tokens):
            raise ParseError("unbalanced parentheses in certificate")
        token = tokens[position]
        position += 1
        if token == ")":
            raise ParseError("unexpected ')' in certificate")
        if token != "(":
            return token
        items = []
        while position < len(tokens) and tokens[position] != ")":
            items.append(expression())
        if position >= len(tokens):
            raise ParseError("unbalanced parentheses in certificate")
        position += 1
        return items

    result = expression()
    if position != len(tokens):
        raise ParseError("trailing content after certificate")
    return result


def _field(items: list, name: str) -> list:
    for item in items:
        if isinstance(item, list) and item and item[0] == name:
            return item[1:]
    raise ParseError(f"certificate entry lacks '{name}'")


def _ints(values: list, name: str) -> List[int]:
    try:
        return [int(value) for value in values]
    except (TypeError, ValueError):
        raise ParseError(f"'{name}' must list integers") from None


def _node(items: Expression) -> CertificateNode:
    if not isinstance(items, list) or not items or items[0] != "node":
        raise ParseError("expected a (node ...) entry")
    level = _ints(_field(items, "level"), "level")
    if len(level) != 2:
        raise ParseError("'level' takes two integers")
    states = frozenset(_ints(_field(items, "states"), "states"))
    letters = tuple(_field(items, "letters"))
    children = tuple(_node(item) for item in items[1:]
                     if isinstance(item, list) and item and item[0] == "node")
    return CertificateNode(IndexPair(*level), states, letters, children)


def parse_certificate(text: str) -> LowerBoundCertificate:
    tree = _read(text)
    if not isinstance(tree, list) or not tree or tree[0] != "certificate":
        raise ParseError("expected (certificate ...)")
    k = _ints(_field(tree, "k"), "k")
    bound = _ints(_field(tree, "bound"), "bound")
    roots = [item for item in tree[1:] if isinstance(item, list) and item and item[0] == "node"]
    if len(k) != 1 or len(bound) != 1 or len(roots) != 1:
        raise ParseError("certificate needs one k, one bound and one root node")
    return LowerBoundCertificate(k[0], _node(roots[0]), bound[0])


def save_certificate(certificate: LowerBoundCertificate, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_certificate(certificate), encoding="utf-8")
    return path


def load_certificate(path: Union[str, Path]) -> LowerBoundCertificate:
    try:
        return parse_certificate(Path(path).read_text(encoding="utf-8"))
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}") from None
    except UnicodeDecodeError as e:
        raise ParseError(f"{path} is not valid UTF-8: {e.reason}") from None
