"""Nested-SCC lower bounds for deterministic parity automata of the C^k languages.

A node at level (i, j) is an SCC closed under the letters x_i..x_{k+1} and
y_j..y_{k+1}. While max(i, j) <= k it splits into an x-side child at
(max+1, j) and a y-side child at (i, max+1), which must be state-disjoint
for any automaton recognizing L(C^k). Leaves sit at max(i, j) = k+1, so a
tree rooted at (1, 1) has 2^k leaves and certifies 2^k states.
"""
from typing import Iterable, List, Tuple, Union

import networkx as nx

from .core import reachable_states, terminal_sccs, transition_graph
from ..models.automaton import Automaton, Scc
from ..models.certificate import CertificateNode, LowerBoundCertificate
from ..models.diagnostics import Diagnostic, DiagnosticCode
from ..models.family_params import IndexPair
from ..utils.errors import AlphabetMismatchError, LowerBoundViolation, NotDeterministicError
from ..utils.logger import get_logger


logger = get_logger("automata.lowerbound")

NOT_CLOSED = "NOT_CLOSED"
OVERLAP = "OVERLAP"
NOT_APPLICABLE = "NOT_APPLICABLE"


def level_letters(k: int, i: int, j: int) -> Tuple[str, ...]:
    return tuple(f"x_{m}" for m in range(i, k + 2)) + tuple(f"y_{m}" for m in range(j, k + 2))


def _states(scc: Union[Scc, Iterable[int]]):
    return scc.states if isinstance(scc, Scc) else frozenset(scc)


def closed_under(dpw: Automaton, scc: Union[Scc, Iterable[int]], letters: Iterable[str]) -> bool:
    """No transition on the given letters leaves the state set"""
    states = _states(scc)
    positions = [dpw.alphabet.index(symbol) for symbol in letters]
    return all(target in states
               for state in states
               for position in positions
               for target, _ in dpw.delta[state][position])


def lemma1_split(dpw: Automaton, scc: Scc, i: int, j: int, k: int) -> Tuple[Scc, Scc]:
    """Split a closed SCC into its disjoint x-side and y-side sub-SCCs"""
    top = max(i, j)
    if top > k:
        raise LowerBoundViolation(NOT_APPLICABLE, f"level ({i},{j}) is a leaf for k={k}",
                                  level=(i, j))
    if not closed_under(dpw, scc, level_letters(k, i, j)):
        raise LowerBoundViolation(NOT_CLOSED, f"SCC is not closed at level ({i},{j})",
                                  shared_states=scc.states, level=(i, j))

    x_side = _least_terminal(dpw, scc, level_letters(k, top + 1, j))
    y_side = _least_terminal(dpw, scc, level_letters(k, i, top + 1))
    shared = x_side.states & y_side.states
    if shared:
        raise LowerBoundViolation(
            OVERLAP, f"x-side and y-side SCCs below level ({i},{j}) share states {sorted(shared)}",
            shared_states=shared, level=(i, j))
    return x_side, y_side


def _least_terminal(dpw: Automaton, scc: Scc, letters: Tuple[str, ...]) -> Scc:
    return terminal_sccs(dpw, letters, states=scc.states)[0]


def _check_input(dpw: Automaton, k: int):
    if not dpw.is_deterministic:
        raise NotDeterministicError(f"automaton {dpw.name} is not deterministic")
    missing = [symbol for symbol in level_letters(k, 1, 1) if symbol not in dpw.alphabet]
    if missing:
        raise AlphabetMismatchError(f"alphabet of {dpw.name} lacks {missing} needed for k={k}",
                                    symbols=missing)


def certify_lower_bound(dpw: Automaton, k: int) -> LowerBoundCertificate:
    """Certificate that ``dpw`` needs 2^k states if it recognizes L(C^k)"""
    _check_input(dpw, k)
    root_scc = terminal_sccs(dpw, reachable_only=True)[0]

    def build(scc: Scc, i: int, j: int) -> CertificateNode:
        letters = level_letters(k, i, j)
        if max(i, j) > k:
            return CertificateNode(IndexPair(i, j), scc.states, letters, scc=scc)
        x_side, y_side = lemma1_split(dpw, scc, i, j, k)
        top = max(i, j)
        children = (build(x_side, top + 1, j), build(y_side, i, top + 1))
        return CertificateNode(IndexPair(i, j), scc.states, letters, children, scc=scc)

    root = build(root_scc, 1, 1)
    certificate = LowerBoundCertificate(k, root, root.leaf_count())
    logger.log_construction("certify_lower_bound", dpw.name, dpw.state_count,
                            bound=certificate.bound)
    return certificate


def verify_certificate(dpw: Automaton, certificate: LowerBoundCertificate,
                       k: int = None) -> List[Diagnostic]:
    """Re-check a certificate using only closure, connectivity and disjointness"""
    k = certificate.k if k is None else k
    diagnostics: List[Diagnostic] = []
    reachable = reachable_states(dpw)

    if certificate.root.level != (1, 1):
        diagnostics.append(Diagnostic(DiagnosticCode.BAD_SHAPE,
                                      f"root level is {certificate.root.level}, expected (1,1)"))

    for node in certificate.nodes():
        i, j = node.level
        where = f"node ({i},{j})"
        if not node.states:
            diagnostics.append(Diagnostic(DiagnosticCode.BAD_SHAPE, f"{where} has no states"))
            continue
        if any(state >= dpw.state_count for state in node.states):
            diagnostics.append(Diagnostic(DiagnosticCode.BAD_SHAPE,
                                          f"{where} names states outside the automaton"))
            continue
        expected = level_letters(k, i, j)
        if set(node.letters) != set(expected):
            diagnostics.append(Diagnostic(DiagnosticCode.BAD_LETTERS,
                                          f"{where} lists letters {list(node.letters)}"))
            continue
        if not closed_under(dpw, node.states, expected):
            diagnostics.append(Diagnostic(DiagnosticCode.NOT_CLOSED, f"{where} is not closed"))
        if not node.states <= reachable:
            diagnostics.append(Diagnostic(DiagnosticCode.UNREACHABLE,
                                          f"{where} contains unreachable states "
                                          f"{sorted(node.states - reachable)}"))
        graph = transition_graph(dpw, expected, node.states)
        if not nx.is_strongly_connected(graph):
            diagnostics.append(Diagnostic(DiagnosticCode.NOT_STRONGLY_CONNECTED,
                                          f"{where} is not strongly connected"))

        top = max(i, j)
        if top > k:
            if not node.is_leaf:
                diagnostics.append(Diagnostic(DiagnosticCode.BAD_SHAPE,
                                              f"{where} is past the last level but has children"))
            continue
        if len(node.children) != 2:
            diagnostics.append(Diagnostic(DiagnosticCode.BAD_SHAPE,
                                          f"{where} needs two children"))
            continue
        x_child, y_child = node.children
        if x_child.level != (top + 1, j) or y_child.level != (i, top + 1):
            diagnostics.append(Diagnostic(DiagnosticCode.BAD_SHAPE,
                                          f"{where} has children at {x_child.level}, {y_child.level}"))
        if not (x_child.states | y_child.states) <= node.states:
            diagnostics.append(Diagnostic(DiagnosticCode.BAD_SHAPE,
                                          f"{where} children leave the parent state set"))
        shared = x_child.states & y_child.states
        if shared:
            diagnostics.append(Diagnostic(DiagnosticCode.OVERLAP,
                                          f"{where} children share states {sorted(shared)}"))

    leaves = certificate.root.leaf_count()
    if certificate.bound != leaves or leaves != 2 ** k:
        diagnostics.append(Diagnostic(DiagnosticCode.BAD_BOUND,
                                      f"bound {certificate.bound} with {leaves} leaves, "
                                      f"expected {2 ** k}"))
    return diagnostics
