"""Well-formedness, complement and size of chains of co-Buechi automata"""
from typing import List

from .core import empty_cobuchi, universal_cobuchi, validate_automaton
from .decision import dpw_contains, is_empty, is_universal
from ..models.cocoa import Cocoa
from ..models.diagnostics import Diagnostic, DiagnosticCode
from ..utils.errors import NotDeterministicError


def chain_validate(chain: Cocoa) -> List[Diagnostic]:
    """Check that consecutive member languages are properly contained.

    Diagnostics for a pair (i, i+1) carry index i. Members must be
    deterministic; determinize them first otherwise.
    """
    diagnostics = []
    for level, member in enumerate(chain.members, start=1):
        for problem in validate_automaton(member):
            diagnostics.append(Diagnostic(problem.code, problem.message, state=problem.state,
                                          symbol=problem.symbol, index=level))
    if diagnostics:
        return diagnostics

    for level, member in enumerate(chain.members, start=1):
        if not member.is_deterministic:
            raise NotDeterministicError(f"chain member {level} is not deterministic", index=level)

    for level in range(1, len(chain)):
        upper, lower = chain.member(level), chain.member(level + 1)
        contained, witness = dpw_contains(lower, upper)
        if not contained:
            diagnostics.append(Diagnostic(
                DiagnosticCode.NOT_CONTAINED,
                f"member {level + 1} accepts a word member {level} rejects",
                index=level, witness=witness))
            continue
        strict, witness = dpw_contains(upper, lower)
        if strict:
            diagnostics.append(Diagnostic(
                DiagnosticCode.NOT_STRICT,
                f"members {level} and {level + 1} accept the same language", index=level))
    return diagnostics


def cocoa_complement(chain: Cocoa) -> Cocoa:
    """Shift every chain color by one.

    A universal head is dropped; otherwise a universal member is prepended.
    A lone universal member complements to a lone empty member and back.
    """
    name = f"{chain.name}-complement"
    members = list(chain.members)
    if is_universal(members[0]):
        members = members[1:] or [empty_cobuchi(chain.alphabet)]
        return Cocoa(tuple(members), name=name)

    if len(members) == 1 and is_empty(members[0]):
        return Cocoa((universal_cobuchi(chain.alphabet),), name=name)
    members.insert(0, universal_cobuchi(chain.alphabet))
    return Cocoa(tuple(members), name=name)


def cocoa_size(chain: Cocoa) -> int:
    return sum(member.state_count for member in chain.members)
