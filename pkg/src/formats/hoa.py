"""HOA v1 export with transition-based min-even parity acceptance"""
from typing import List

from ..models.automaton import Automaton
from ..models.cocoa import Cocoa


def parity_min_even_formula(count: int) -> str:
    """Acceptance condition over sets 0..count-1, e.g. Inf(0) | (Fin(1) & Inf(2))"""
    def term(index: int) -> str:
        atom = f"Inf({index})" if index % 2 == 0 else f"Fin({index})"
        if index == count - 1:
            return atom
        operator = "|" if index % 2 == 0 else "&"
        rest = term(index + 1)
        if index + 1 < count - 1:
            rest = f"({rest})"
        return f"{atom} {operator} {rest}"
    return term(0)


def _label(position: int, size: int) -> str:
    return "&".join(str(p) if p == position else f"!{p}" for p in range(size))


def format_hoa(aut: Automaton) -> str:
    """One atomic proposition per symbol; a letter is its proposition alone"""
    size = len(aut.alphabet)
    count = max(aut.colors) + 1 if aut.colors else 1
    properties = ["trans-labels", "explicit-labels", "trans-acc", "complete"]
    if aut.is_deterministic:
        properties.append("deterministic")
    lines: List[str] = [
        "HOA: v1",
        f'name: "{aut.name}"',
        f"States: {aut.state_count}",
        f"Start: {aut.initial}",
        f"AP: {size} " + " ".join(f'"{symbol}"' for symbol in aut.symbols),
        f"acc-name: parity min even {count}",
        f"Acceptance: {count} {parity_min_even_formula(count)}",
        "properties: " + " ".join(properties),
        "--BODY--",
    ]
    for state, row in enumerate(aut.delta):
        lines.append(f'State: {state} "{aut.label(state)}"' if aut.labels else f"State: {state}")
        for position, cell in enumerate(row):
            for target, color in cell:
                lines.append(f"[{_label(position, size)}] {target} {{{color}}}")
    lines.append("--END--")
    return "\n".join(lines) + "\n"


def format_cocoa_hoa(chain: Cocoa) -> str:
    """Members exported one after another, in chain order"""
    return "".join(format_hoa(member.renamed(f"{chain.name}/{level}"))
                   for level, member in enumerate(chain.members, start=1))
