from typing import Any, FrozenSet, List, Optional


class CocoaKitError(Exception):
    """Base class for all errors raised by cocoa-kit"""

    code = "COCOAKIT_ERROR"

    def __init__(self, message: str, **context: Any):
        super().__init__(message)
        self.message = message
        self.context = context

    def to_dict(self):
        return {"code": self.code, "message": self.message, **self.context}


class AlphabetMismatchError(CocoaKitError):
    code = "ALPHABET_MISMATCH"


class NotDeterministicError(CocoaKitError):
    code = "NOT_DETERMINISTIC"

    def __init__(self, message: str, index: Optional[int] = None):
        super().__init__(message, index=index)
        self.index = index


class NotCoBuchiError(CocoaKitError):
    code = "NOT_COBUCHI"


class NotBijectiveError(CocoaKitError):
    code = "NOT_BIJECTIVE"


class IndexOutOfRangeError(CocoaKitError):
    code = "INDEX_OUT_OF_RANGE"


class InvalidSymbolError(CocoaKitError):
    code = "INVALID_SYMBOL"


class LassoSyntaxError(CocoaKitError):
    code = "LASSO_SYNTAX"


class InvalidAutomatonError(CocoaKitError):
    """Raised when an automaton violates structural invariants"""

    code = "INVALID_AUTOMATON"

    def __init__(self, message: str, diagnostics: List[Any] = None):
        super().__init__(message)
        self.diagnostics = list(diagnostics or [])


class ParseError(CocoaKitError):
    code = "PARSE_ERROR"

    def __init__(self, message: str, line: Optional[int] = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message, line=line)
        self.line = line


class LowerBoundViolation(CocoaKitError):
    """A nested-SCC argument could not be carried out on the given automaton"""

    code = "LOWER_BOUND_VIOLATION"

    def __init__(self, code: str, message: str,
                 shared_states: FrozenSet[int] = frozenset(),
                 level: Optional[tuple] = None):
        super().__init__(message, shared_states=sorted(shared_states), level=level)
        self.code = code
        self.shared_states = frozenset(shared_states)
        self.level = level
