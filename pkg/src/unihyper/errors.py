"""Exception hierarchy shared by every module.

Each error carries a short machine-readable ``code`` used by the CLI when
serializing failures as JSON.
"""


class HypergraphError(Exception):
    code = "error"

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class InvalidInputError(HypergraphError, ValueError):
    code = "invalid-input"


class InvalidIndexError(HypergraphError, KeyError):
    code = "invalid-index"

    def __str__(self):
        return self.detail


class InvalidVertexError(HypergraphError, KeyError):
    code = "invalid-vertex"

    def __str__(self):
        return self.detail


class UnsupportedStructureError(HypergraphError, ValueError):
    code = "unsupported-structure"


class InvalidInduceSetError(HypergraphError, ValueError):
    code = "invalid-induce-set"


class KindError(HypergraphError, TypeError):
    code = "kind-error"


class NumericInputError(HypergraphError, ValueError):
    code = "numeric-input"


class NumericalDisagreementError(HypergraphError, ArithmeticError):
    """Raised when a numeric result contradicts its exact cross-check."""

    code = "numerical-disagreement"


class SizeCapError(HypergraphError):
    code = "size-cap"


class TruncationError(HypergraphError):
    """An enumeration would exceed its limit; ``count`` holds the exact total."""

    code = "truncated"

    def __init__(self, detail: str, count: int):
        super().__init__(detail)
        self.count = count


class ParseError(HypergraphError, ValueError):
    code = "parse-error"

    def __init__(self, detail: str, line: int | None = None):
        if line is not None:
            detail = f"line {line}: {detail}"
        super().__init__(detail)
        self.line = line
