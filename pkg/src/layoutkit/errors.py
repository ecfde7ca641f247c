"""Exception hierarchy.

All domain failures derive from :class:`LayoutError` so callers (and the CLI)
can distinguish "the operation is undefined for these values" (exit 1) from
"the input text is malformed" (exit 2, :class:`NotationError`).
"""


class LayoutError(Exception):
    """An operation was applied to values outside its domain."""

    #: short machine-parseable code, overridden by subclasses
    code = "domain-error"


class ArithmeticOverflowError(LayoutError):
    """A product or sum left the signed 64-bit range."""

    code = "overflow"


class NotTractableError(LayoutError):
    code = "not-tractable"


class NotComposableError(LayoutError):
    code = "not-composable"


class NotComplementableError(LayoutError):
    code = "not-complementable"


class NotRefinementError(LayoutError):
    code = "not-a-refinement"


class OracleCapError(LayoutError):
    code = "cap-exceeded"


class NotationError(Exception):
    """Malformed layout / morphism / tuple text."""
