"""Exception types shared across the package."""


class EaqconvError(Exception):
    """Base class for all package errors."""


class PolyParseError(EaqconvError, ValueError):
    """Malformed polynomial or file text. Carries a character position."""

    def __init__(self, message: str, pos: int | None = None, line: int | None = None):
        detail = message
        if line is not None:
            detail += f" (line {line}"
            detail += f", column {pos})" if pos is not None else ")"
        elif pos is not None:
            detail += f" (column {pos})"
        super().__init__(detail)
        self.pos = pos
        self.line = line


class RationalEntryError(EaqconvError):
    """An operation that requires polynomial (finite-weight) entries met a
    nontrivial denominator. Callers should clear denominators first."""


class ZeroScaleError(EaqconvError):
    """Row scaling by the zero polynomial was requested."""


class ZeroDivisionPolyError(EaqconvError, ZeroDivisionError):
    """Division by the zero polynomial."""


class InconsistentFrameSizeError(EaqconvError):
    """Generators in one set disagree on the number of qubits per frame."""


class NoConvergenceError(EaqconvError):
    """The orthogonalization loop exhausted its expansion budget (step 4
    kept firing). The code should be handled as a block code instead."""

    def __init__(self, l_max: int):
        super().__init__(
            f"no expansion factor up to l={l_max} reached standard form "
            "(step 4 exhausted the expansion budget)"
        )
        self.l_max = l_max


class ReductionFailureError(EaqconvError):
    """Gate elimination could not reach the target block shape, which
    signals rank deficiency among the generators."""
