"""Exception types shared across the package."""


class FrameCondError(Exception):
    """Base class for all framecond errors."""


class NotSymmetricError(FrameCondError, ValueError):
    """Matrix input is not (numerically) symmetric or not square."""


class NotPositiveSemidefiniteError(FrameCondError, ValueError):
    """Matrix has an eigenvalue below the PSD tolerance."""


class NotAFrameError(FrameCondError, ValueError):
    """Vector system does not span the ambient space."""


class DegenerateSpectrumError(FrameCondError, ValueError):
    """Operation requires a simple spectrum but eigenvalues repeat."""


class DisconnectedGraphError(FrameCondError, ValueError):
    """Operation requires a connected graph."""


class InfeasibleProblemError(FrameCondError, RuntimeError):
    """Optimization problem has no feasible point."""


class SolverError(FrameCondError, RuntimeError):
    """Numerical solver failed to make progress."""


class ParseError(FrameCondError, ValueError):
    """Input file could not be parsed.

    Carries the 1-based line number (and column, when known) of the
    offending token so CLI diagnostics can point at it.
    """

    def __init__(self, message, line=None, column=None):
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + loc)
        self.line = line
        self.column = column
