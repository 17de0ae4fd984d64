"""Exception types shared across the package."""


class PCChainError(Exception):
    """Base class for package-specific failures."""


class CompositionError(PCChainError):
    """Adjacent kernel matrices in a chain are not conformable."""


class DegenerateKernelError(PCChainError):
    """A kernel row summed to zero under row normalization."""


class FactorizationError(PCChainError):
    """Cholesky factorization failed even at the maximum jitter level.

    Attributes
    ----------
    jitter : float
        Largest relative jitter that was attempted before giving up.
    """

    def __init__(self, message: str, jitter: float = 0.0):
        super().__init__(message)
        self.jitter = jitter


class MCMCError(PCChainError):
    """Likelihood evaluation failed for the current chain state.

    Attributes
    ----------
    iteration : int
        Sweep index at which the chain aborted.
    """

    def __init__(self, message: str, iteration: int):
        super().__init__(message)
        self.iteration = iteration


class InsufficientSamplesError(PCChainError, ValueError):
    """Too few posterior draws for the requested summary."""


class ParseError(PCChainError, ValueError):
    """A data or configuration file failed validation.

    Attributes
    ----------
    line : int or None
        One-based line number of the offending row, when known.
    """

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
