"""Exception types shared across the package."""


class SumNonzeroError(ValueError):
    """Cartan coordinates must sum to zero."""

    code = "SUM_NONZERO"


class InternalInvariantError(RuntimeError):
    """A structural invariant that should be unbreakable failed.

    Raising this means the computation contradicts itself (for example a
    stabilizer dimension outside {2, 4, 14}); the caller must abort loudly
    rather than continue with a broken state.
    """

    code = "INTERNAL"


class NotInSpanError(ValueError):
    """An element was expected to lie in the span of a basis but does not."""


class NotBracketClosedError(ValueError):
    """A set of derivations was expected to be closed under the bracket."""
