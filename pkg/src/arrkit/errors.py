"""Exception types shared across the toolkit."""


class ArrkitError(Exception):
    """Base class for all toolkit errors."""


class ZeroVector(ArrkitError):
    """A projective triple was built from (0, 0, 0)."""


class ZeroInverse(ArrkitError):
    """Inversion of the zero element was requested."""


class NotInvertible(ArrkitError):
    """Element is not invertible (possible when the modulus polynomial splits)."""


class EqualLines(ArrkitError):
    """meet() needs two distinct lines."""


class EqualPoints(ArrkitError):
    """join() needs two distinct points."""


class DuplicateLines(ArrkitError):
    """An arrangement contained a repeated line."""


class NotEssential(ArrkitError):
    """Operation requires an essential (rank-3) arrangement."""


class InvalidIndex(ArrkitError):
    """A triple index lies outside 1..C(n,3)."""


class InconsistentMatroid(ArrkitError):
    """Dependent triples do not close up to a rank-3 matroid."""


class ClosureIncomplete(ArrkitError):
    """The chosen generators do not generate all lines."""


class InconsistentIdeal(ArrkitError):
    """A dependent triple evaluated to a nonzero constant during derivation."""


class TooManyVariables(ArrkitError):
    """Point counting over F_q would need to scan too large a space."""


class PaletteExhausted(ArrkitError):
    """Could not draw enough distinct lines from the coefficient palette."""


class SearchTimeout(ArrkitError):
    """Exact subset search exceeded its budget."""
