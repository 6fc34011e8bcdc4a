class ParseError(ValueError):
    """Malformed poset text (bad line, unknown element)."""


class CycleError(ValueError):
    """Declared relations violate antisymmetry after closure."""


class ResourceLimitError(RuntimeError):
    """A configured size cap was exceeded."""


class PreconditionError(ValueError):
    """An operation was called outside its documented domain."""


class WitnessError(AssertionError):
    """A witness construction failed its own membership checks."""
