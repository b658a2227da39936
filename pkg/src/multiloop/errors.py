"""Exception types shared across the package."""


class MismatchError(ValueError):
    """Operands live in different ambient structures (conductor, ring shape, dimension)."""


class StructureError(RuntimeError):
    """An algebraic consistency condition failed (bad automorphism, inconsistent solve, ...)."""


class SpecError(ValueError):
    """A session spec or CLI invocation is invalid."""
