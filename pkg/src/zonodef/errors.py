class EffortCapExceeded(RuntimeError):
    """A computation would exceed a configured size limit and was refused."""


class NotK4Free(ValueError):
    pass


class NotADeformation(ValueError):
    """A length vector violates nonnegativity or a polygonal face equation."""
