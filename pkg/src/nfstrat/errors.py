"""Exception types shared across the package."""


class NFStratError(Exception):
    """Base class for analysis errors surfaced by the CLI."""


class EmptyFormula(NFStratError, ValueError):
    pass


class SizeLimit(NFStratError, ValueError):
    pass


class UnboundVariable(NFStratError, KeyError):
    def __str__(self) -> str:
        return f"unbound variable {self.args[0]!r}"


class RangeError(NFStratError, IndexError):
    pass


class PreconditionError(NFStratError, ValueError):
    pass


class UnknownDemo(NFStratError, KeyError):
    def __str__(self) -> str:
        return f"unknown demo {self.args[0]!r}"
