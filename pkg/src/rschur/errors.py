"""Exception types shared across the package."""


class RainbowSchurError(Exception):
    """Base class for every error raised by this package."""


class DomainError(RainbowSchurError, ValueError):
    """Arguments fall outside an operation's stated domain."""


class UnsupportedM(DomainError):
    """The general closed form does not cover m = 3; use rs3_formula."""


class OutsideTheoremDomain(DomainError):
    """No closed form is known for these arguments; use the search oracle."""


class EmptyInput(DomainError):
    """A coloring needs at least one element."""


class ColoringParseError(RainbowSchurError, ValueError):
    """A coloring file or string could not be parsed."""


class BudgetExceeded(RainbowSchurError, RuntimeError):
    """A search or enumeration ran past its configured resource budget.

    Carries the number of nodes explored so far and, for tree searches, the
    partial color assignment that was current when the budget ran out.
    """

    def __init__(self, message: str, nodes: int = 0, frontier: tuple = ()):
        super().__init__(message)
        self.nodes = nodes
        self.frontier = tuple(frontier)

    def __reduce__(self):
        # keep the extra attributes when crossing process boundaries
        return (type(self), (self.args[0], self.nodes, self.frontier))
