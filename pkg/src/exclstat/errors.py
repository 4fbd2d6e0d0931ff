"""Exception hierarchy shared by all modules."""


class ExclStatError(Exception):
    """Base class for errors raised by this package."""


class DomainError(ExclStatError, ValueError):
    """An argument lies outside the domain of the requested quantity."""


class NoSignChange(ExclStatError, ValueError):
    """A root bracket does not enclose a sign change."""


class NoConvergence(ExclStatError, ArithmeticError):
    """An iterative procedure exhausted its budget before meeting tolerance."""


class OutsideRadius(DomainError):
    """A power series was evaluated at or beyond its radius of convergence."""


class TailTooLarge(ExclStatError, ArithmeticError):
    """A truncated series still has terms above the requested tail bound."""


class SkippedOutsideRadius(ExclStatError):
    """A series identity check was requested outside its convergence region."""
