"""
Exception types raised by the library.

The command-line suite maps them onto exit codes: everything here is a
usage or data error (exit code 2).
"""

__all__ = ('DomainError', 'CatalogError', 'PolySyntaxError',
           'UnknownCaseError')


class DomainError(ValueError):
    """
    A mathematical operation was called outside of its domain, e.g. the
    extended GCD of two zero polynomials or the p-part of zero.
    """


class CatalogError(RuntimeError):
    """
    The case catalog is internally inconsistent: a non-integral index, an
    inexact Levi quotient or a subgroup order that does not divide the group
    order.
    """


class PolySyntaxError(ValueError):
    """
    A polynomial expression could not be parsed.

    :param message: What went wrong.
    :param position: Zero-based offset into the source text.
    """

    def __init__(self, message: str, position: int):
        super().__init__('{} (at position {})'.format(message, position))
        self.position = position


class UnknownCaseError(KeyError):
    """
    A case id was requested that the catalog does not know about.
    """

    def __str__(self):
        return 'unknown case: {}'.format(self.args[0])
