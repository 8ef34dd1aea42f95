"""Exception types raised across the package."""


class ImbalanceError(Exception):
    """Base class for all package errors."""


class InvalidGraph(ImbalanceError):
    pass


class NotATwinCover(ImbalanceError):
    """Raised when a vertex set is not a twin cover.

    ``witness`` is the offending vertex pair ``(u, v)``: two vertices of the
    same component of G - S that are either non-adjacent or see different
    parts of S.
    """

    def __init__(self, witness, reason=""):
        self.witness = witness
        msg = f"not a twin cover: vertices {witness[0]} and {witness[1]}"
        if reason:
            msg += f" ({reason})"
        super().__init__(msg)


class TooLarge(ImbalanceError):
    pass


class TooLargeToExpand(ImbalanceError):
    pass


class InvalidLayout(ImbalanceError):
    pass


class IncompleteSpec(ImbalanceError):
    pass


class MalformedCertificate(ImbalanceError):
    pass


class BudgetExceeded(ImbalanceError):
    pass


class StateBudgetExceeded(ImbalanceError):
    pass


class ParseError(ImbalanceError):
    pass
