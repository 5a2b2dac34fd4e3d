"""Exception hierarchy shared by every engine and the CLI."""


class OrderedPathsError(Exception):
    pass


class InvalidSpec(OrderedPathsError, ValueError):
    pass


class SizeLimitExceeded(OrderedPathsError):
    pass


class HostTooSmall(OrderedPathsError):
    pass


class TooSparse(OrderedPathsError):
    pass


class NotBipartite(OrderedPathsError):
    pass


class ResourceLimit(OrderedPathsError):
    def __init__(self, message, nodes=0):
        super().__init__(message)
        self.nodes = nodes


class WindowMiss(OrderedPathsError):
    pass


class IncompleteModel(OrderedPathsError):
    pass


class EncodingBug(OrderedPathsError):
    pass


class InvalidCertificate(OrderedPathsError):
    pass


class InvariantViolation(OrderedPathsError):
    """An internal guarantee (a proof step) failed at runtime."""


class ParseError(OrderedPathsError, ValueError):
    pass
