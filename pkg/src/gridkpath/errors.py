"""Exception hierarchy shared by every module."""


class GridError(Exception):
    """Base class for all package errors."""


class VertexOutOfGrid(GridError):
    pass


class NotContractible(GridError):
    pass


class PathIsMonotone(GridError):
    pass


class BudgetInvalid(GridError):
    pass


class EdgeNotInCycle(GridError):
    pass


class NotSolid(GridError):
    pass


class NotHamiltonian(GridError):
    pass


class BoundExceeded(GridError):
    pass


class NoSuchObject(GridError):
    """A requested cycle or path provably does not exist.

    ``reason`` is one of ``"dimensions"``, ``"parity"``, ``"range"`` or
    ``"same-vertex"``; ``details`` carries the numbers behind the verdict
    (for paths: the shortest length ``l`` and longest length ``L``).
    """

    def __init__(self, reason: str, message: str = "", **details):
        self.reason = reason
        self.details = details
        super().__init__(message or reason)

    def as_dict(self) -> dict:
        return {"error": self.reason, **self.details}


class NoCycle(NoSuchObject):
    pass


class NoSuchCycle(NoSuchObject):
    pass


class NoSuchPath(NoSuchObject):
    pass


class SameVertex(NoSuchPath):
    def __init__(self, message: str = "s and t coincide"):
        super().__init__("same-vertex", message)


class ParityMismatch(NoSuchPath):
    def __init__(self, message: str = "", **details):
        super().__init__("parity", message, **details)


class BelowShortest(NoSuchPath):
    def __init__(self, message: str = "", **details):
        super().__init__("range", message, **details)
