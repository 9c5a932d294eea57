"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class UltrametricError(ValueError):
    """Base class for all errors raised by this package."""


class ValidationError(UltrametricError):
    """The supplied matrix does not define an ultrametric space."""


class NotSymmetric(ValidationError):
    def __init__(self, i: int, j: int):
        self.i, self.j = i, j
        super().__init__(f"d({i},{j}) != d({j},{i})")


class BadDiagonal(ValidationError):
    """d(i, j) == 0 must hold exactly when i == j."""

    def __init__(self, i: int, j: int):
        self.i, self.j = i, j
        if i == j:
            msg = f"d({i},{i}) must be 0"
        else:
            msg = f"d({i},{j}) is 0 for distinct points"
        super().__init__(msg)


class StrongTriangleViolated(ValidationError):
    def __init__(self, i: int, j: int, k: int, labels: tuple[str, ...] | None = None):
        self.i, self.j, self.k = i, j, k
        names = (labels[i], labels[j], labels[k]) if labels else (i, j, k)
        super().__init__(
            "strong triangle inequality fails: d({0},{1}) > max(d({0},{2}), d({2},{1}))".format(*names)
        )


class EmptySet(UltrametricError):
    pass


class TooSmall(UltrametricError):
    pass


class TooLarge(UltrametricError):
    pass


class SamePoint(UltrametricError):
    pass


class NotInSpectrum(UltrametricError):
    pass


class EmptyGraph(UltrametricError):
    pass


class NotSpanning(UltrametricError):
    pass


class NotMinimal(UltrametricError):
    pass


class EqualSets(UltrametricError):
    pass


class InvalidSpec(UltrametricError):
    pass


class ParseError(UltrametricError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class InternalError(UltrametricError):
    """An invariant that the theory guarantees did not hold."""
