"""Exception types shared across the package.

The CLI maps these onto exit codes: InputError -> 1, DomainError -> 2,
DegenerateBasisError -> 3.
"""


class InputError(ValueError):
    """Malformed or unreadable input (bad JSON, missing file, wrong shape)."""


class DomainError(ValueError):
    """Value outside the mathematical domain of an operation."""


class DimensionMismatchError(ValueError):
    """Operands defined on Boolean cubes of different dimension."""


class DegenerateBasisError(RuntimeError):
    """Gram matrix of a projection basis is numerically singular.

    ``index`` is the position of the basis function that is (numerically)
    a linear combination of its predecessors.
    """

    def __init__(self, index: int, message: str):
        super().__init__(message)
        self.index = index
