"""Exception types shared across the package."""


class WPHodgeError(Exception):
    """Base class for all package errors."""


class EmptyInput(WPHodgeError):
    """Fewer than two weights were supplied."""


class RangeError(WPHodgeError):
    """A numeric argument is outside its admissible range."""


class WellFormednessError(WPHodgeError):
    """Some n of the n+1 weights share a common factor.

    ``index`` is the omitted position: the remaining weights have hcf > 1.
    """

    def __init__(self, index: int, hcf: int, weights):
        self.index = index
        self.hcf = hcf
        self.weights = tuple(weights)
        super().__init__(
            f"weights {self.weights} are not well-formed: omitting index "
            f"{index} leaves hcf {hcf}"
        )


class OverlapError(WPHodgeError):
    """The alpha and beta parameter multisets share an entry."""


class ConjugationError(WPHodgeError):
    """A parameter multiset is not stable under q -> -q mod 1."""


class ResourceError(WPHodgeError):
    """An enumeration exceeded its configured visit budget."""


class LinearConeNotice(WPHodgeError):
    """The hypersurface degree equals one of the weights (linear cone)."""


class DimensionError(WPHodgeError):
    """An operation restricted to a specific dimension was called outside it."""


class DegreeError(WPHodgeError):
    """A generated monomial failed its degree invariant (internal bug)."""


class MismatchError(WPHodgeError):
    """A golden-table comparison diverged.

    ``row`` is 1-based, ``column`` is the field name.
    """

    def __init__(self, row: int, column: str, expected, got):
        self.row = row
        self.column = column
        self.expected = expected
        self.got = got
        super().__init__(
            f"table mismatch at row {row}, column {column!r}: "
            f"expected {expected!r}, got {got!r}"
        )
