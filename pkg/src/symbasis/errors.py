"""Exception types shared across the package."""


class DataNotFoundError(LookupError):
    """Requested modular data (Brauer-Schur polynomial, decomposition matrix) is unavailable."""


class RankDeficiencyError(ValueError):
    """A basis is linearly dependent or a target lies outside its span."""

    def __init__(self, message, label=None):
        super().__init__(message)
        self.label = label


class StructureError(ValueError):
    """A matrix violates an expected structure (e.g. a nonzero off-block entry)."""

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class InvariantViolation(RuntimeError):
    """An internal combinatorial or algebraic invariant failed; indicates a bug or bad data."""


class DatasetError(ValueError):
    """A modular dataset failed validation."""

    def __init__(self, message, field=None, label=None):
        super().__init__(message)
        self.field = field
        self.label = label
