"""Exception types shared across the package."""


class GroupError(ValueError):
    """A group identifier is malformed or its size parameter is out of range."""


class WeightLengthError(ValueError):
    """A weight has the wrong number of coordinates for its group."""


class WeightFormatError(ValueError):
    """A weight string could not be parsed."""


class NotDominant(ValueError):
    """Raised by ``certify`` with the first violated dominance condition."""

    def __init__(self, group, weight, violation):
        self.group = group
        self.weight = weight
        self.violation = violation
        super().__init__(f"{group}: {format_coords(weight)} is not dominant ({violation})")


class NotRelevant(ValueError):
    """A τ-weight is not relevant for the given highest weight."""


class WrongGroup(ValueError):
    """An operation was called for a group it does not support."""


class OutOfRange(ValueError):
    """A catalog parameter is outside the range where the entry is defined."""


class InternalInconsistency(RuntimeError):
    """Two independent computations disagree; indicates wrong static data."""


def format_coords(coords):
    return "(" + ", ".join(str(c) for c in coords) + ")"
