class SearchSpaceTooLarge(ValueError):
    """An exhaustive enumeration would exceed its configured cap.

    Raised instead of returning a partial answer, so results are always exact."""


class FormsOverlapError(ValueError):
    """The form families D_{p,c;t} are not disjoint because c <= p."""


class MalformedWitnessError(ValueError):
    """Witness partition or coefficient matrix does not fit the matrix it is checked against."""


class InvalidGeneratorError(ValueError):
    """Generator has the wrong length or spans a set that is not inside the naturals."""
