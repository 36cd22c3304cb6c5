"""Exception hierarchy shared by all modules."""


class MorphowordError(Exception):
    """Base class for library errors."""


class AlphabetMismatchError(MorphowordError, ValueError):
    pass


class ParseError(MorphowordError, ValueError):
    pass


class MathError(MorphowordError):
    """Well-formed input on which the requested object does not exist."""


class NotProlongableError(MathError, ValueError):
    pass


class FuelExhaustedError(MathError, RuntimeError):
    """A morphic image scanned its whole budget of erased letters without output.

    The image may be a finite word, in which case no infinite word exists.
    """

    def __init__(self, fuel, produced):
        self.fuel = fuel
        self.produced = produced
        super().__init__(
            f"possibly-finite image: {fuel} consecutive source letters had empty "
            f"images after {produced} output letters (scan budget fuel={fuel})"
        )


class EnumerationLimitError(MathError, RuntimeError):
    def __init__(self, cells, limit):
        self.cells = cells
        self.limit = limit
        super().__init__(
            f"enumeration needs {cells} cells, over the cap of {limit} "
            f"(raise MORPHOWORD_MAX_CELLS to allow more)"
        )


class VerificationError(MorphowordError, AssertionError):
    """An oracle gave a conclusive verdict different from the symbolic algorithm."""

    def __init__(self, report):
        self.report = report
        super().__init__(report.to_text())
