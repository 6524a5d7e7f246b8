class CsvFormatError(ValueError):
    """The CSV does not follow the trajectory file contract."""


class FigureValidationError(ValueError):
    """A panel request cannot be satisfied by the given data."""
