class VknotError(ValueError):
    """Base class for every input error raised by the library."""


class GaussSyntaxError(VknotError):
    """Raised when a `.gauss` token cannot be read."""

    def __init__(self, message: str, *, line: int = 0, token: str = ""):
        self.line = line
        self.token = token
        where = f"line {line}: " if line else ""
        super().__init__(f"{where}{message}")


class PairingError(VknotError):
    """Raised when a crossing id is not written exactly once as O and once as U."""

    def __init__(self, crossing_id: int, message: str):
        self.crossing_id = crossing_id
        super().__init__(f"crossing {crossing_id}: {message}")


class SignConflictError(VknotError):
    """Raised when the same crossing id is written with two different signs."""

    def __init__(self, crossing_id: int):
        self.crossing_id = crossing_id
        super().__init__(f"crossing {crossing_id}: written with both signs")


class CutSystemError(VknotError):
    """Raised for dangling cut marks or cut systems that admit no numbering."""


class NumberingError(VknotError):
    """Raised when a numbering does not solve the constraint graph it is used with."""


class InapplicableMoveError(VknotError):
    """Raised when a move spec does not describe a site of the target diagram."""


class CoveringError(VknotError):
    """Raised for covering requests that make no sense (e.g. zero sheets)."""
