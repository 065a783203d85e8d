"""Exception types shared across the engine."""


class IfsModelError(Exception):
    """Base class for all errors raised by this package."""


class DegenerateBasis(IfsModelError):
    """A control triangle is (numerically) collinear and cannot serve as a basis.

    Carries the offending determinant so callers can display how close to
    degenerate the triangle was.
    """

    def __init__(self, det: float, message: str | None = None):
        self.det = det
        super().__init__(message or f"degenerate control triangle (det T = {det!r})")


class OrbitDiverged(IfsModelError):
    """The chaos-game orbit left the range of finite floats.

    Only possible for expansive map systems; contractive systems always stay
    bounded.
    """


class IfsFormatError(IfsModelError):
    """Base class for IFS text format errors."""


class MalformedLine(IfsFormatError):
    """A line of an IFS file does not match the grammar."""

    def __init__(self, line: int, column: int, message: str):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class NonFiniteNumber(IfsFormatError):
    """A numeric token parsed to nan or infinity."""

    def __init__(self, line: int, column: int, token: str):
        self.line = line
        self.column = column
        self.token = token
        super().__init__(f"line {line}, column {column}: non-finite number {token!r}")


class EmptySystem(IfsFormatError):
    """An IFS file contains no map lines."""


class BadWeightSum(IfsFormatError):
    """Map weights are present but do not sum to 1."""

    def __init__(self, total: float):
        self.total = total
        super().__init__(f"map weights sum to {total!r}, expected 1 within 1e-6")
