from __future__ import annotations


class QToughError(RuntimeError):
    """Base class for every error raised by the harness."""


class InvalidParameters(QToughError):
    pass


class BudgetExceeded(QToughError):
    def __init__(self, what: str, value: int, limit: int):
        super().__init__(f"{what}={value} exceeds limit {limit}")
        self.what = what
        self.value = value
        self.limit = limit


class EigenSolverError(QToughError):
    pass


class ReducibleMatrixError(QToughError):
    pass


class GraphFormatError(QToughError):
    def __init__(self, message: str, offset: int | None = None, line: int | None = None):
        where = ""
        if offset is not None:
            where = f" at byte {offset}"
        elif line is not None:
            where = f" at line {line}"
        super().__init__(f"{message}{where}")
        self.offset = offset
        self.line = line
