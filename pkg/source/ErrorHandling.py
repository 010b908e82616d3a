from typing import Optional, Tuple


class CoreException(Exception):
    def __init__(
            self,
            where: str,
            what: str,
            summary: str = "",
            full_message: Optional[str] = None,
            fatal: bool = False
    ):
        self.where = where
        self.what = what
        self.summary = summary
        self.msg_string = f"Exception at {where}: {what}.{' Summary: ' + summary if summary else ''}{chr(10) + full_message if full_message else ''}"
        self.fatal = fatal
        super().__init__(self.msg_string)


class AbsentOperationError(CoreException):
    def __init__(self, where: str, which: str):
        super().__init__(where, f"operation table '{which}' is absent")
        self.which = which


class NotAPartialOrderError(CoreException):
    def __init__(self, where: str, failing_flags: Tuple[str, ...]):
        super().__init__(where, "relation is not a partial order", ", ".join(failing_flags) + " failed")
        self.failing_flags = failing_flags


class NoMeetError(CoreException):
    def __init__(self, where: str, witness: Tuple[int, int]):
        super().__init__(where, "no greatest lower bound", f"pair {witness}")
        self.witness = witness


class PreconditionViolation(CoreException):
    def __init__(self, where: str, gate: str, summary: str = ""):
        super().__init__(where, f"precondition '{gate}' violated", summary)
        self.gate = gate


class RepresentationPreconditionFailed(PreconditionViolation):
    def __init__(self, where: str, summary: str = ""):
        super().__init__(where, "representation", summary)


class SizeCapExceeded(CoreException):
    def __init__(self, where: str, size: int, cap: int):
        super().__init__(where, f"size {size} exceeds cap {cap}")
        self.size = size
        self.cap = cap


class IntervalDivisionError(CoreException):
    def __init__(self, where: str, divisor):
        super().__init__(where, "division by an interval containing zero", str(divisor))


class InvalidIntervalError(CoreException):
    def __init__(self, where: str, lo, hi):
        super().__init__(where, f"invalid interval [{lo}, {hi}]", "lower endpoint above upper endpoint")


class GridSpecError(CoreException):
    pass


class AlgebraParseError(CoreException):
    def __init__(self, line: int, column: int, what: str):
        super().__init__(f"line {line}, column {column}", what)
        self.line = line
        self.column = column


class UnknownSystemError(CoreException):
    def __init__(self, name: str, known):
        super().__init__("registry", f"unknown system '{name}'", "known: " + ", ".join(known))
        self.name = name


class UnknownDemoError(CoreException):
    def __init__(self, name: str, known):
        super().__init__("demo", f"unknown demo '{name}'", "known: " + ", ".join(known))
        self.name = name


class InvalidAlgebraError(CoreException):
    def __init__(self, what: str, summary: str = ""):
        super().__init__("FiniteAlgebra", what, summary)
