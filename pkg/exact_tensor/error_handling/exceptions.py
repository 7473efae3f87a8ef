"""
Exception types raised by the exact tensor library
"""

from dataclasses import dataclass
from typing import Any, Tuple


class ExactTensorError(Exception):
    """Base class for every error raised by the library"""


class NotInImageError(ExactTensorError, ValueError):
    """A natural number outside the image of the pairing function"""


@dataclass
class TreeDecodeError(ExactTensorError):
    """Malformed tree index; position is the child path from the root"""
    position: Tuple[int, ...]
    reason: str

    def __str__(self):
        path = ".".join(str(step) for step in self.position) or "root"
        return f"cannot decode tree at {path}: {self.reason}"


class UnknownLabelError(ExactTensorError, KeyError):
    """A symbol that does not occur in the label table"""

    def __str__(self):
        return f"unknown label: {self.args[0]!r}"


@dataclass
class BudgetExhaustedError(ExactTensorError):
    """A bounded search ran out of steps before finding a witness"""
    search: str
    steps: int

    def __str__(self):
        return f"search budget exhausted in {self.search} after {self.steps} steps"


class TermRejectedError(ExactTensorError):
    """A term outside the admitted subset of a term indexing"""


class SortMismatchError(ExactTensorError):
    """A term or index used at the wrong sort"""


class TranslationError(ExactTensorError):
    """A translator cannot map an index into its target"""


class FieldMismatchError(ExactTensorError):
    """Operands belong to different number fields"""


class FieldDivisionByZeroError(ExactTensorError, ZeroDivisionError):
    """Division by the zero element"""


class InvalidFieldError(ExactTensorError):
    """Structure constants that do not describe a field"""


class MissingConjugationError(ExactTensorError):
    """The field carries no conjugation table"""


class NotABasisVectorError(ExactTensorError):
    """An index that does not denote a unit basis vector"""


class OracleRangeError(ExactTensorError):
    """A permutation oracle queried outside its tested range"""


class GateError(ExactTensorError):
    """Unknown gate, bad targets or a non-unitary matrix"""


@dataclass
class CircuitParseError(ExactTensorError):
    """Malformed circuit file line"""
    line_number: int
    line: str
    message: str

    def __str__(self):
        return f"line {self.line_number}: {self.message}: {self.line.strip()!r}"


class StateParseError(ExactTensorError):
    """Malformed state text"""


@dataclass
class TermSyntaxError(ExactTensorError):
    """Malformed textual term"""
    text: str
    offset: int
    message: str

    def __str__(self):
        return f"{self.message} at offset {self.offset} in {self.text!r}"


@dataclass
class FieldFileError(ExactTensorError):
    """Malformed field description file"""
    line_number: int
    message: str

    def __str__(self):
        return f"field file line {self.line_number}: {self.message}"


@dataclass
class ConfigValidationError(ExactTensorError):
    """Exception raised when configuration validation fails"""
    field_name: str
    value: Any
    message: str

    def __str__(self):
        return f"Configuration error in '{self.field_name}': {self.message} (value: {self.value})"
