"""
Admissibility audits of op-tables
"""

import logging
from dataclasses import dataclass, field
from datetime import datetime
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..encoding.pairing import decode_tuple

logger = logging.getLogger(__name__)


@dataclass
class AuditViolation:
    """One sampled argument tuple where an implementation disagrees with its operation"""
    operation: str
    arguments: Tuple[int, ...]
    expected: str
    actual: Optional[str]
    reason: str

    def to_dict(self) -> Dict[str, Any]:
        return {
            'operation': self.operation,
            'arguments': list(self.arguments),
            'expected': self.expected,
            'actual': self.actual,
            'reason': self.reason,
        }

    def __str__(self) -> str:
        args = ", ".join(str(a) for a in self.arguments)
        return f"{self.operation}({args}): expected {self.expected}, got {self.actual} ({self.reason})"


@dataclass
class AuditReport:
    """Result of an admissibility or translator check"""
    subject: str
    checked: int = 0
    violations: List[AuditViolation] = field(default_factory=list)
    timestamp: datetime = field(default_factory=datetime.now)

    @property
    def passed(self) -> bool:
        return not self.violations

    def get_violation_summary(self) -> str:
        if not self.violations:
            return "No violations"
        operations = sorted({v.operation for v in self.violations})
        return f"{len(self.violations)} violations in {', '.join(operations)}"

    def to_dict(self) -> Dict[str, Any]:
        return {
            'subject': self.subject,
            'checked': self.checked,
            'passed': self.passed,
            'violations': [v.to_dict() for v in self.violations],
            'timestamp': self.timestamp.isoformat(),
        }


def check_admissible(structure, samples: int, progress=None,
                     operations: Optional[Sequence[str]] = None) -> AuditReport:
    """
    Sample argument tuples from the enumerations and compare op-table
    entries with the operations they claim to compute

    The t-th tuple of an n-ary operation is decode_tuple(t, n) pushed through
    the argument sorts' enumerators. A tuple outside the operation's domain
    (the operation itself raises ArithmeticError) is skipped. Results of
    closed entries must also be admitted indices of the result sort.
    `operations` limits the audit to the named entries.
    """
    report = AuditReport(subject=f"op-table of {structure.name}")
    if operations is None:
        operations = list(structure.operations.values())
    else:
        operations = [structure.operation(symbol) for symbol in operations]
    iterator = progress.track(operations, desc="audit", unit="op") if progress else operations

    for operation in iterator:
        result_indexing = structure.sort(operation.result_sort)
        arg_indexings = [structure.sort(sort) for sort in operation.arg_sorts]
        for t in range(samples):
            positions = decode_tuple(t, operation.arity) if operation.arity else ()
            args = tuple(indexing.enumerate(z) for indexing, z in zip(arg_indexings, positions))
            try:
                expected = operation.semantics(*(
                    indexing.decode(x) for indexing, x in zip(arg_indexings, args)
                ))
            except ArithmeticError:
                continue

            report.checked += 1
            try:
                result = operation.implementation(*args)
                actual = result_indexing.decode(result)
            except Exception as e:
                report.violations.append(AuditViolation(
                    operation.symbol, args, result_indexing.describe(expected), None,
                    f"{type(e).__name__}: {e}",
                ))
                continue
            if operation.closed and not result_indexing.admits(result):
                report.violations.append(AuditViolation(
                    operation.symbol, args, result_indexing.describe(expected),
                    result_indexing.describe(actual), "result is not an admitted index",
                ))
            elif not result_indexing.equality(actual, expected):
                report.violations.append(AuditViolation(
                    operation.symbol, args, result_indexing.describe(expected),
                    result_indexing.describe(actual), "decoded result differs",
                ))

    for sort, indexing in structure.sorts.items():
        for x in indexing.prefix(min(samples, 4)):
            report.checked += 1
            if indexing.eq(x, x) != 1:
                report.violations.append(AuditViolation(
                    f"eq[{sort}]", (x, x), "1", "0", "equality is not reflexive",
                ))

    if report.passed:
        logger.info("audit of %s passed (%d checks)", structure.name, report.checked)
    else:
        logger.warning("audit of %s: %s", structure.name, report.get_violation_summary())
    return report
