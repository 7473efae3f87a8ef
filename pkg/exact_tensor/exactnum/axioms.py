"""
Sampled field-axiom checks for number field descriptors
"""

import logging
from dataclasses import dataclass, field
from datetime import datetime
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence

import numpy as np

from ..error_handling.exceptions import ExactTensorError
from .number_field import (
    FieldElement, NumberField, format_element, nf_add, nf_conj, nf_inverse, nf_mul, polynomial_product,
)

logger = logging.getLogger(__name__)


@dataclass
class AxiomResult:
    """Outcome of one axiom over all samples; witness is the first failing tuple"""
    name: str
    checked: int = 0
    failures: int = 0
    witness: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_dict(self) -> Dict[str, Any]:
        return {'name': self.name, 'checked': self.checked, 'failures': self.failures,
                'witness': self.witness}


@dataclass
class FieldCheckReport:
    field_name: str
    samples: int
    seed: int
    results: List[AxiomResult] = field(default_factory=list)
    timestamp: datetime = field(default_factory=datetime.now)

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)

    def result(self, name: str) -> AxiomResult:
        for result in self.results:
            if result.name == name:
                return result
        raise KeyError(name)

    def failed_axioms(self) -> List[str]:
        return [result.name for result in self.results if not result.passed]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'field': self.field_name,
            'samples': self.samples,
            'seed': self.seed,
            'passed': self.passed,
            'results': [result.to_dict() for result in self.results],
            'timestamp': self.timestamp.isoformat(),
        }


def random_element(nf: NumberField, rng: np.random.Generator, bound: int = 5) -> FieldElement:
    numerators = rng.integers(-bound, bound + 1, size=nf.degree)
    denominators = rng.integers(1, bound, size=nf.degree)
    return nf.element(Fraction(int(n), int(d)) for n, d in zip(numerators, denominators))


def _describe(elements: Sequence[FieldElement]) -> str:
    return ", ".join(format_element(e) for e in elements)


def _axioms(nf: NumberField) -> Dict[str, Callable[..., bool]]:
    one = nf.one
    axioms: Dict[str, Callable[..., bool]] = {
        "commutativity": lambda a, b, c: nf_mul(a, b) == nf_mul(b, a),
        "associativity": lambda a, b, c: nf_mul(nf_mul(a, b), c) == nf_mul(a, nf_mul(b, c)),
        "distributivity": lambda a, b, c: nf_mul(a, nf_add(b, c)) == nf_add(nf_mul(a, b), nf_mul(a, c)),
        "unit": lambda a, b, c: nf_mul(one, a) == a and nf_mul(a, one) == a,
        "inverse": lambda a, b, c: a.is_zero() or nf_mul(a, nf_inverse(a)) == one,
    }
    if nf.min_poly is not None:
        axioms["polynomial-oracle"] = lambda a, b, c: nf_mul(a, b) == polynomial_product(a, b)
    if nf.conjugation is not None:
        axioms["conjugation-multiplicative"] = lambda a, b, c: nf_conj(nf_mul(a, b)) == nf_mul(nf_conj(a), nf_conj(b))
        axioms["conjugation-additive"] = lambda a, b, c: nf_conj(nf_add(a, b)) == nf_add(nf_conj(a), nf_conj(b))
        axioms["conjugation-involution"] = lambda a, b, c: nf_conj(nf_conj(a)) == a
        axioms["norm-self-conjugate"] = lambda a, b, c: nf_conj(nf_mul(a, nf_conj(a))) == nf_mul(a, nf_conj(a))
    return axioms


def check_field_axioms(nf: NumberField, samples: int = 500, seed: int = 0,
                       progress=None) -> FieldCheckReport:
    """Evaluate every axiom on `samples` random triples drawn with the given seed"""
    rng = np.random.default_rng(seed)
    axioms = _axioms(nf)
    results = {name: AxiomResult(name) for name in axioms}

    iterator = range(samples)
    if progress is not None:
        iterator = progress.track(iterator, total=samples, desc=f"field-check {nf.name}", unit="triple")

    for _ in iterator:
        triple = tuple(random_element(nf, rng) for _ in range(3))
        for name, holds in axioms.items():
            result = results[name]
            result.checked += 1
            try:
                ok = holds(*triple)
            except ExactTensorError as e:
                logger.debug("%s raised %s", name, e)
                ok = False
            if not ok:
                result.failures += 1
                if result.witness is None:
                    result.witness = _describe(triple)

    report = FieldCheckReport(nf.name, samples, seed, list(results.values()))
    if report.passed:
        logger.info("%s satisfies every sampled axiom", nf.name)
    else:
        logger.warning("%s fails: %s", nf.name, ", ".join(report.failed_axioms()))
    return report
