"""
Term indexing of ⟨ℚ, +, -, ×, /⟩ generated by 0 and 1

Each rational a/b has exactly one admitted term (p - q) / (1 + r) with
p, q, r unary sums 1 + (1 + ... 0): p = max(a, 0), q = max(-a, 0),
r = b - 1. Every other term in 0, 1, plus, minus, times, div denotes its
value as well, so equality is decided on all terms.
"""

from fractions import Fraction
from math import gcd
from typing import Optional

from ..encoding.trees import TermTree, leaf, node
from ..indexing.naturals import unary_term, unary_value
from ..indexing.terms import (
    ConstantSpec, GenerativeSpec, OperationSpec, SortSpec, TermStructure, build_term_indexing,
)
from .rational import format_rational, rational_at, rat_arith

RATIONAL_SORT = "Q"


def canonical_rational_term(q: Fraction) -> TermTree:
    q = Fraction(q)
    a, b = q.numerator, q.denominator
    p_term = unary_term(max(a, 0))
    q_term = unary_term(max(-a, 0))
    denominator = node("plus", leaf("1"), unary_term(b - 1))
    return node("div", node("minus", p_term, q_term), denominator)


def canonical_parts(tree: TermTree) -> Optional[tuple]:
    """(p, q, r) when tree is an admitted (p - q) / (1 + r), otherwise None"""
    if tree.symbol != "div" or tree.arity != 2:
        return None
    difference, denominator = tree.children
    if difference.symbol != "minus" or difference.arity != 2:
        return None
    if denominator.symbol != "plus" or denominator.arity != 2 or denominator.children[0] != leaf("1"):
        return None
    p, q = unary_value(difference.children[0]), unary_value(difference.children[1])
    r = unary_value(denominator.children[1])
    if p is None or q is None or r is None:
        return None
    if p and q:
        return None
    if gcd(p - q, 1 + r) != 1:
        return None
    return p, q, r


def rational_term_structure(label_order: Optional[tuple] = None) -> TermStructure:
    sort = SortSpec(
        RATIONAL_SORT,
        enumerate_terms=lambda z: canonical_rational_term(rational_at(z)),
        recognizer=lambda tree: canonical_parts(tree) is not None,
        equality=lambda a, b: a == b,
        canonical_term=canonical_rational_term,
        describe=format_rational,
    )
    q2 = (RATIONAL_SORT, RATIONAL_SORT)
    return build_term_indexing(GenerativeSpec(
        name="rationals",
        sorts=(sort,),
        constants=(
            ConstantSpec("0", RATIONAL_SORT, Fraction(0)),
            ConstantSpec("1", RATIONAL_SORT, Fraction(1)),
        ),
        operations=(
            OperationSpec("plus", q2, RATIONAL_SORT, lambda a, b: rat_arith(a, b, "+")),
            OperationSpec("minus", q2, RATIONAL_SORT, lambda a, b: rat_arith(a, b, "-")),
            OperationSpec("times", q2, RATIONAL_SORT, lambda a, b: rat_arith(a, b, "×")),
            OperationSpec("div", q2, RATIONAL_SORT, lambda a, b: rat_arith(a, b, "/")),
        ),
        label_order=label_order,
    ))
