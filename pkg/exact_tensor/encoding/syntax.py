"""
Textual tree syntax: S(S(0)), plus(x,y)
"""

import re
from typing import List, Tuple

from ..error_handling.exceptions import TermSyntaxError
from .trees import TermTree

_TOKEN = re.compile(r"\s*(?:(?P<symbol>[A-Za-z0-9_]+)|(?P<punct>[(),]))")


def _tokenize(text: str) -> List[Tuple[str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN.match(text, pos)
        if not match:
            raise TermSyntaxError(text, pos, f"unexpected character {text[pos]!r}")
        tokens.append((match.group("symbol") or match.group("punct"), match.start(match.lastgroup)))
        pos = match.end()
    return tokens


def parse_term(text: str) -> TermTree:
    """Parse the textual syntax into a TermTree"""
    tokens = _tokenize(text)
    if not tokens:
        raise TermSyntaxError(text, 0, "empty term")

    def parse(k: int) -> Tuple[TermTree, int]:
        if k >= len(tokens):
            raise TermSyntaxError(text, len(text), "unexpected end of term")
        symbol, offset = tokens[k]
        if symbol in "(),":
            raise TermSyntaxError(text, offset, f"expected a symbol, found {symbol!r}")
        k += 1
        if k < len(tokens) and tokens[k][0] == "(":
            children = []
            k += 1
            while True:
                child, k = parse(k)
                children.append(child)
                if k >= len(tokens):
                    raise TermSyntaxError(text, len(text), "missing ')'")
                punct, offset = tokens[k]
                k += 1
                if punct == ")":
                    break
                if punct != ",":
                    raise TermSyntaxError(text, offset, f"expected ',' or ')', found {punct!r}")
            return TermTree(symbol, tuple(children)), k
        return TermTree(symbol), k

    tree, k = parse(0)
    if k != len(tokens):
        raise TermSyntaxError(text, tokens[k][1], "trailing input")
    return tree


def format_term(tree: TermTree) -> str:
    return str(tree)
