"""
Pairing function and Gödel encoding of finite labeled trees
"""

from .pairing import (
    pair, unpair, cantor, uncantor,
    encode_tuple, decode_tuple, encode_list, decode_list,
)
from .trees import (
    Label, LabelTable, TermTree, leaf, node,
    encode_tree, decode_tree, wrap_index, split_index, reencode,
    numeral, numeral_value, numeral_index, numeral_of_index,
)
from .syntax import parse_term, format_term

__all__ = [
    'pair', 'unpair', 'cantor', 'uncantor',
    'encode_tuple', 'decode_tuple', 'encode_list', 'decode_list',
    'Label', 'LabelTable', 'TermTree', 'leaf', 'node',
    'encode_tree', 'decode_tree', 'wrap_index', 'split_index', 'reencode',
    'numeral', 'numeral_value', 'numeral_index', 'numeral_of_index',
    'parse_term', 'format_term',
]
