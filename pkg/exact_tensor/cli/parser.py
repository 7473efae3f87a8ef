"""
Argument parser for the exact-tensor command line
"""

import argparse

from ..exactnum.presets import FIELD_PRESETS
from ..registry import registry_names

EPILOG = """
Examples:
  exact-tensor simulate data/circuits/bell.qc --probs
  exact-tensor index encode nat-succ "S(S(0))"
  exact-tensor index translate nat-succ-swapped nat-succ 12
  exact-tensor stability-demo --structure tensor-2qubit --permutation swap-adjacent --range 32
  exact-tensor enumerate-q --field sqrt2 --count 10
  exact-tensor field-check --field data/fields/zeta8.field --samples 500
"""


def _natural(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a natural number, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a natural number, got {value}")
    return value


def _positive(text: str) -> int:
    value = _natural(text)
    if value < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="exact-tensor",
        description="Exact tensor spaces, computable indexings and Clifford+T simulation",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=EPILOG,
    )

    # Configuration options
    parser.add_argument('--config-file', type=str, help='Path to a JSON configuration file')
    parser.add_argument('--preset', choices=['default', 'quick', 'thorough'], default='default',
                        help='Configuration preset to use')
    parser.add_argument('--budget', type=_positive,
                        help='Search budget for bounded searches (overrides ET_BUDGET)')
    parser.add_argument('--no-progress', action='store_true', help='Disable progress bars')
    parser.add_argument('--log-level', choices=['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'],
                        help='Logging level for diagnostics on stderr')

    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    simulate = commands.add_parser('simulate', help='Run a circuit file exactly')
    simulate.add_argument('circuit', help='Circuit file')
    simulate.add_argument('--initial', help='Initial basis word (default: all zeros)')
    simulate.add_argument('--probs', action='store_true', help='Print the measurement report')

    index = commands.add_parser('index', help='Encode, decode, translate and audit term indexings')
    actions = index.add_subparsers(dest='action', metavar='action')
    actions.required = True
    structures = registry_names()

    encode = actions.add_parser('encode', help='Index of a term')
    encode.add_argument('structure', choices=structures)
    encode.add_argument('term', help='Term such as S(S(0))')

    decode = actions.add_parser('decode', help='Term and value of an index')
    decode.add_argument('structure', choices=structures)
    decode.add_argument('index', type=_natural)

    translate = actions.add_parser('translate', help='Translate an index into another indexing')
    translate.add_argument('source', choices=structures)
    translate.add_argument('target', choices=structures)
    translate.add_argument('index', type=_natural)

    audit = actions.add_parser('audit', help='Sampled admissibility audit of an op-table')
    audit.add_argument('structure', choices=structures)
    audit.add_argument('--samples', type=_positive, help='Argument tuples per operation')

    demo = commands.add_parser('stability-demo', help='Translator audit and permutation recovery')
    demo.add_argument('--structure', choices=structures, default='tensor-2qubit')
    demo.add_argument('--permutation', default='identity',
                      help='identity, swap-adjacent or reverse:N')
    demo.add_argument('--range', type=_natural, dest='sample_range',
                      help='Source indices to audit and basis ranks to extract')

    enumerate_q = commands.add_parser('enumerate-q', help='Indices of the rationals inside a field')
    enumerate_q.add_argument('--field', default='sqrt2',
                             help=f"Field file or preset ({', '.join(FIELD_PRESETS)})")
    enumerate_q.add_argument('--count', type=_natural, help='Number of items to list')

    field_check = commands.add_parser('field-check', help='Sampled field axioms')
    field_check.add_argument('--field', default='zeta8',
                             help=f"Field file or preset ({', '.join(FIELD_PRESETS)})")
    field_check.add_argument('--samples', type=_positive, help='Random triples to test')

    return parser
