"""
Subcommand implementations

Each command writes its data to stdout and returns the exit status; errors are
recorded with the shared ErrorHandler and propagate to the dispatcher in
cli/__init__.py.
"""

import logging
import sys
from pathlib import Path

from ..config import Config
from ..encoding.syntax import format_term, parse_term
from ..error_handling import ErrorCategory, ErrorSeverity, log_errors
from ..exactnum.axioms import check_field_axioms
from ..exactnum.compact import field_structure
from ..exactnum.field_file import load_field_file
from ..exactnum.number_field import NumberField
from ..exactnum.presets import FIELD_PRESETS, get_field_preset
from ..exactnum.enumeration import enumerate_rational_indices
from ..exactnum.rational import format_rational
from ..indexing.audit import check_admissible
from ..indexing.core import SearchBudget
from ..indexing.terms import TermIndexing
from ..progress import CLIProgress
from ..qsim.circuit_file import load_circuit
from ..qsim.measurement import probabilities
from ..qsim.simulator import run_circuit
from ..registry import build_structure, entry_indexing, get_entry, term_indexing
from ..stability import run_stability_demo, translator_between
from ..tensor.permutation import parse_oracle
from ..tensor.text_format import format_state

logger = logging.getLogger(__name__)


def _warn(message: str) -> None:
    print(f"⚠️ {message}", file=sys.stderr)


def resolve_field(spec: str) -> NumberField:
    """Preset name or path of a field file"""
    if spec in FIELD_PRESETS:
        return get_field_preset(spec)
    return load_field_file(Path(spec))


@log_errors(ErrorCategory.SIMULATION, ErrorSeverity.HIGH, component="simulate")
def cmd_simulate(args, config: Config, progress: CLIProgress) -> int:
    circuit = load_circuit(args.circuit)
    initial = args.initial if args.initial is not None else "0" * circuit.qubits
    state = run_circuit(circuit, initial, progress=progress)
    print(format_state(state))
    if args.probs:
        print(probabilities(state).format_table(config.decimal_places))
    return 0


@log_errors(ErrorCategory.ENCODING, ErrorSeverity.HIGH, component="index encode")
def cmd_index_encode(args, config: Config, progress: CLIProgress) -> int:
    indexing = term_indexing(args.structure)
    tree = parse_term(args.term)
    index = indexing.index_of_term(tree)
    print(index)
    if not indexing.admits(index):
        _warn(f"{format_term(tree)} is well formed but not an admitted term of {args.structure}")
    return 0


@log_errors(ErrorCategory.ENCODING, ErrorSeverity.HIGH, component="index decode")
def cmd_index_decode(args, config: Config, progress: CLIProgress) -> int:
    indexing = entry_indexing(args.structure)
    if isinstance(indexing, TermIndexing):
        print(format_term(indexing.term_of(args.index)))
    print(indexing.describe(indexing.decode(args.index)))
    return 0


@log_errors(ErrorCategory.TRANSLATION, ErrorSeverity.HIGH, component="index translate")
def cmd_index_translate(args, config: Config, progress: CLIProgress) -> int:
    translator = translator_between(args.source, args.target, SearchBudget(config.search_budget))
    target = translator.map(args.index)
    print(target)
    print(translator.target.describe(translator.target.decode(target)))
    return 0


@log_errors(ErrorCategory.ENCODING, ErrorSeverity.HIGH, component="index audit")
def cmd_index_audit(args, config: Config, progress: CLIProgress) -> int:
    entry = get_entry(args.structure)
    samples = args.samples or config.audit_samples
    report = check_admissible(build_structure(args.structure), samples, progress,
                              operations=entry.audit_operations)
    print(f"{report.subject}: {report.checked} checks, {report.get_violation_summary()}")
    for violation in report.violations:
        print(f"  {violation}")
    return 0 if report.passed else 1


@log_errors(ErrorCategory.TRANSLATION, ErrorSeverity.HIGH, component="stability-demo")
def cmd_stability_demo(args, config: Config, progress: CLIProgress) -> int:
    try:
        oracle = parse_oracle(args.permutation)
    except ValueError as e:
        raise ValueError(f"--permutation: {e}") from None
    sample_range = args.sample_range if args.sample_range is not None else config.extraction_range
    entry = get_entry(args.structure)
    if sample_range > entry.sample_cap:
        _warn(f"the translator audit uses the first {entry.sample_cap} indices of {args.structure}")

    report = run_stability_demo(args.structure, oracle, sample_range,
                                SearchBudget(config.search_budget), progress)
    print(f"structure: {report.structure}")
    print(f"translator: {report.translator}")
    print(f"audit: {report.audit.checked} indices, {report.audit.get_violation_summary()}")
    if report.planted is not None:
        print("planted:   " + " ".join(str(p) for p in report.planted))
        print("recovered: " + " ".join(str(p) for p in report.recovered))
    print(report.verdict())
    return 0 if report.passed else 1


@log_errors(ErrorCategory.SEARCH, ErrorSeverity.HIGH, component="enumerate-q")
def cmd_enumerate_q(args, config: Config, progress: CLIProgress) -> int:
    field = resolve_field(args.field)
    count = args.count if args.count is not None else config.enumerate_count
    items = enumerate_rational_indices(field_structure(field), SearchBudget(config.search_budget), limit=count)
    skipped = 0
    for item in progress.track(items, total=count, desc="enumerate-q", unit="triple"):
        p, q, r = item.triple
        if item.skipped:
            skipped += 1
            print(f"{p} {q} {r}\t-\tskipped: {item.reason}")
        else:
            value = format_rational(item.value) if item.value is not None else "not rational"
            print(f"{p} {q} {r}\t{item.index}\t{value}")
    if skipped:
        _warn(f"{skipped} of {count} triples ran out of search budget")
    return 0


@log_errors(ErrorCategory.ARITHMETIC, ErrorSeverity.HIGH, component="field-check")
def cmd_field_check(args, config: Config, progress: CLIProgress) -> int:
    field = resolve_field(args.field)
    samples = args.samples or config.field_check_samples
    report = check_field_axioms(field, samples, config.random_seed, progress)
    print(f"field: {report.field_name} (degree {field.degree}), {samples} samples, seed {report.seed}")
    width = max(len(result.name) for result in report.results)
    for result in report.results:
        status = "pass" if result.passed else "FAIL"
        line = f"{result.name:<{width}}  {status}  {result.checked - result.failures}/{result.checked}"
        if result.witness is not None:
            line += f"  witness: {result.witness}"
        print(line)
    return 0 if report.passed else 1


COMMANDS = {
    'simulate': cmd_simulate,
    'stability-demo': cmd_stability_demo,
    'enumerate-q': cmd_enumerate_q,
    'field-check': cmd_field_check,
}

INDEX_ACTIONS = {
    'encode': cmd_index_encode,
    'decode': cmd_index_decode,
    'translate': cmd_index_translate,
    'audit': cmd_index_audit,
}
