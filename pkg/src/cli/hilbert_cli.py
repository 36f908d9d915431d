#!/usr/bin/env python3
"""
Invariant Hilbert Series CLI

Command-line surface for computing Hilbert series of invariant rings,
exterior invariant polynomials, branching decompositions and
Littlewood-Richardson coefficients, with oracle cross-checks and golden
catalog comparison.
"""

import argparse
import json
import logging
import os
import sys
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

# Add parent directory to path for imports
sys.path.append(os.path.join(os.path.dirname(__file__), '..'))
from hilbert_errors import HilbertError, InvalidInputError, InternalInconsistencyError, UnsupportedGroupError
from partition_core import Partition
from symfunc import lr_coefficient
from branching import (
    GroupId, GroupKind, DepthConvention, DEFAULT_DEPTH_CONVENTION, branch,
    trivial_multiplicity_via_branching
)
from hilbert_engine import HilbertEngine, TruncatedSeries, parse_module_spec
from exterior_invariants import (
    ExteriorKind, exterior_invariant_poly, closed_form_exterior, known_generator_degrees
)
from rational_series import golden_entries, golden_entry
from verification import SeriesVerifier
from cli.config import RunConfig, Oracle, OutputFormat, load_config, LOG_LEVEL_ENV

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 2
EXIT_USAGE = 3
EXIT_INTERNAL = 4


class Command(Enum):
    SERIES = "series"
    EXTERIOR = "exterior"
    BRANCH = "branch"
    LR = "lr"
    GOLDEN = "golden"


class HilbertArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that reports usage errors with the CLI's usage exit code"""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _oracle_series(engine: HilbertEngine, group: GroupId, oracle: Oracle) -> TruncatedSeries:
    if group.kind == GroupKind.O:
        raise UnsupportedGroupError(f"Oracle {oracle.value} is not available for {group}")
    if oracle == Oracle.WEYL:
        from oracle import hilbert_series_weyl
        return hilbert_series_weyl(engine.spec, group, engine.maxdeg, characters=engine.characters())

    coeffs = [0] * (engine.maxdeg + 1)
    for degree, partition, multiplicity in engine.table().terms():
        coeffs[degree] += multiplicity * trivial_multiplicity_via_branching(partition, group)
    return TruncatedSeries(coeffs, engine.maxdeg)


def run(config: RunConfig) -> Dict[str, Any]:
    """
    Compute the Hilbert series of C[W]^G described by config

    Args:
        config: Validated run configuration

    Returns:
        Report dictionary with keys group, n, maxdeg, coeffs, spec and, when
        requested, oracle and golden sections plus an overall verdict
    """
    spec = parse_module_spec(config.spec_text, config.group.n)
    logger.info(f"Computing {config.group} invariants of {spec} to degree {config.maxdeg}")

    engine = HilbertEngine(spec, config.maxdeg, config.workers)
    series = engine.series(config.group)
    report: Dict[str, Any] = {
        'group': config.group.kind.value,
        'n': config.group.n,
        'maxdeg': config.maxdeg,
        'coeffs': series.to_list(),
        'spec': spec.format()
    }
    verifier = SeriesVerifier(config.workers)
    verdicts: List[bool] = []

    if config.oracle != Oracle.NONE:
        oracle_series = _oracle_series(engine, config.group, config.oracle)
        result = verifier.compare(oracle_series, series, f"{config.oracle.value} oracle")
        report['oracle'] = {
            'name': config.oracle.value,
            'coeffs': oracle_series.to_list(),
            'diff': [a - b for a, b in zip(series.to_list(), oracle_series.to_list())],
            'verdict': result.verdict
        }
        verdicts.append(result.success)

    if config.golden_key:
        entry = golden_entry(config.golden_key, config.golden_catalog)
        if entry.group != config.group:
            raise InvalidInputError(f"Golden entry {entry.key} is for {entry.group}, not {config.group}")
        if parse_module_spec(entry.spec_text, entry.group.n) != spec:
            logger.warning(f"Golden entry {entry.key} describes {entry.spec_text}, run uses {config.spec_text}")
        result = verifier.verify_golden(entry, config.maxdeg, engine)
        report['golden'] = {
            'key': entry.key,
            'closed_form': result.build_info['closed_form'],
            'coeffs': result.build_info['expected'],
            'mismatch_degrees': result.mismatch_degrees,
            'verdict': result.verdict
        }
        verdicts.append(result.success)

    if verdicts:
        report['verdict'] = "MATCH" if all(verdicts) else "MISMATCH"
    logger.info(f"Engine statistics: {engine.get_statistics()}")
    return report


def run_exterior(kind: ExteriorKind, group: GroupId) -> Dict[str, Any]:
    """Exterior invariant polynomial by filtering, checked against the summation formula"""
    filtered = exterior_invariant_poly(kind, group)
    closed = closed_form_exterior(kind, group)
    report: Dict[str, Any] = {
        'kind': kind.value,
        'group': group.kind.value,
        'n': group.n,
        'coeffs': filtered.to_list()
    }
    degrees = known_generator_degrees(kind, group)
    if degrees is not None:
        report['degrees'] = degrees
    report['verdict'] = "MATCH" if filtered == closed else "MISMATCH"
    if filtered != closed:
        logger.warning(f"{kind.value} {group}: filter gives {filtered}, closed form gives {closed}")
    return report


def run_branch(partition: Partition, group: GroupId,
               depth: DepthConvention = DEFAULT_DEPTH_CONVENTION) -> Dict[str, Any]:
    terms = branch(partition, group, depth)
    return {
        'lambda': partition.to_list(),
        'group': group.kind.value,
        'n': group.n,
        'depth_convention': depth.value,
        'terms': [{'mu': term.mu.to_list(), 'multiplicity': term.multiplicity, 'epsilon': term.epsilon_power}
                  for term in terms]
    }


def run_lr(lam: Partition, mu: Partition, nu: Partition) -> Dict[str, Any]:
    return {
        'lambda': lam.to_list(),
        'mu': mu.to_list(),
        'nu': nu.to_list(),
        'coefficient': lr_coefficient(lam, mu, nu)
    }


def run_golden(key: Optional[str] = None, maxdeg: Optional[int] = None, workers: int = 1,
               catalog: Optional[str] = None) -> Dict[str, Any]:
    """
    Compare every catalog entry (or a single one) with the engine

    Returns:
        Report with one item per entry and an overall verdict
    """
    entries = [golden_entry(key, catalog)] if key else golden_entries(catalog)
    verifier = SeriesVerifier(workers)
    items = []
    for entry in entries:
        bound = entry.maxdeg if maxdeg is None else min(maxdeg, entry.maxdeg)
        result = verifier.verify_golden(entry, bound)
        items.append({
            'key': entry.key,
            'maxdeg': bound,
            'verdict': result.verdict,
            'first_mismatch_degree': result.build_info['first_mismatch_degree'],
            'mismatch_degrees': result.mismatch_degrees
        })
        logger.info(f"{entry.key}: {result.verdict} in {result.verification_time:.3f}s")
    return {
        'entries': items,
        'verdict': "MATCH" if all(item['verdict'] == "MATCH" for item in items) else "MISMATCH"
    }


def format_text(command: Command, report: Dict[str, Any]) -> str:
    """Human-readable rendering of a report"""
    lines = []
    if command == Command.SERIES:
        lines.append(f"{report['group'].upper()}({report['n']}) acting on W = {report['spec'] or '0'}")
        lines.append(f"coeffs (t^0..t^{report['maxdeg']}): {' '.join(str(c) for c in report['coeffs'])}")
        if 'oracle' in report:
            oracle = report['oracle']
            lines.append(f"{oracle['name']} oracle: {' '.join(str(c) for c in oracle['coeffs'])} [{oracle['verdict']}]")
        if 'golden' in report:
            golden = report['golden']
            lines.append(f"golden {golden['key']} {golden['closed_form']}: {golden['verdict']}")
            if golden['mismatch_degrees']:
                lines.append(f"  differing degrees: {golden['mismatch_degrees']}")
    elif command == Command.EXTERIOR:
        lines.append(f"{report['kind']} {report['group'].upper()}({report['n']}): "
                     f"{' '.join(str(c) for c in report['coeffs'])}")
        if 'degrees' in report:
            lines.append(f"exterior generators in degrees {report['degrees']}")
        lines.append(f"closed form: {report['verdict']}")
    elif command == Command.BRANCH:
        lines.append(f"{report['lambda']} restricted to {report['group'].upper()}({report['n']}):")
        for term in report['terms']:
            eps = "eps " if term['epsilon'] else ""
            lines.append(f"  {term['multiplicity']:+d} {eps}{term['mu']}")
    elif command == Command.LR:
        lines.append(f"c^{report['lambda']}_{report['mu']},{report['nu']} = {report['coefficient']}")
    else:
        for item in report['entries']:
            suffix = f" (first difference at t^{item['first_mismatch_degree']})" if item['mismatch_degrees'] else ""
            lines.append(f"{item['key']:<12} deg<={item['maxdeg']:<3} {item['verdict']}{suffix}")
    if 'verdict' in report and command in (Command.SERIES, Command.GOLDEN):
        lines.append(f"verdict: {report['verdict']}")
    return "\n".join(lines)


def exit_code_for(report: Dict[str, Any]) -> int:
    return EXIT_MISMATCH if report.get('verdict') == "MISMATCH" else EXIT_OK


def build_parser(settings: Dict[str, Any]) -> HilbertArgumentParser:
    parser = HilbertArgumentParser(description='Hilbert series of invariant rings of Sp(n), O(n) and SO(n)')
    parser.add_argument('command', choices=[c.value for c in Command],
                        help='series | exterior | branch | lr | golden')
    parser.add_argument('--group', choices=[g.value for g in GroupKind], help='Target group')
    parser.add_argument('--n', type=int, help='Dimension of the standard module V')
    parser.add_argument('--spec', default='', help='Module W, e.g. "V + L2(V)" or "2*[3,1]"')
    parser.add_argument('--maxdeg', type=int, help='Truncation degree')
    parser.add_argument('--oracle', choices=[o.value for o in Oracle], default=settings['default_oracle'],
                        help='Independent cross-check for the series command')
    parser.add_argument('--format', choices=[f.value for f in OutputFormat], default=settings['default_format'],
                        help='Output format')
    parser.add_argument('--golden', help='Golden catalog key, e.g. cubics/sp/2')
    parser.add_argument('--kind', choices=[k.value for k in ExteriorKind], help='Exterior algebra kind')
    parser.add_argument('--lambda', dest='lam', help='Partition such as [3,1]')
    parser.add_argument('--mu', help='Partition such as [2,1]')
    parser.add_argument('--nu', help='Partition such as [1]')
    parser.add_argument('--workers', type=int, default=settings['workers'],
                        help='Threads for per-degree Schur expansion (can also set INVARIANT_HILBERT_WORKERS)')
    parser.add_argument('--log-level', default=settings['log_level'],
                        help=f'Logging level (can also set {LOG_LEVEL_ENV})')
    parser.add_argument('--config', help='Path to a hilbert_config.json file')
    parser.add_argument('--depth-convention', choices=[d.value for d in DepthConvention],
                        default=DEFAULT_DEPTH_CONVENTION.value, help='Hook depth convention for branch')
    return parser


def _require(parser: HilbertArgumentParser, args: argparse.Namespace, *names: str):
    missing = [f"--{name.replace('_', '-')}" for name in names if getattr(args, name) is None]
    if missing:
        parser.error(f"{args.command} requires {', '.join(missing)}")


def _dispatch(parser: HilbertArgumentParser, args: argparse.Namespace,
              settings: Dict[str, Any]) -> Tuple[Command, Dict[str, Any]]:
    command = Command(args.command)
    if command == Command.SERIES:
        _require(parser, args, 'group', 'n', 'maxdeg')
        config = RunConfig(
            group=GroupId.parse(args.group, args.n),
            spec_text=args.spec,
            maxdeg=args.maxdeg,
            oracle=args.oracle,
            format=args.format,
            golden_key=args.golden,
            workers=args.workers,
            max_degree_cap=settings['max_degree_cap'],
            golden_catalog=settings['golden_catalog']
        )
        return command, run(config)
    if command == Command.EXTERIOR:
        _require(parser, args, 'kind', 'group', 'n')
        return command, run_exterior(ExteriorKind(args.kind), GroupId.parse(args.group, args.n))
    if command == Command.BRANCH:
        _require(parser, args, 'lam', 'group', 'n')
        return command, run_branch(Partition.parse(args.lam), GroupId.parse(args.group, args.n),
                                   DepthConvention(args.depth_convention))
    if command == Command.LR:
        _require(parser, args, 'lam', 'mu', 'nu')
        return command, run_lr(Partition.parse(args.lam), Partition.parse(args.mu), Partition.parse(args.nu))
    if args.maxdeg is not None and args.maxdeg > settings['max_degree_cap']:
        raise InvalidInputError(f"maxdeg {args.maxdeg} exceeds the configured cap {settings['max_degree_cap']}")
    return command, run_golden(args.golden, args.maxdeg, args.workers, settings['golden_catalog'])


def main(argv: Optional[List[str]] = None) -> int:
    """CLI entry point; returns the process exit code"""
    argv = sys.argv[1:] if argv is None else argv
    preliminary = argparse.ArgumentParser(add_help=False)
    preliminary.add_argument('--config')
    known, _ = preliminary.parse_known_args(argv)

    try:
        settings = load_config(known.config)
    except HilbertError as e:
        print(f"Error loading configuration: {e}", file=sys.stderr)
        return EXIT_USAGE

    parser = build_parser(settings)
    args = parser.parse_args(argv)

    logging.basicConfig(
        level=getattr(logging, str(args.log_level).upper(), logging.WARNING),
        format='%(asctime)s %(name)s %(levelname)s: %(message)s',
        stream=sys.stderr
    )

    try:
        command, report = _dispatch(parser, args, settings)
    except InternalInconsistencyError as e:
        logger.error(f"Internal inconsistency: {e}")
        print(f"Internal inconsistency: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except (HilbertError, FileNotFoundError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE

    if args.format == OutputFormat.JSON.value:
        print(json.dumps(report))
    else:
        print(format_text(command, report))
    return exit_code_for(report)


if __name__ == "__main__":
    sys.exit(main())
