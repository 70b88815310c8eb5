import argparse
import hashlib
import json
import logging
import os
import random
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from dotenv import load_dotenv

from dynamics.julia import RenderConfig, image_name, render_julia_slice, sweep, write_ppm
from dynamics.family import FtParams
from dynamics.pinch import AnnulusGrid, pinch_table
from hurwitz.orbit import OrbitBudget, Verdict, hurwitz_orbit, is_symmetric, same_hurwitz_class
from monodromy.constellation import ConstellationError, genus, validate
from monodromy.text_format import (
    ConstellationFormatError,
    format_constellation,
    format_constellations,
    parse_collection,
    parse_constellation,
    read_constellation_file,
    write_constellation_file,
)
from presets.preset_loader import PresetError, PresetLoader
from ratmap.literal import RationalMapFormatError, parse_mobius, parse_rational_map
from ratmap.sandwich import random_samples, verify_random_instances, verify_sandwich_isomorphism
from surgery.connected_sum import SumPlan, connected_sum, degree_ledger, format_genus_report, genus_report
from surgery.mating import MatingError, equator_is_unbranched, equator_monodromy, formal_mating, inner_count

load_dotenv()

logger = logging.getLogger(__name__)

VERSION = '0.1.0'

# Exit codes
EXIT_OK = 0
EXIT_NO = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 64
EXIT_PARSE = 65

VERDICT_EXIT_CODES = {
    Verdict.YES: EXIT_OK,
    Verdict.NO: EXIT_NO,
    Verdict.INCONCLUSIVE: EXIT_INCONCLUSIVE,
}

DEFAULT_OUT_DIR = os.getenv('COVERING_FORGE_OUT_DIR', 'renders')


class ForgeArgumentParser(argparse.ArgumentParser):
    """Usage errors exit with EXIT_USAGE instead of argparse's 2, which means inconclusive here"""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f'{self.prog}: error: {message}\n')


@dataclass(frozen=True)
class RunManifest:
    """Everything needed to rerun a command; printed at the head of every report"""

    subcommand: str
    inputs: Tuple[str, ...]
    options: Dict = field(default_factory=dict)
    version: str = VERSION
    input_hash: str = ''

    @classmethod
    def build(cls, subcommand: str, inputs: Sequence[str], options: Dict, extra: bytes = b'') -> 'RunManifest':
        digest = hashlib.sha256()
        for path in inputs:
            digest.update(Path(path).read_bytes())
        digest.update(extra)
        resolved = tuple(str(Path(path).resolve()) for path in inputs)
        return cls(subcommand, resolved, dict(sorted(options.items())), VERSION, digest.hexdigest())

    def lines(self) -> List[str]:
        options = ' '.join(f'{key}={value}' for key, value in self.options.items())
        return [
            f'# covering-forge {self.version}',
            f'# subcommand={self.subcommand}',
            f"# inputs={','.join(self.inputs)}",
            f'# options={options}',
            f'# sha256={self.input_hash}',
        ]


def resolve_threads(args) -> int:
    """COVERING_FORGE_THREADS wins over --threads"""
    env_threads = os.getenv('COVERING_FORGE_THREADS')
    if env_threads:
        return max(1, int(env_threads))
    return max(1, args.threads)


def _options(args, *names: str) -> Dict:
    return {name: getattr(args, name) for name in names}


def _emit(manifest: RunManifest, lines: Sequence[str]) -> None:
    for line in manifest.lines():
        print(line)
    for line in lines:
        print(line)


def _budget(args) -> OrbitBudget:
    if args.max_states is None:
        return OrbitBudget(max_depth=args.max_depth)
    return OrbitBudget(args.max_states, args.max_depth)


def _parse_plan(text: str) -> Tuple[Optional[int], Optional[int]]:
    """'L:R' with either side optional, e.g. '3:1' or ':2'"""
    left, sep, right = text.partition(':')
    if not sep:
        raise argparse.ArgumentTypeError(f'plan {text!r} must read LEFT:RIGHT')
    try:
        return (int(left) if left else None, int(right) if right else None)
    except ValueError:
        raise argparse.ArgumentTypeError(f'plan {text!r} must hold sheet numbers')


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f'{text!r} is not an integer')
    if value < 1:
        raise argparse.ArgumentTypeError(f'{value} must be positive')
    return value


def _parse_fraction(text: str) -> Fraction:
    try:
        return FtParams.parse(text).t
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def cmd_sum(args) -> int:
    if len(args.inputs) < 2:
        args.parser.error('sum needs at least 2 constellation files')
    plans = args.plan or []
    if plans and len(plans) != len(args.inputs) - 1:
        args.parser.error(f'expected {len(args.inputs) - 1} --plan values, got {len(plans)}')

    constellations = [read_constellation_file(path) for path in args.inputs]
    manifest = RunManifest.build('sum', args.inputs, _options(args, 'plan', 'out'))

    lines = []
    result = constellations[0]
    for index, right in enumerate(constellations[1:]):
        shared_left, shared_right = plans[index] if plans else (None, None)
        left = result
        result = connected_sum(SumPlan(left, right, shared_left, shared_right))
        lines.append(f'step {index + 1}: degree {left.degree} # degree {right.degree} -> degree {result.degree}')
        lines.extend(f'  {line}' for line in format_genus_report(genus_report(left, right, result)))

    lines.append(degree_ledger(constellations, result))
    lines.append(f'genus={genus(result)} passport={result.passport()}')
    if args.out:
        write_constellation_file(args.out, result)
        lines.append(f'written: {args.out}')
    else:
        lines.append(format_constellation(result).rstrip('\n'))
    _emit(manifest, lines)
    return EXIT_OK


def cmd_mate(args) -> int:
    inner = read_constellation_file(args.inner)
    outer = read_constellation_file(args.outer)
    manifest = RunManifest.build('mate', [args.inner, args.outer], _options(args, 'out'))

    mated = formal_mating(inner, outer)
    entries = inner_count(inner)
    lines = [
        f'degree={mated.degree} genus={genus(mated)} passport={mated.passport()}',
        f'equator={equator_monodromy(mated, entries)} unbranched={str(equator_is_unbranched(mated, entries)).lower()}',
    ]
    if args.out:
        write_constellation_file(args.out, mated)
        lines.append(f'written: {args.out}')
    else:
        lines.append(format_constellation(mated).rstrip('\n'))
    _emit(manifest, lines)
    return EXIT_OK


def cmd_orbit(args) -> int:
    c = read_constellation_file(args.input)
    manifest = RunManifest.build('orbit', [args.input], _options(args, 'max_states', 'max_depth', 'out'))
    result = hurwitz_orbit(c, _budget(args), resolve_threads(args))

    summary = f'orbit_size={len(result)} exhausted={str(result.exhausted).lower()}'
    records = format_constellations([form.to_constellation() for form in result.sorted_forms()])
    if args.out:
        Path(args.out).write_text(records + '\n' + summary + '\n')
        _emit(manifest, [f'written: {args.out}', summary])
    else:
        _emit(manifest, [records.rstrip('\n'), summary])
    return EXIT_OK if result.exhausted else EXIT_INCONCLUSIVE


def cmd_equiv(args) -> int:
    a = read_constellation_file(args.left)
    b = read_constellation_file(args.right)
    manifest = RunManifest.build('equiv', [args.left, args.right], _options(args, 'max_states', 'max_depth'))
    verdict = same_hurwitz_class(a, b, _budget(args), resolve_threads(args))
    _emit(manifest, [f'same_hurwitz_class={verdict}'])
    return VERDICT_EXIT_CODES[verdict]


def cmd_symmetric(args) -> int:
    c = read_constellation_file(args.input)
    manifest = RunManifest.build('symmetric', [args.input], _options(args, 'max_states', 'max_depth'))
    verdict = is_symmetric(c, _budget(args), resolve_threads(args))
    _emit(manifest, [f'symmetric={verdict}'])
    return VERDICT_EXIT_CODES[verdict]


def cmd_verify_sandwich(args) -> int:
    if args.instances is not None:
        return _verify_random_sandwiches(args)
    loader = PresetLoader()
    preset = loader.resolve(args.preset)
    if preset is None:
        args.parser.error(f'unknown preset {args.preset!r} (known: {", ".join(loader.names())})')
    loader.require(preset, ('r1', 'h', 'g'), args.preset)

    seed = args.seed if args.seed is not None else preset.get('seed', 7)
    count = args.samples if args.samples is not None else preset.get('samples', 100)
    conjugate = args.conjugate or preset.get('conjugate', False)
    r1 = parse_rational_map(preset['r1'])
    h = parse_mobius(preset['h'])
    g = parse_mobius(preset['g'])
    r2 = parse_rational_map(preset['r2']) if preset.get('r2') else None

    options = {'preset': args.preset, 'seed': seed, 'samples': count, 'conjugate': conjugate}
    manifest = RunManifest.build(
        'verify-sandwich', [], options, json.dumps(preset, sort_keys=True).encode('utf-8')
    )
    rng = random.Random(seed)
    samples = random_samples(rng, count, preset.get('maxDegree', 3), preset.get('height', 8))
    report = verify_sandwich_isomorphism(r1, h, g, samples, r2, conjugate, resolve_threads(args))

    lines = [f'R1={r1}', f'h={h}', f'g={g}', f"R2={report['r2']}"]
    if report['corollary'] is not None:
        lines.append(f"corollary={str(report['corollary']).lower()}")
    for failure in report['failures']:
        lines.append(
            f"failure sample={failure['sample']} identity={failure['identity']} "
            f"R={failure['R']} Q={failure['Q']} lhs={failure['lhs']} rhs={failure['rhs']}"
        )
    lines.append(report['message'])
    _emit(manifest, lines)
    return EXIT_OK if report['status'] == 'ok' else EXIT_NO


def _verify_random_sandwiches(args) -> int:
    seed = args.seed if args.seed is not None else 7
    samples = args.samples if args.samples is not None else 2
    options = {'instances': args.instances, 'seed': seed, 'samples': samples}
    manifest = RunManifest.build('verify-sandwich', [], options)
    report = verify_random_instances(
        random.Random(seed), args.instances, samples, threads=resolve_threads(args)
    )
    lines = [f'failed instance {index}' for index in report['failedInstances']]
    lines.append(report['message'])
    _emit(manifest, lines)
    return EXIT_OK if report['status'] == 'ok' else EXIT_NO


def _out_dir(args) -> Path:
    return Path(args.out or DEFAULT_OUT_DIR)


def cmd_julia(args) -> int:
    p = FtParams(args.t)
    center = complex(args.center_re, args.center_im)
    cfg = RenderConfig.for_params(p, args.resolution, args.max_iter, center, args.half_width)
    manifest = RunManifest.build(
        'julia', [], _options(args, 't', 'resolution', 'max_iter', 'center_re', 'center_im', 'half_width', 'out')
    )
    report = render_julia_slice(p, cfg, resolve_threads(args))
    path = _out_dir(args) / image_name(p.t)
    write_ppm(str(path), report.image())
    _emit(manifest, [report.line(), f'image: {path}'])
    return EXIT_OK


def cmd_sweep(args) -> int:
    manifest = RunManifest.build('sweep', [], _options(args, 'ts', 'resolution', 'max_iter', 'out'))
    reports, table = sweep(args.ts, args.resolution, args.max_iter, resolve_threads(args))
    lines = []
    for report in reports:
        path = _out_dir(args) / image_name(report.t)
        write_ppm(str(path), report.image())
        lines.append(report.line())
    lines.append(table[['t', 'components', 'unbounded', 'zeroComponent']].to_string(index=False))
    _emit(manifest, lines)
    return EXIT_OK


def cmd_pinch(args) -> int:
    preset = PresetLoader().load_preset('pinch.default') or {}
    n_from = args.n_from if args.n_from is not None else preset.get('nFrom', 1)
    n_to = args.n_to if args.n_to is not None else preset.get('nTo', 6)
    if n_from < 1 or n_to < n_from:
        args.parser.error(f'bad n range {n_from}..{n_to}')
    grid = AnnulusGrid(
        args.radius if args.radius is not None else preset.get('radius', 2.0),
        preset.get('radialSamples', 100),
        preset.get('angularSamples', 100),
    )
    manifest = RunManifest.build('pinch', [], {'n_from': n_from, 'n_to': n_to, 'radius': grid.radius})
    table = pinch_table(range(n_from, n_to + 1), grid)
    _emit(manifest, [table.to_string(index=False, float_format=lambda x: f'{x:.12f}')])
    return EXIT_OK


def cmd_validate(args) -> int:
    manifest = RunManifest.build('validate', args.inputs, _options(args, 'collection'))
    lines = []
    all_ok = True
    for path in args.inputs:
        text = Path(path).read_text()
        if args.collection:
            collection = parse_collection(text, source=path)
            reports = collection.validate()
            for label, report in reports.items():
                lines.append(f'{path} {label}: {report}')
                all_ok = all_ok and report.ok
            lines.append(f'{path}: components={len(collection)} simple={str(collection.is_simple()).lower()}')
        else:
            report = validate(parse_constellation(text, source=path, check=False))
            lines.append(f'{path}: {report}')
            all_ok = all_ok and report.ok
    _emit(manifest, lines)
    return EXIT_OK if all_ok else EXIT_NO


def _add_budget_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--max-states', type=_positive_int, default=None,
                        help='cap on distinct canonical forms (default COVERING_FORGE_MAX_STATES or 1000000)')
    parser.add_argument('--max-depth', type=_positive_int, default=None, help='BFS depth cap (default unlimited)')


def _add_render_options(parser: argparse.ArgumentParser, window: bool = False) -> None:
    preset = PresetLoader().load_preset('render.default') or {}
    parser.add_argument('--resolution', type=int, default=preset.get('resolution', 512), help='pixels per side')
    parser.add_argument('--max-iter', type=int, default=preset.get('maxIter', 500), help='iteration cap')
    if window:
        center_re, center_im = preset.get('center', [0.0, 0.0])
        parser.add_argument('--center-re', type=float, default=float(center_re))
        parser.add_argument('--center-im', type=float, default=float(center_im))
        parser.add_argument('--half-width', type=float, default=None, help='default derived from t')


def build_parser() -> ForgeArgumentParser:
    parser = ForgeArgumentParser(prog='covering-forge', description='Branched coverings, surgery and dynamics experiments')
    parser.add_argument('--seed', type=int, default=None, help='seed for randomized harnesses')
    parser.add_argument('--threads', type=int, default=1, help='worker threads (COVERING_FORGE_THREADS overrides)')
    parser.add_argument('--out', type=str, default=None, help='output file or image directory')
    subparsers = parser.add_subparsers(dest='command', required=True)

    p = subparsers.add_parser('sum', help='iterated connected sum')
    p.add_argument('inputs', nargs='+', help='constellation files, glued left to right')
    p.add_argument('--plan', type=_parse_plan, action='append', help='shared sheets LEFT:RIGHT per gluing')
    p.set_defaults(func=cmd_sum, parser=p)

    p = subparsers.add_parser('mate', help='formal mating of two polynomial constellations')
    p.add_argument('inner')
    p.add_argument('outer')
    p.set_defaults(func=cmd_mate, parser=p)

    p = subparsers.add_parser('orbit', help='Hurwitz orbit dump')
    p.add_argument('input')
    _add_budget_options(p)
    p.set_defaults(func=cmd_orbit, parser=p)

    p = subparsers.add_parser('equiv', help='same Hurwitz class?')
    p.add_argument('left')
    p.add_argument('right')
    _add_budget_options(p)
    p.set_defaults(func=cmd_equiv, parser=p)

    p = subparsers.add_parser('symmetric', help='Hurwitz class contains the mirror?')
    p.add_argument('input')
    _add_budget_options(p)
    p.set_defaults(func=cmd_symmetric, parser=p)

    p = subparsers.add_parser('verify-sandwich', help='check sandwich semigroup isomorphism identities')
    p.add_argument('--preset', default='sandwich.default', help='preset name or JSON path')
    p.add_argument('--samples', type=int, default=None)
    p.add_argument('--conjugate', action='store_true', help='orientation reversing isomorphism')
    p.add_argument('--instances', type=_positive_int, default=None,
                   help='draw this many random (R1, h, g) triples instead of using the preset')
    p.set_defaults(func=cmd_verify_sandwich, parser=p)

    p = subparsers.add_parser('julia', help='render one t-slice and count complement components')
    p.add_argument('--t', type=_parse_fraction, required=True, help='slice parameter, e.g. 1/2')
    _add_render_options(p, window=True)
    p.set_defaults(func=cmd_julia, parser=p)

    p = subparsers.add_parser('sweep', help='render several t-slices')
    p.add_argument('ts', nargs='+', type=_parse_fraction, help='slice parameters')
    _add_render_options(p)
    p.set_defaults(func=cmd_sweep, parser=p)

    p = subparsers.add_parser('pinch', help='pinching Beltrami norms')
    p.add_argument('--n-from', type=int, default=None)
    p.add_argument('--n-to', type=int, default=None)
    p.add_argument('--radius', type=float, default=None)
    p.set_defaults(func=cmd_pinch, parser=p)

    p = subparsers.add_parser('validate', help='validate constellation files')
    p.add_argument('inputs', nargs='+')
    p.add_argument('--collection', action='store_true', help='files hold covering collections')
    p.set_defaults(func=cmd_validate, parser=p)
    return parser


def configure_logging() -> None:
    level = os.getenv('COVERING_FORGE_LOG_LEVEL', 'WARNING').upper()
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        stream=sys.stderr,
        format='%(asctime)s %(levelname)s %(name)s: %(message)s',
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    configure_logging()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    except (ConstellationFormatError, RationalMapFormatError, PresetError, json.JSONDecodeError) as e:
        print(f'parse error: {e}', file=sys.stderr)
        return EXIT_PARSE
    except FileNotFoundError as e:
        print(f'cannot read input: {e}', file=sys.stderr)
        return EXIT_PARSE
    except ConstellationError as e:
        print(f'validation failed: {e}', file=sys.stderr)
        return EXIT_NO
    except (MatingError, ValueError) as e:
        logger.debug('Command failed', exc_info=True)
        print(f'error: {e}', file=sys.stderr)
        return EXIT_NO


if __name__ == '__main__':
    sys.exit(main())
