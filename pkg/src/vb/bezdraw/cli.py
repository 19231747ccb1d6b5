"""Command line interface of bezdraw.

Exit codes: 0 success, 1 verification failure, 2 invalid input or usage.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Callable, Sequence

import confuse

from . import __version__, formats, log, ppr
from .argparse_ext import (StoreTrueCondAction, add_common_arguments, add_io_arguments,
                           positive_float)
from .conf import Config
from .drawing import Drawing
from .errors import BezdrawError
from .gen import gen_one_planar, kite_embedding
from .planar import FIXTURES, draw_planar, make_fixture
from .rac import draw_rac
from .render import render_svg
from .schema import DOCUMENTS, json_schema
from .verify import MODE_PLANAR, MODE_RAC, MODES, VerificationReport, verify_drawing

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _class_name(exc: BaseException) -> str:
    return type(exc).__name__


# --- shared steps:

def _verify(d: Drawing, mode: str, args: argparse.Namespace, vconf) -> VerificationReport:
    tol = vconf.tolerances
    report = verify_drawing(
            d, mode,
            tol_angle=args.tol_angle if args.tol_angle is not None else tol.angle,
            tol=tol.intersection, endpoint_exclusion=tol.endpoint_exclusion,
            samples=args.samples if args.samples is not None else vconf.curvature.samples,
            cluster=tol.cluster, eps_deriv=tol.deriv)
    if getattr(args, 'report', None):
        formats.save_report(report, args.report)
    return report


def _finish(d: Drawing, mode: str, args: argparse.Namespace, vconf) -> int:
    """Write the drawing and optionally its SVG and verification."""
    formats.save_drawing(d, args.output)
    if args.svg:
        render_svg(d, args.svg, **_style(vconf))
    if args.verify or args.report:
        report = _verify(d, mode, args, vconf)
        print(report.summary(), file=sys.stderr)
        if args.verify and not report.passed:
            return EXIT_FAIL
    return EXIT_OK


def _style(vconf, **overrides) -> dict:
    style = {key: vconf.render[key]
             for key in ('margin', 'stroke_width', 'vertex_radius', 'mark_crossings')}
    style.update(overrides)
    return style


# --- subcommands:

def cmd_draw_rac(args: argparse.Namespace, vconf) -> int:
    """Draw a 1-plane embedding as a RAC drawing."""
    emb = formats.load_embedding(args.input)
    cons = vconf.construction
    d = draw_rac(emb, outer_size=cons.outer_size, shrink_factor=cons.shrink_factor,
                 shrink_floor=cons.shrink_floor, safety=cons.safety_factor,
                 tol=vconf.tolerances.geom,
                 endpoint_exclusion=vconf.tolerances.endpoint_exclusion)
    return _finish(d, MODE_RAC, args, vconf)


def cmd_draw_planar(args: argparse.Namespace, vconf) -> int:
    """Draw a joint-box drawing with one cubic per edge."""
    jbd = make_fixture(args.fixture) if args.fixture else formats.load_joint_boxes(args.input)
    return _finish(draw_planar(jbd), MODE_PLANAR, args, vconf)


def cmd_verify(args: argparse.Namespace, vconf) -> int:
    """Verify a drawing file."""
    d = formats.load_drawing(args.input)
    report = _verify(d, args.mode, args, vconf)
    if args.json:
        formats.write_json(formats.report_to_dict(report), '-')
    else:
        print(report.summary())
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_render(args: argparse.Namespace, vconf) -> int:
    """Render a drawing file to SVG."""
    d = formats.load_drawing(args.input)
    style = _style(vconf, labels=args.labels)
    if args.no_crossings:
        style['mark_crossings'] = False
    render_svg(d, args.output, **style)
    return EXIT_OK


def cmd_gen(args: argparse.Namespace, vconf) -> int:
    """Generate a random 1-plane embedding."""
    if args.kite:
        emb = kite_embedding()
    else:
        emb = gen_one_planar(args.n, args.crossing_fraction, args.seed)
    formats.save_embedding(emb, args.output)
    return EXIT_OK


def cmd_fixture(args: argparse.Namespace, vconf) -> int:
    """Write a shipped joint-box fixture."""
    formats.save_joint_boxes(make_fixture(args.name), args.output)
    return EXIT_OK


def cmd_schema(args: argparse.Namespace, vconf) -> int:
    """Write the JSON Schema of a document kind."""
    formats.write_json(json_schema(args.kind), args.output)
    return EXIT_OK


def cmd_config(args: argparse.Namespace, vconf, config: Config) -> int:
    """Write or show the user configuration."""
    if args.write:
        if config.write(only_new=True):
            print(f'written: {config.get_user_filename()}')
        else:
            print(f'exists: {config.get_user_filename()}')
    if args.show or not args.write:
        config.dbg_print(sys.stdout)
    return EXIT_OK


# --- parser:

def _add_output_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--svg', help='also render the drawing to this SVG file')
    parser.add_argument('--verify', action='store_true',
                        help='verify the drawing, exit 1 on violations')
    parser.add_argument('--report', help='write the verification report JSON here')
    _add_tolerance_options(parser)


def _add_tolerance_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--tol-angle', type=positive_float,
                        help='crossing angle tolerance in radians')
    parser.add_argument('--samples', type=int, help='curvature samples per edge')


def build_parser() -> argparse.ArgumentParser:
    """Create the argument parser with all subcommands."""
    parser = argparse.ArgumentParser(
            prog='bezdraw', description='Bézier drawings of 1-planar and planar graphs.')
    add_common_arguments(parser, __version__)
    sub = parser.add_subparsers(dest='command', required=True, metavar='COMMAND')

    p = sub.add_parser('draw-rac', help='RAC drawing of a 1-plane embedding')
    add_io_arguments(p, 'embedding JSON', 'drawing JSON ("-" for stdout)')
    _add_output_options(p)
    p.set_defaults(func=cmd_draw_rac)

    p = sub.add_parser('draw-planar', help='cubic drawing of a joint-box drawing')
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument('-i', '--input', help='joint-box JSON')
    source.add_argument('--fixture', help=f'use a shipped fixture: {", ".join(FIXTURES)}')
    p.add_argument('-o', '--output', required=True, help='drawing JSON ("-" for stdout)')
    _add_output_options(p)
    p.set_defaults(func=cmd_draw_planar)

    p = sub.add_parser('verify', help='verify a drawing')
    add_io_arguments(p, 'drawing JSON')
    p.add_argument('--mode', choices=MODES, default=MODE_RAC)
    p.add_argument('--report', help='write the report JSON here')
    p.add_argument('--json', action='store_true', help='print the report as JSON')
    _add_tolerance_options(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser('render', help='render a drawing to SVG')
    add_io_arguments(p, 'drawing JSON', 'SVG file')
    p.add_argument('--no-crossings', action='store_true', help='do not mark crossings')
    p.add_argument('--labels', action='store_true', help='label vertices')
    p.set_defaults(func=cmd_render)

    p = sub.add_parser('gen', help='random 1-plane embedding')
    n_opt = p.add_argument('--n', type=int, required=True, help='number of vertices')
    p.add_argument('--crossing-fraction', type=float, default=0.5,
                   help='share of possible kites to create (default %(default)s)')
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--kite', action=StoreTrueCondAction, make_not_required=[n_opt],
                   help='write the single kite instead')
    p.add_argument('-o', '--output', required=True, help='embedding JSON ("-" for stdout)')
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser('fixture', help='write a shipped joint-box fixture')
    p.add_argument('name', help=', '.join(FIXTURES))
    p.add_argument('-o', '--output', required=True, help='joint-box JSON ("-" for stdout)')
    p.set_defaults(func=cmd_fixture)

    p = sub.add_parser('schema', help='JSON Schema of a document kind')
    p.add_argument('kind', choices=list(DOCUMENTS))
    p.add_argument('-o', '--output', default='-', help='schema JSON (default stdout)')
    p.set_defaults(func=cmd_schema)

    p = sub.add_parser('config', help='write or show the user configuration')
    p.add_argument('--write', action='store_true', help='create the user file if missing')
    p.add_argument('--show', action='store_true', help='print the configuration')
    p.set_defaults(func=cmd_config)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """Run the command line interface and return the exit code."""
    args = build_parser().parse_args(argv)
    log.init(args.verbose, newline_handler=True)
    func: Callable[..., int] = args.func
    try:
        config = Config()
        if func is cmd_config:
            return cmd_config(args, config.vconf, config)
        return func(args, config.vconf)
    except (BezdrawError, OSError, confuse.ConfigError) as exc:
        logger.debug('%s: %s', ppr.class_full_name(exc), exc, exc_info=True)
        print(f'error: {_class_name(exc)}: {exc}', file=sys.stderr)
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
