"""Command line interface.

Exit codes: 0 success, 2 parse or usage error, 3 domain error,
4 verification failure.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import report
from .errors import DomainError, NotAlgebraicallySplit, ParseError, VerificationFailure
from .fileformat import format_torsion, load_fixture, load_presentation
from .homology import homology_of
from .quad import DEFAULT_TOLERANCE, verify_theorem_split, verify_with_companion
from .spinc import chern_enumerate
from .torsion import c_invariant, synthesize, translate

EXIT_OK, EXIT_PARSE, EXIT_DOMAIN, EXIT_FAIL = 0, 2, 3, 4


def _emit(doc, args):
    sys.stdout.write(report.dumps(doc) + "\n" if args.json else report.render(doc))


def _sigmas(pf, labels):
    if labels:
        return [pf.resolve(s) for s in labels]
    if pf.spinc:
        return list(pf.spinc.values())
    return chern_enumerate(pf.presentation)


def cmd_analyze(args):
    pf = load_presentation(args.file)
    _emit(report.analyze_report(pf.presentation), args)
    return EXIT_OK


def cmd_spinc(args):
    pf = load_presentation(args.file)
    _emit(report.spinc_report(pf.presentation, args.encoding, pf.spinc), args)
    return EXIT_OK


def cmd_quad(args):
    pf = load_presentation(args.file)
    doc = report.quad_report(pf.presentation, _sigmas(pf, args.sigma), args.tolerance)
    _emit(doc, args)
    return EXIT_OK


def cmd_verify(args):
    pf = load_presentation(args.file)
    p = pf.presentation
    if p.is_split:
        tr = verify_theorem_split(p)
        doc = report.verify_report(tr)
    elif args.split_companion:
        comp = load_presentation(args.split_companion).presentation
        if not comp.is_split:
            raise NotAlgebraicallySplit("--split-companion must have a diagonal linking matrix")
        tr = verify_with_companion(p, comp)
        doc = report.verify_report(tr, comp)
    else:
        raise NotAlgebraicallySplit(
            "the charge formula for the torsion quadratic function is only available for "
            "algebraically split links (diagonal matrix); pass --split-companion FILE with a "
            "split presentation whose linking pairing is isometric"
        )
    _emit(doc, args)
    return EXIT_OK if tr.passed else EXIT_FAIL


def cmd_torsion(args):
    pf = load_presentation(args.file)
    blocks = list(pf.torsion)
    for path in args.fixture or ():
        blocks += load_fixture(path)
    fam = c_invariant(pf.torsion_tables(blocks), args.tolerance)
    _emit(report.torsion_report(fam), args)
    return EXIT_OK


def cmd_synth(args):
    """Write a synthetic torsion fixture consistent with every checked identity."""
    pf = load_presentation(args.file)
    sigma = _sigmas(pf, [args.sigma] if args.sigma else None)[0]
    base = synthesize(sigma, Fraction(args.t0))
    tables = [base]
    if args.family:
        g = homology_of(pf.presentation)
        tables = [translate(base, h) for h in g.elements]
    sys.stdout.write("".join(format_torsion(t) for t in tables))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinquad",
        description="Linking pairings, Spin^c structures and quadratic functions "
                    "of rational homology spheres from surgery presentations.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", help="presentation file")
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="homology group and linking pairing")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("spinc", parents=[common], help="Spin^c classes in both encodings")
    p.add_argument("--encoding", choices=("chern", "charge"), default="chern")
    p.set_defaults(func=cmd_spinc)

    p = sub.add_parser("quad", parents=[common], help="phi tables and Gauss sum phases")
    p.add_argument("--sigma", action="append",
                   help="Spin^c class: label, s=<chern>, k=<charge> (repeatable)")
    p.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE)
    p.set_defaults(func=cmd_quad)

    p = sub.add_parser("verify", parents=[common], help="compare torsion and Chern quadratic functions")
    p.add_argument("--split-companion", metavar="FILE")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("torsion", parents=[common], help="check torsion tables and compute c(M)")
    p.add_argument("--fixture", action="append", metavar="FILE",
                   help="extra file of torsion blocks (repeatable)")
    p.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE)
    p.set_defaults(func=cmd_torsion)

    p = sub.add_parser("synth", parents=[common], help="write a synthetic torsion fixture")
    p.add_argument("--sigma")
    p.add_argument("--t0", default="0", help="value of tau(0), a rational")
    p.add_argument("--family", action="store_true",
                   help="emit the equivariant table of every Spin^c class")
    p.set_defaults(func=cmd_synth)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except VerificationFailure as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except DomainError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
