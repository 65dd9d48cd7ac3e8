"""Command-line front end.

Exit codes: 0 success, 1 a verification check failed, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import tables, verify
from .algebra import all_operators, inversions, rotations
from .aufbau import aufbau_sequence
from .classifier import ChiralityIndex, chirality_index, enumerate_projections
from .exceptions import ChiralityError, ParseError
from .molfile import read_molecule
from .quantum import AzimuthalProblem, RadialProblem, azimuthal_residual, radial_residual


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _int_pair(text: str) -> tuple[int, int]:
    try:
        n, p = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected n,p got {text!r}") from None
    return n, p


def _int_list(text: str) -> list[int]:
    if not text.strip():
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="chiralgebra", description="Fischer-projection chirality algebra")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("tables", help="print the 24 operator matrices")
    p.add_argument("--kind", choices=["rot", "inv", "all"], default="all")
    p.add_argument("--format", choices=["ascii", "csv"], default="ascii")

    p = sub.add_parser("cayley", help="print the 24x24 Cayley table")
    p.add_argument("--format", choices=["ascii", "csv"], default="ascii")

    p = sub.add_parser("verify", help="run the self-verification suite")
    p.add_argument("--all", action="store_true")
    for group in ("closure", "eigen", "commutators", "quantum"):
        p.add_argument(f"--{group}", action="store_true")

    p = sub.add_parser("classify", help="chirality index of a molecule file")
    p.add_argument("file")

    p = sub.add_parser("project", help="the 24 Fischer projections of one centre")
    p.add_argument("file")
    p.add_argument("--center", required=True)

    p = sub.add_parser("aufbau", help="iterate the building-up rule")
    p.add_argument("--start", type=_int_pair, required=True, metavar="N,P")
    p.add_argument("--deltas", type=_int_list, default=[], metavar="D1,D2,...")

    p = sub.add_parser("quantum", help="finite-difference residual checks")
    qsub = p.add_subparsers(dest="problem", required=True, parser_class=_Parser)
    q = qsub.add_parser("radial")
    q.add_argument("--l", type=int, required=True)
    q.add_argument("--E", type=float, required=True)
    q.add_argument("--r0", type=float, default=1.0)
    q.add_argument("--samples", type=int, default=1001)
    q.add_argument("--rmin", type=float, default=0.5)
    q.add_argument("--rmax", type=float, default=5.0)
    q.add_argument("--order", type=int, choices=[2, 4], default=4)
    q.add_argument("--tol", type=float, default=verify.RADIAL_TOL)
    q = qsub.add_parser("azimuthal")
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--samples", type=int, default=4001)
    q.add_argument("--order", type=int, choices=[2, 4], default=4)
    q.add_argument("--tol", type=float, default=verify.AZIMUTHAL_TOL)
    return parser


def _cmd_tables(args, out) -> int:
    ops = {"rot": rotations(), "inv": inversions(), "all": all_operators()}[args.kind]
    out.write(tables.matrices_csv(ops) if args.format == "csv" else tables.matrices_ascii(ops))
    return 0


def _cmd_cayley(args, out) -> int:
    out.write(tables.cayley_csv() if args.format == "csv" else tables.cayley_ascii())
    return 0


def _cmd_verify(args, out) -> int:
    chosen = [g for g in ("closure", "eigen", "commutators", "quantum") if getattr(args, g)]
    groups = None if args.all or not chosen else chosen
    results = verify.run(groups)
    out.write(verify.report(results))
    return 0 if all(ok for _, ok, _ in results) else 1


def _cmd_classify(args, out) -> int:
    m = read_molecule(args.file)
    idx = chirality_index(m)
    out.write(f"{m.name}: chi = {idx}  {idx.classification.name}\n")
    return 0


def _cmd_project(args, out) -> int:
    m = read_molecule(args.file)
    t = m.centre(args.center)
    projections = enumerate_projections(t)
    for pr in projections:
        slots = " ".join(str(s) for s in pr.tetrahedron.slots)
        out.write(f"{pr.operator.name:>3}  orbit {pr.orbit}  {slots}\n")
    n_orbits = len({pr.orbit for pr in projections})
    n_distinct = len({pr.tetrahedron.slots for pr in projections})
    out.write(f"{n_distinct} distinct projections in {n_orbits} rotation orbit(s)\n")
    return 0


def _cmd_aufbau(args, out) -> int:
    trace = aufbau_sequence(ChiralityIndex(*args.start), args.deltas)
    out.write(f"start  chi = {trace.start}  {trace.start.classification.name}\n")
    for d, s in zip(trace.steps, trace.states):
        out.write(f"dp={d}   chi = {s}  {s.classification.name}\n")
    out.write(f"final  chi = {trace.final}  {trace.final.classification.name}\n")
    return 0


def _cmd_quantum(args, out) -> int:
    if args.problem == "radial":
        prob = RadialProblem(args.l, args.E, r0=args.r0)
        res = radial_residual(prob, args.rmin, args.rmax, args.samples, order=args.order)
        label = f"radial l={args.l} E={args.E} r0={args.r0} alpha0={prob.alpha0:g}"
    else:
        res = azimuthal_residual(AzimuthalProblem(args.m), args.samples, order=args.order)
        label = f"azimuthal m={args.m}"
    ok = res <= args.tol
    out.write(f"{'PASS' if ok else 'FAIL'}  {label} samples={args.samples}: "
              f"max residual {res:.3e} (tol {args.tol:g})\n")
    return 0 if ok else 1


_COMMANDS = {
    "tables": _cmd_tables,
    "cayley": _cmd_cayley,
    "verify": _cmd_verify,
    "classify": _cmd_classify,
    "project": _cmd_project,
    "aufbau": _cmd_aufbau,
    "quantum": _cmd_quantum,
}


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        return _COMMANDS[args.command](args, out)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (ChiralityError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
