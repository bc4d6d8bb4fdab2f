import argparse
import json
import logging
import sys
from typing import List, Optional, TextIO, Union

from red_commons.logging import TRACE, VERBOSE

from . import __version__
from .decider import decide_graph, decide_groupoid
from .errors import GroupAlgException, InputError, InvalidGroupoid, UsageError
from .graph import Graph, analyze, parse_graph
from .groupoid import FiniteGroupoid, load_groupoid, validate
from .log import log, set_logging_level
from .matrices import (
    DEFAULT_BOUND,
    build_iso,
    column_submodule_check,
    left_ideals,
    right_ideals,
    row_submodule_check,
    verify_iso,
)
from .rings import RingDescriptor, chain_flags, parse_ring_spec, require_commutative
from .utils import dump_json, sorted_canonical

__all__ = ["build_parser", "run", "main"]

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _coefficient_ring(text: str) -> RingDescriptor:
    ring = parse_ring_spec(text)
    require_commutative(ring)
    return ring


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="groupalg",
        description="Chain conditions and decompositions of discrete groupoid algebras.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="log more; repeat for the verbose and trace levels",
    )
    commands = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    def command(name: str, help_text: str, *, ring=None, bound: bool = False):
        sub = commands.add_parser(name, help=help_text)
        if ring is not None:
            sub.add_argument("--ring", required=True, type=ring, help="ring spec")
        if bound:
            sub.add_argument("--bound", type=int, default=DEFAULT_BOUND)
        sub.add_argument("--json", action="store_true", help="machine readable output")
        return sub

    command("analyze", "boundary path analysis of a graph, orbits of a groupoid").add_argument(
        "input"
    )
    command("decide", "chain condition verdict", ring=_coefficient_ring).add_argument("input")
    command(
        "decompose", "orbit decomposition into matrix rings", ring=_coefficient_ring
    ).add_argument("input")
    command(
        "verify-iso",
        "check the decomposition isomorphism on basis arrows",
        ring=_coefficient_ring,
        bound=True,
    ).add_argument("input")
    command("validate-groupoid", "check the groupoid axioms of a table").add_argument("input")
    # noncommutative rings are fine here: only their ideal lattices are computed
    oracle = command(
        "oracle", "ideal and submodule oracles over a finite ring", ring=parse_ring_spec
    )
    oracle.add_argument("kind", choices=("ideals", "column", "row"))
    oracle.add_argument("--size", type=int, default=2, help="size of the index set J = 1..N")
    oracle.add_argument("--index", type=int, default=1, help="the column or row p")
    return parser


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fp:
        return fp.read()


def _load(path: str) -> Union[Graph, FiniteGroupoid]:
    """A graph document has ``vertices``; a groupoid document has ``objects``."""
    text = _read(path)
    try:
        document = json.loads(text)
    except json.JSONDecodeError:
        return parse_graph(text)
    if isinstance(document, dict) and "objects" in document:
        return load_groupoid(text)
    return parse_graph(text)


def _checked(g: FiniteGroupoid) -> FiniteGroupoid:
    report = validate(g)
    if not report.ok:
        raise InvalidGroupoid(report)
    return g


def _groupoid_of(model: Union[Graph, FiniteGroupoid]):
    if isinstance(model, Graph):
        return analyze(model).groupoid()
    return _checked(model)


class _Failure(Exception):
    def __init__(self, name: str, message: str):
        self.name = name
        super().__init__(message)


def _emit(out: TextIO, args, document: dict, text: str) -> None:
    out.write(dump_json(document) if args.json else text + "\n")


def _label(x):
    return getattr(x, "label", x)


def _cmd_analyze(args, out: TextIO) -> None:
    model = _load(args.input)
    if isinstance(model, Graph):
        analysis = analyze(model)
        document = analysis.to_json()
        lines = [f"discrete: {'yes' if analysis.discrete else 'no'}"]
        if analysis.witness is not None:
            lines.append(f"witness: {analysis.witness.describe()}")
        lines.append(f"acyclic: {'yes' if analysis.acyclic else 'no'}")
        for o in analysis.orbits:
            lines.append(
                f"orbit {o.kind.value} {_label(o.members[0])}: size {o.size}, "
                f"isotropy {o.isotropy.value}"
            )
        _emit(out, args, document, "\n".join(lines))
        return
    g = _checked(model)
    orbits = [
        {
            "representative": o.representative,
            "members": list(o.members),
            "isotropy": g.isotropy(o.representative).label,
        }
        for o in g.orbits()
    ]
    lines = [
        f"orbit {o['representative']}: size {len(o['members'])}, isotropy {o['isotropy']}"
        for o in orbits
    ]
    _emit(out, args, {"valid": True, "orbits": orbits}, "\n".join(lines) or "no orbits")


def _cmd_decide(args, out: TextIO) -> None:
    model = _load(args.input)
    flags = chain_flags(args.ring)
    if isinstance(model, Graph):
        verdict = decide_graph(model, flags, ring=args.ring)
    else:
        verdict = decide_groupoid(model, flags, ring=args.ring)
    _emit(out, args, verdict.to_json(), verdict.describe())


def _cmd_decompose(args, out: TextIO) -> None:
    iso = build_iso(_groupoid_of(_load(args.input)), args.ring)
    lines = [
        f"M{len(c.members)}({c.target.spec}) at {_label(c.representative)}"
        for c in iso.charts
    ]
    _emit(out, args, iso.to_json(), "\n".join(lines) or "0")


def _cmd_verify_iso(args, out: TextIO) -> None:
    if args.bound < 1:
        raise UsageError("--bound must be at least 1")
    iso = build_iso(_groupoid_of(_load(args.input)), args.ring)
    report = verify_iso(iso, args.bound)
    lines = [f"basis arrows: {report.basis_size} (bound {report.bound})"]
    for name, check in report.checks.items():
        status = "pass" if check.passed else f"FAIL ({check.counterexample})"
        lines.append(f"{name}: {status} [{check.checked} checked]")
    _emit(out, args, report.to_json(), "\n".join(lines))
    if not report.passed:
        raise _Failure("VerificationFailed", f"failed checks: {', '.join(report.failures)}")


def _cmd_validate(args, out: TextIO) -> None:
    model = _load(args.input)
    if isinstance(model, Graph):
        raise UsageError("validate-groupoid needs a groupoid document")
    report = validate(model)
    lines = [f"{v.kind.value}: {v.detail}" for v in report.violations] or ["valid"]
    _emit(out, args, report.to_json(), "\n".join(lines))
    if not report.ok:
        raise InvalidGroupoid(report)


def _cmd_oracle(args, out: TextIO) -> None:
    ring = args.ring
    if args.kind == "ideals":
        left, right = left_ideals(ring), right_ideals(ring)

        def encode(ideals):
            return [[ring.encode(x) for x in sorted_canonical(i)] for i in ideals]

        document = {
            "ring": ring.spec,
            "left_ideal_count": len(left),
            "right_ideal_count": len(right),
            "left_ideals": encode(left),
            "right_ideals": encode(right),
        }
        lines = [f"{ring.spec}: {len(left)} left ideal(s), {len(right)} right ideal(s)"]
        lines.extend(
            "  {" + ", ".join(ring.render(x) for x in sorted_canonical(i)) + "}" for i in left
        )
        _emit(out, args, document, "\n".join(lines))
        return
    index_set = list(range(1, args.size + 1))
    check = column_submodule_check if args.kind == "column" else row_submodule_check
    report = check(ring, index_set, args.index)
    text = (
        f"{report.side} oracle over {report.ring}, J={index_set}, p={args.index}: "
        f"{len(report.submodules)} submodule(s), {len(report.ideals)} ideal(s), "
        f"bijective: {'yes' if report.bijective else 'no'}, "
        f"inclusion preserving: {'yes' if report.inclusion_preserving else 'no'}"
    )
    _emit(out, args, report.to_json(ring), text)
    if not report.passed:
        raise _Failure("OracleMismatch", "submodules and ideals do not correspond")


_COMMANDS = {
    "analyze": _cmd_analyze,
    "decide": _cmd_decide,
    "decompose": _cmd_decompose,
    "verify-iso": _cmd_verify_iso,
    "validate-groupoid": _cmd_validate,
    "oracle": _cmd_oracle,
}


def _verbosity(count: int) -> int:
    if count >= 3:
        return TRACE
    if count == 2:
        return VERBOSE
    if count == 1:
        return logging.DEBUG
    return logging.WARNING


def run(
    argv: Optional[List[str]] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
) -> int:
    """
    Runs one command line and returns its exit code.

    0 on success, 1 on a domain failure (including failed verifications), 2 on
    usage and input errors. Every failure writes one ``error[<Name>]: <message>``
    line to ``stderr``.
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr

    def fail(name: str, message: str, code: int) -> int:
        stderr.write(f"error[{name}]: {' '.join(str(message).split())}\n")
        return code

    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_OK
    except GroupAlgException as exc:
        # a --ring value that parses but names no usable ring
        return fail(type(exc).__name__, exc, EXIT_USAGE)
    set_logging_level(_verbosity(args.verbose))
    log.debug("running %s", args.command)
    try:
        _COMMANDS[args.command](args, stdout)
    except InputError as exc:
        return fail(type(exc).__name__, exc, EXIT_USAGE)
    except OSError as exc:
        return fail(type(exc).__name__, f"{exc.filename}: {exc.strerror}", EXIT_USAGE)
    except _Failure as exc:
        return fail(exc.name, exc, EXIT_FAILURE)
    except GroupAlgException as exc:
        return fail(type(exc).__name__, exc, EXIT_FAILURE)
    return EXIT_OK


def main() -> None:
    sys.exit(run())
