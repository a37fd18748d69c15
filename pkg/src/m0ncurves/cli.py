"""Command-line interface.

Every command writes one JSON document (to --out, or stdout) and exits with
0 on success, 1 on an input error, and 2 when a budget ran out or the input
is outside what the engine supports; in the last case a partial payload is
still written.
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass, field
from typing import Optional

from . import serialize as ser
from .core import (
    class_of_expression,
    expand_in_dual_basis,
    keel_relation_expression,
    KeelRelation,
)
from .errors import (
    BudgetExhausted,
    GermDepthExceeded,
    M0nError,
    StabilizerTimeout,
    UnsupportedExceptionalLocus,
    UnsupportedFieldExtension,
)
from .families import dihedral_family
from .invariant import (
    CyclicAction,
    DihedralAction,
    cyclic_curve_class,
    dihedral_curve_class,
    k_intersection,
    kollar_bound,
    psi_intersection,
    stabilizer_order,
)
from .losev_manin import (
    ConfigurationFamily,
    HeavyPair,
    LMCycle,
    cycle_from_json,
    cycle_to_json,
    degenerate,
    lift_with_proper_transform,
    parse_partition,
    partition_str,
    toric_expression,
)
from .permutations import parse_permutation
from .search import SearchConfig, deficiency, keel_relations_containing, seek_effective_expression

log = logging.getLogger("m0ncurves")

EXIT_OK, EXIT_INPUT, EXIT_PARTIAL = 0, 1, 2


@dataclass
class CommandResult:
    exit_code: int
    payload: Optional[dict] = None
    diagnostics: list = field(default_factory=list)


def _scalars(C) -> dict:
    return {
        "K": str(k_intersection(C)),
        "psi": str(psi_intersection(C)),
        "kollar_bound": str(kollar_bound(C)),
    }


def _need_n(args) -> int:
    if getattr(args, "n", None) is None:
        raise M0nError("this command needs -n/--n")
    return args.n


# ----------------------------------------------------------------------------
# commands


def cmd_class(args) -> CommandResult:
    n = _need_n(args)
    gens = [parse_permutation(g, n) for g in args.generators]
    if args.kind == "cyclic":
        if len(gens) != 1:
            raise M0nError("a cyclic class takes exactly one generator")
        action = CyclicAction.from_permutation(gens[0])
        C = cyclic_curve_class(action)
        info = {"type": [action.j, action.r]}
    else:
        if len(gens) != 2:
            raise M0nError("a dihedral class takes two generators (rotation, reflection)")
        action = DihedralAction.from_generators(*gens)
        C = dihedral_curve_class(action)
        info = {"type": [action.type_a, action.type_b]}
    payload = ser.class_to_json(C, generators=list(args.generators), action=args.kind,
                                **info, **_scalars(C))
    return CommandResult(EXIT_OK, payload)


def cmd_expand(args) -> CommandResult:
    C = ser.class_from_json(ser.read_json(args.cls))
    E = expand_in_dual_basis(C)
    return CommandResult(EXIT_OK, ser.expression_to_json(
        E, deficiency=deficiency(E), positive=len(E.positive()), negative=len(E.negative())))


def cmd_seek(args) -> CommandResult:
    E = ser.expression_from_json(ser.read_json(args.input))
    cfg = SearchConfig(max_level=args.max_level, node_budget=args.node_budget,
                       restart_on_improvement=not args.no_restart, time_limit=args.time_limit)
    try:
        res = seek_effective_expression(E, cfg)
    except BudgetExhausted as exc:
        payload = ser.expression_to_json(exc.best, deficiency=exc.deficiency, success=False,
                                         stats=exc.stats)
        return CommandResult(EXIT_PARTIAL, payload, [str(exc)])
    stats = {"nodes": res.nodes, "restarts": res.restarts, "seconds": round(res.seconds, 3)}
    return CommandResult(EXIT_OK, ser.expression_to_json(res.expression, deficiency=0,
                                                         success=True, stats=stats))


def cmd_verify(args) -> CommandResult:
    E = ser.expression_from_json(ser.read_json(args.expr))
    C = ser.class_from_json(ser.read_json(args.cls))
    if E.n != C.n:
        return CommandResult(EXIT_INPUT, {"kind": "verdict", "equal": False},
                             [f"n mismatch: {E.n} vs {C.n}"])
    got = class_of_expression(E)
    diff = got - C
    payload = {
        "kind": "verdict",
        "equal": diff.is_zero(),
        "effective": E.is_effective(),
        "mismatches": [[list(D.labels), v] for D, v in diff.items()],
    }
    return CommandResult(EXIT_OK if diff.is_zero() else EXIT_INPUT, payload)


def cmd_keel(args) -> CommandResult:
    n = _need_n(args)
    if args.parts:
        R = KeelRelation.from_parts(parse_partition(args.parts), n)
        return CommandResult(EXIT_OK, {"kind": "relations", "n": n,
                                       "relations": [ser.relation_to_json(R)]})
    if len(args.curves) != 2:
        raise M0nError("give two F-curves, or --parts")
    F, G = (ser.parse_fcurve(t, n) for t in args.curves)
    rels = keel_relations_containing(F, G)
    for R in rels:
        if not class_of_expression(keel_relation_expression(R)).is_zero():
            raise AssertionError(f"relation {R} has nonzero class")
    return CommandResult(EXIT_OK, {"kind": "relations", "n": n,
                                   "relations": [ser.relation_to_json(R) for R in rels]})


def _load_family(args) -> ConfigurationFamily:
    if args.builtin:
        return dihedral_family(args.builtin)
    if not args.family:
        raise M0nError("degenerate needs --family FILE or --builtin {9,12}")
    return ConfigurationFamily.from_json(ser.read_json(args.family))


def cmd_degenerate(args) -> CommandResult:
    fam = _load_family(args)
    order = [int(x) for x in args.order.split(",")] if args.order else None
    history: list[LMCycle] = []
    try:
        cycle = degenerate(fam, order=order, germ_bound=args.germ_bound, history=history)
    except (GermDepthExceeded, UnsupportedFieldExtension) as exc:
        partial = {"kind": "cycle", "complete": False,
                   "steps": [_step_json(c) for c in history]}
        return CommandResult(EXIT_PARTIAL, partial, [str(exc)])
    payload = cycle_to_json(cycle, fam.heavy)
    payload.update(kind="cycle", n=fam.n, complete=True)
    if args.history:
        payload["steps"] = [_step_json(c) for c in history]
    return CommandResult(EXIT_OK, payload)


def _step_json(cycle: LMCycle) -> list:
    return [[partition_str(t), mult] for t, mult in cycle.summary().items()]


def cmd_lift(args) -> CommandResult:
    data = ser.read_json(args.cycle)
    cycle, h = cycle_from_json(data)
    C = ser.class_from_json(ser.read_json(args.cls))
    if h is None:
        h = HeavyPair(*args.heavy)
    try:
        E = lift_with_proper_transform(cycle, h, C)
    except UnsupportedExceptionalLocus as exc:
        partial = ser.expression_to_json(toric_expression(cycle, h, C.n), complete=False)
        return CommandResult(EXIT_PARTIAL, partial, [str(exc)])
    ok = class_of_expression(E) == C
    return CommandResult(EXIT_OK, ser.expression_to_json(E, complete=True, round_trip=ok))


def cmd_stabilizer(args) -> CommandResult:
    C = ser.class_from_json(ser.read_json(args.cls))
    try:
        order = stabilizer_order(C, node_budget=args.node_budget, method=args.method)
    except StabilizerTimeout as exc:
        return CommandResult(EXIT_PARTIAL, {"kind": "stabilizer", "order": None}, [str(exc)])
    return CommandResult(EXIT_OK, {"kind": "stabilizer", "n": C.n, "order": order})


# ----------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-n", "--n", type=int, default=argparse.SUPPRESS,
                        help="number of marked points")
    common.add_argument("--out", default=argparse.SUPPRESS, help="output file (default stdout)")
    common.add_argument("--log-level", default=argparse.SUPPRESS)

    p = argparse.ArgumentParser(prog="m0ncurves", description=__doc__.splitlines()[0])
    p.add_argument("-n", "--n", type=int, default=None)
    p.add_argument("--out", default="-")
    p.add_argument("--log-level", default="WARNING")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("class", parents=[common], help="class of an invariant curve")
    s.add_argument("kind", choices=["cyclic", "dihedral"])
    s.add_argument("-g", "--generators", nargs="+", required=True)
    s.set_defaults(func=cmd_class)

    s = sub.add_parser("expand", parents=[common], help="expand a class over dual curves")
    s.add_argument("--class", dest="cls", required=True)
    s.set_defaults(func=cmd_expand)

    s = sub.add_parser("seek-effective", parents=[common], help="search for an effective expression")
    s.add_argument("--input", required=True)
    s.add_argument("--max-level", type=int, default=SearchConfig.max_level)
    s.add_argument("--node-budget", type=int, default=SearchConfig.node_budget)
    s.add_argument("--time-limit", type=float, default=None)
    s.add_argument("--no-restart", action="store_true")
    s.set_defaults(func=cmd_seek)

    s = sub.add_parser("verify", parents=[common], help="check an expression against a class")
    s.add_argument("--expr", required=True)
    s.add_argument("--class", dest="cls", required=True)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("keel-relations", parents=[common],
                       help="Keel relations through two F-curves, or one from a 5-part partition")
    s.add_argument("curves", nargs="*", help="two F-curves such as 'F{1,2|3|4|5,6}'")
    s.add_argument("--parts", help="ordered 5-part partition, e.g. '1|2|3|4|5,6'")
    s.set_defaults(func=cmd_keel)

    s = sub.add_parser("degenerate", parents=[common], help="toric degeneration on L_n")
    s.add_argument("--family")
    s.add_argument("--builtin", type=int, choices=[9, 12])
    s.add_argument("--order", help="comma-separated light labels (default ascending, all but last)")
    s.add_argument("--germ-bound", type=int, default=None)
    s.add_argument("--history", action="store_true", help="include every intermediate cycle")
    s.set_defaults(func=cmd_degenerate)

    s = sub.add_parser("lift", parents=[common], help="lift a toric cycle with proper-transform corrections")
    s.add_argument("--cycle", required=True)
    s.add_argument("--class", dest="cls", required=True)
    s.add_argument("--heavy", type=int, nargs=2, default=(8, 9))
    s.set_defaults(func=cmd_lift)

    s = sub.add_parser("stabilizer", parents=[common], help="order of the stabilizer of a class")
    s.add_argument("--class", dest="cls", required=True)
    s.add_argument("--method", choices=["auto", "brute", "backtrack"], default="auto")
    s.add_argument("--node-budget", type=int, default=10_000_000)
    s.set_defaults(func=cmd_stabilizer)
    return p


def run(argv=None) -> CommandResult:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=str(args.log_level).upper(), stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        res = args.func(args)
    except M0nError as exc:
        res = CommandResult(EXIT_INPUT, None, [str(exc)])
    level = logging.ERROR if res.exit_code else logging.INFO
    for line in res.diagnostics:
        log.log(level, line)
    if res.payload is not None:
        ser.write_json(args.out, res.payload)
    return res


def main(argv=None) -> int:
    return run(argv).exit_code


if __name__ == "__main__":
    sys.exit(main())
