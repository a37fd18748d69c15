"""End-to-end run for the D_3-invariant curves at n = 9 or 12.

class -> degeneration on L_n -> lift -> search -> verification, with timings.
``--start expansion`` searches from the dual-basis expansion of the class
instead of from the lifted toric expression.

    python scripts/dihedral_pipeline.py --n 9
    python scripts/dihedral_pipeline.py --n 12 --start expansion --time-limit 600
"""

import argparse
import logging
import time

from m0ncurves.core import class_of_expression, expand_in_dual_basis
from m0ncurves.errors import BudgetExhausted
from m0ncurves.families import HEAVY, dihedral_family
from m0ncurves.invariant import DihedralAction, dihedral_curve_class, k_intersection
from m0ncurves.losev_manin import degenerate, lift_with_proper_transform
from m0ncurves.permutations import parse_permutation
from m0ncurves.search import SearchConfig, deficiency, seek_effective_expression
from m0ncurves.serialize import expression_to_text

GENERATORS = {
    9: ("(123)(456)(789)", "(14)(26)(35)(89)"),
    12: ("(123)(456)(789)(abc)", "(14)(26)(35)(89)(bc)"),
}
ORDERS = {9: None, 12: [1, 2, 3, 4, 5, 6, 7, 10, 11]}


def step(name, t0):
    t = time.perf_counter()
    print(f"[{t - t0:8.2f} s] {name}")
    return t


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, choices=[9, 12], default=9)
    ap.add_argument("--start", choices=["lifted", "expansion"], default="lifted")
    ap.add_argument("--time-limit", type=float, default=None)
    ap.add_argument("--node-budget", type=int, default=SearchConfig.node_budget)
    ap.add_argument("--quiet", action="store_true")
    args = ap.parse_args()
    logging.basicConfig(level=logging.WARNING if args.quiet else logging.INFO,
                        format="%(levelname)s %(name)s: %(message)s")
    n = args.n
    t = time.perf_counter()

    rot, ref = (parse_permutation(g, n) for g in GENERATORS[n])
    C = dihedral_curve_class(DihedralAction.from_generators(rot, ref))
    t = step(f"class: {len(list(C.items()))} nonzero pairings, C.K = {k_intersection(C)}", t)

    if args.start == "lifted":
        cycle = degenerate(dihedral_family(n), order=ORDERS[n])
        t = step(f"degeneration: {len(cycle)} torus-invariant components", t)
        start = lift_with_proper_transform(cycle, HEAVY, C)
        assert class_of_expression(start) == C
        t = step(f"lift: {len(start)} terms, deficiency {deficiency(start)}, class checked", t)
    else:
        start = expand_in_dual_basis(C)
        t = step(f"expansion: {len(start)} terms, deficiency {deficiency(start)}", t)

    cfg = SearchConfig(node_budget=args.node_budget, time_limit=args.time_limit)
    try:
        res = seek_effective_expression(start, cfg)
    except BudgetExhausted as exc:
        step(f"search stopped: {exc} (best deficiency {exc.deficiency})", t)
        return 2
    t = step(f"search: {res.nodes} nodes, {res.restarts} restarts", t)
    ok = class_of_expression(res.expression) == C and res.expression.is_effective()
    step(f"verification: {'ok' if ok else 'FAILED'}; {len(res.expression)} terms", t)
    print(expression_to_text(res.expression), end="")
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
