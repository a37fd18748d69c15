"""Keel-relation combinatorics and the effective-expression search.

Two F-curves lie in a common Keel relation exactly when their partitions
have a common refinement with five atoms.  The search walks the graph whose
edges add (or subtract) such a relation touching one positive and one
negative term, breadth-first by level, and restarts from any expression with
strictly smaller negative mass.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Iterator, Optional

from .core import (
    CurveClass,
    FCurve,
    FCurveExpression,
    KeelRelation,
    class_of_expression,
    labels_of,
    lowbit,
)
from .errors import BudgetExhausted

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class RefinementData:
    refinement_size: int
    shared_blocks: frozenset
    atoms: tuple[int, ...] = ()


def refinement(F: FCurve, G: FCurve) -> RefinementData:
    atoms = sorted({a & b for a in F.blocks for b in G.blocks if a & b}, key=lowbit)
    shared = frozenset(F.blocks) & frozenset(G.blocks)
    return RefinementData(len(atoms), shared, tuple(atoms))


def adjacent(F: FCurve, G: FCurve) -> bool:
    return refinement(F, G).refinement_size == 5


def _relation_sort_key(R: KeelRelation):
    return tuple(labels_of(p) for p in R.parts)


@lru_cache(maxsize=1 << 20)
def _relations_on_atoms(atoms: tuple[int, ...], n: int) -> tuple[tuple[KeelRelation, frozenset], ...]:
    """All Keel relations on five atoms, one representative per +-pair.

    Returns (relation, signed term set) with the lexicographically least
    ordering chosen as representative.
    """
    best: dict[frozenset, KeelRelation] = {}
    for perm in permutations(atoms):
        R = KeelRelation(n, perm)
        terms = frozenset(R.terms())
        neg = frozenset((F, -c) for F, c in terms)
        key = min(terms, neg, key=lambda s: sorted((F.blocks, c) for F, c in s))
        cur = best.get(key)
        if cur is None or _relation_sort_key(R) < _relation_sort_key(cur):
            best[key] = R
    out = [(R, frozenset(R.terms())) for R in best.values()]
    out.sort(key=lambda p: _relation_sort_key(p[0]))
    return tuple(out)


@lru_cache(maxsize=1 << 20)
def keel_relations_containing(F: FCurve, G: FCurve) -> tuple[KeelRelation, ...]:
    """The Keel relations (up to sign) in which both F and G occur."""
    if F.n != G.n or F == G:
        return ()
    ref = refinement(F, G)
    if ref.refinement_size != 5:
        return ()
    out = []
    for R, terms in _relations_on_atoms(ref.atoms, F.n):
        curves = {T for T, _ in terms}
        if F in curves and G in curves:
            out.append(R)
    return tuple(out)


def deficiency(E: FCurveExpression) -> int:
    """m(E): total negative mass."""
    return -sum(c for c in E.terms.values() if c < 0)


def tilde_neighbors(E: FCurveExpression) -> Iterator[tuple[KeelRelation, int, FCurveExpression]]:
    """Edges out of E: (R, sign, E + sign * R) for every relation touching a
    positive and a negative term of E.  Deterministic order: positive term,
    then negative term, then relation, then sign (+ before -)."""
    items = E.items()
    pos = [F for F, c in items if c > 0]
    neg = [F for F, c in items if c < 0]
    seen: set[KeelRelation] = set()
    base = E.terms
    for F in pos:
        for G in neg:
            for R in keel_relations_containing(F, G):
                if R in seen:
                    continue
                seen.add(R)
                terms = R.terms()
                for sign in (1, -1):
                    new = dict(base)
                    for T, c in terms:
                        v = new.get(T, 0) + sign * c
                        if v:
                            new[T] = v
                        else:
                            new.pop(T, None)
                    yield R, sign, FCurveExpression(E.n, new)


@dataclass
class SearchConfig:
    max_level: int = 4
    node_budget: int = 5_000_000
    restart_on_improvement: bool = True
    time_limit: Optional[float] = None


@dataclass
class SearchResult:
    expression: FCurveExpression
    deficiency: int
    success: bool
    restarts: int = 0
    nodes: int = 0
    seconds: float = 0.0
    trail: list = field(default_factory=list)


def _frozen(E: FCurveExpression) -> frozenset:
    return frozenset(E.terms.items())


def seek_effective_expression(E: FCurveExpression, cfg: SearchConfig | None = None) -> SearchResult:
    """Search for an effective expression numerically equal to E.

    Raises BudgetExhausted (carrying the best expression) if the level or
    node budget runs out first.
    """
    cfg = cfg or SearchConfig()
    start = time.perf_counter()
    current = E
    cur_def = deficiency(current)
    best, best_def = current, cur_def
    nodes = 0
    restarts = 0
    trail: list = []

    def stats():
        return {"nodes": nodes, "restarts": restarts, "seconds": time.perf_counter() - start}

    def fail(msg):
        raise BudgetExhausted(msg, best=best, deficiency=best_def, stats=stats())

    while cur_def > 0:
        visited = {_frozen(current)}
        frontier = [current]
        improved = None
        for level in range(1, cfg.max_level + 1):
            nxt = []
            for node in frontier:
                children = []
                for R, sign, child in tilde_neighbors(node):
                    key = _frozen(child)
                    if key in visited:
                        continue
                    visited.add(key)
                    nodes += 1
                    if nodes > cfg.node_budget:
                        fail(f"node budget {cfg.node_budget} exhausted")
                    d = deficiency(child)
                    if d < best_def:
                        best, best_def = child, d
                    children.append((d, child, R, sign))
                    if not cfg.restart_on_improvement and d == 0:
                        return SearchResult(child, 0, True, restarts, nodes,
                                            time.perf_counter() - start, trail)
                if cfg.time_limit and time.perf_counter() - start > cfg.time_limit:
                    fail(f"time limit {cfg.time_limit}s exhausted")
                if cfg.restart_on_improvement:
                    better = [c for c in children if c[0] < cur_def]
                    if better:
                        improved = min(better, key=lambda c: (c[0], c[1].key()))
                        break
                nxt.extend(c[1] for c in children)
            if improved is not None:
                break
            log.debug("level %d: %d new nodes, deficiency %d", level, len(nxt), cur_def)
            if not nxt:
                break
            nxt.sort(key=lambda X: X.key())
            frontier = nxt
        if improved is None:
            fail(f"no improvement on deficiency {cur_def} within level {cfg.max_level}")
        d, current, R, sign = improved
        trail.append((R, sign, d))
        restarts += 1
        log.info("deficiency %d -> %d (restart %d, %d nodes)", cur_def, d, restarts, nodes)
        cur_def = d
    return SearchResult(current, 0, True, restarts, nodes, time.perf_counter() - start, trail)


def verify_expression(E: FCurveExpression, target: CurveClass) -> bool:
    return class_of_expression(E) == target
