"""Classes of fixed-point curves of cyclic and dihedral actions.

Cyclic: C^sigma for a balanced sigma with two nontrivial cycles.
Dihedral: the fixed locus of G = <sigma, tau> isomorphic to D_k.

Both classes are written down from the closed-form intersection tables, not
computed geometrically; the tests cross-check them against the invariants
(K and psi intersections, level sums, G-invariance).
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .core import (
    CurveClass,
    FCurveExpression,
    act,
    canonical_divisor,
    canonical_mask,
    expand_in_dual_basis,
    full_mask,
    mask_of,
    popcount,
    psi_divisor,
)
from .errors import M0nError, NotACurve, StabilizerTimeout
from .permutations import Permutation

log = logging.getLogger(__name__)


# ----------------------------------------------------------------------------
# cyclic actions


@dataclass(frozen=True)
class CyclicAction:
    sigma: Permutation
    j: int
    r: int
    cycles: tuple[tuple[int, ...], tuple[int, ...]]
    fixed: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.sigma.n

    @classmethod
    def from_permutation(cls, sigma: Permutation) -> "CyclicAction":
        t = balanced_type(sigma)
        if t is None:
            raise NotACurve(f"{sigma} is not balanced with two nontrivial cycles")
        c1, c2 = sigma.cycles()
        return cls(sigma, t[0], t[1], (c1, c2), tuple(sigma.fixed_points()))


def balanced_type(sigma: Permutation, n: Optional[int] = None) -> Optional[tuple[int, int]]:
    """(j, r) if sigma has exactly two nontrivial cycles of equal length r and
    j = n - 2r <= 2 fixed points; None otherwise."""
    n = sigma.n if n is None else n
    cs = sigma.cycles()
    if len(cs) != 2 or len(cs[0]) != len(cs[1]):
        return None
    r = len(cs[0])
    j = n - 2 * r
    if not 0 <= j <= 2:
        return None
    return j, r


class _Assigner:
    """Writes intersection numbers by canonical divisor; equal rewrites are
    fine, conflicting ones are a bug in the table."""

    def __init__(self, n: int):
        self.n = n
        self.values: dict[int, int] = {}

    def set(self, labels, value: int) -> None:
        mask = canonical_mask(mask_of(labels), self.n)
        size = popcount(mask)
        if size < 2 or size > self.n - 2:
            raise NotACurve(f"table produced a non-divisor {sorted(labels)}")
        old = self.values.get(mask)
        if old is not None and old != value:
            raise M0nError(f"conflicting values {old}, {value} at {sorted(labels)}")
        self.values[mask] = value

    def result(self) -> CurveClass:
        return CurveClass(self.n, self.values)


def cyclic_curve_class(a: CyclicAction | Permutation) -> CurveClass:
    if isinstance(a, Permutation):
        a = CyclicAction.from_permutation(a)
    s1, s2 = a.cycles
    out = _Assigner(a.n)
    for h in s1:
        for i in s2:
            out.set((h, i), 1)
    if a.j == 0:
        out.set(s1, 2)
    elif a.j == 1:
        (f,) = a.fixed
        for s in (s1, s2):
            out.set(s, 1)
            out.set(s + (f,), 1)
    else:
        f = a.fixed[0]
        for s in (s1, s2):
            out.set(s + (f,), 1)
    return out.result()


def cyclic_effective_expression(a: CyclicAction | Permutation) -> FCurveExpression:
    """All-ones effective expression for C^sigma.

    Relabel so sigma = (1..r)(r+1..2r) with fixed points 2r+1, 2r+2, expand
    in the dual basis there, and relabel back.
    """
    if isinstance(a, Permutation):
        a = CyclicAction.from_permutation(a)
    s1, s2 = a.cycles
    order = list(s1) + list(s2) + list(a.fixed)
    # g sends the standard labels to the actual ones
    g = Permutation.from_mapping({i + 1: x for i, x in enumerate(order)}, a.n)
    std = Permutation.from_cycles([range(1, a.r + 1), range(a.r + 1, 2 * a.r + 1)], a.n)
    expr = expand_in_dual_basis(cyclic_curve_class(std))
    return act(g, expr)


# ----------------------------------------------------------------------------
# dihedral actions


def generate_group(gens: list[Permutation]) -> list[Permutation]:
    n = gens[0].n
    seen = {Permutation.identity(n)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = g * x
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(seen, key=lambda p: p.images)


def _orbits(gens: list[Permutation]) -> list[tuple[int, ...]]:
    n = gens[0].n
    seen: set[int] = set()
    out = []
    for start in range(1, n + 1):
        if start in seen:
            continue
        orbit = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for g in gens:
                y = g(x)
                if y not in orbit:
                    orbit.add(y)
                    stack.append(y)
        seen |= orbit
        out.append(tuple(sorted(orbit)))
    return out


@dataclass(frozen=True)
class DihedralAction:
    """Normalized dihedral data derived from a generator pair."""

    k: int
    sigma: Permutation
    tau: Permutation
    type_a: int
    type_b: int
    cycles: tuple[tuple[int, ...], ...]          # sigma_1, sigma_2[, sigma_3[, sigma_4]]
    reflections: tuple[Permutation, ...] = ()    # tau_1 (and tau_2) fixing m (and n4)
    fixed_labels: tuple[int, ...] = ()           # m (and n4)
    order_two: tuple[int, ...] = ()              # {l, tau(l)} when a = 1
    extra: dict = field(default_factory=dict, compare=False)

    @property
    def n(self) -> int:
        return self.sigma.n

    @classmethod
    def from_generators(cls, sigma: Permutation, tau: Permutation) -> "DihedralAction":
        n = sigma.n
        if tau.n != n:
            raise M0nError("generators act on different label sets")
        group = generate_group([sigma, tau])
        size = len(group)
        if size % 2 or size < 6:
            raise NotACurve(f"<sigma, tau> has order {size}, not a dihedral group D_k, k >= 3")
        k = size // 2
        rotations = [g for g in group if g.order() == k and all(len(c) == k for c in g.cycles())]
        if sigma.order() == k and sigma in rotations:
            rot = sigma
        elif rotations:
            rot = rotations[0]
        else:
            raise NotACurve("no rotation of order k acting with k-cycles")
        powers = {rot ** i for i in range(k)}
        refl = [g for g in group if g not in powers]
        if any(r.order() != 2 for r in refl) or any(r * rot * r != rot.inverse() for r in refl):
            raise NotACurve("group is not dihedral")
        base = tau if tau in refl else refl[0]

        orbits = _orbits([rot, base])
        sizes = sorted(len(o) for o in orbits)
        big = [o for o in orbits if len(o) == 2 * k]
        twos = [o for o in orbits if len(o) == 2]
        ks = [o for o in orbits if len(o) == k]
        if len(big) != 1 or len(twos) + len(ks) + 1 != len(orbits) or len(twos) > 1 or len(ks) > 2:
            raise NotACurve(f"orbit sizes {sizes} do not give a curve")
        a, b = len(twos), len(ks)
        if n not in (2 * k, 2 * k + 2, 3 * k, 3 * k + 2, 4 * k, 4 * k + 2):
            raise NotACurve(f"n = {n} impossible for D_{k}")
        # twos must be sigma-fixed pairs swapped by reflections
        if twos and any(rot(x) != x for x in twos[0]):
            raise NotACurve("order-two orbit is not fixed by the rotation")

        cyc = rot.cycles()
        big_set = set(big[0])
        bigc = sorted((c for c in cyc if set(c) <= big_set), key=min)
        s1, s2 = bigc
        specials = sorted((c for c in cyc if c not in bigc), key=min)
        chosen = []
        fixed = []
        for sc in specials:
            found = None
            for j in range(k):
                t = base * rot ** j
                fixed_here = [x for x in sorted(sc) if t(x) == x]
                if fixed_here:
                    found = (t, fixed_here[0])
                    break
            if found is None:
                raise NotACurve(f"no reflection fixes a point of {sc}")
            chosen.append(found[0])
            fixed.append(found[1])
        return cls(
            k=k,
            sigma=rot,
            tau=base,
            type_a=a,
            type_b=b,
            cycles=(s1, s2) + tuple(specials),
            reflections=tuple(chosen),
            fixed_labels=tuple(fixed),
            order_two=tuple(twos[0]) if twos else (),
        )


def dihedral_curve_class(a: DihedralAction) -> CurveClass:
    """Intersection table of the dihedral fixed curve by (type_a, type_b, k mod 2)."""
    k, sigma = a.k, a.sigma
    s1, s2 = a.cycles[0], a.cycles[1]
    out = _Assigner(a.n)
    if a.type_a == 0:
        out.set(s1, 2)
        out.set(s2, 2)
    else:
        ell = a.order_two[0]
        out.set(s1 + (ell,), 1)
        out.set(s2 + (ell,), 1)

    if a.type_b == 0:
        for i in s1:
            for j in s2:
                out.set((i, j), 1)
        return out.result()

    if a.type_b == 1:
        if k % 2:
            for i in s1:
                for j in s2:
                    out.set((i, j), 1)
        else:
            tau1 = a.reflections[0]
            for i in s1:
                for t in range(k // 2):
                    out.set((i, (sigma ** (2 * t + 1))(tau1(i))), 2)

    for tau_x, m in zip(a.reflections, a.fixed_labels):
        for i in s1:
            for t in range(k):
                st = sigma ** t
                out.set((st(i), st(tau_x(i)), st(m)), 1)
    return out.result()


def k_intersection(C: CurveClass) -> Fraction:
    return canonical_divisor(C.n).pair(C)


def psi_intersection(C: CurveClass) -> Fraction:
    return psi_divisor(C.n).pair(C)


def kollar_bound(C: CurveClass) -> Fraction:
    """-(C.K) + dim, the lower bound on the deformation space dimension."""
    return -k_intersection(C) + (C.n - 3)


# ----------------------------------------------------------------------------
# stabilizer of a class


def _set_family(C: CurveClass) -> dict[int, int]:
    full = full_mask(C.n)
    fam = {}
    for mask, v in C.as_dict().items():
        fam[mask] = v
        fam[full ^ mask] = v
    return fam


def _label_signature(label: int, fam: dict[int, int]) -> tuple:
    bit = 1 << (label - 1)
    return tuple(sorted((v, popcount(m)) for m, v in fam.items() if m & bit))


def stabilizer_order_bruteforce(C: CurveClass) -> int:
    n = C.n
    count = 0
    for images in itertools.permutations(range(1, n + 1)):
        if act(Permutation(images), C) == C:
            count += 1
    return count


def stabilizer_order(C: CurveClass, node_budget: int = 10_000_000, method: str = "auto") -> int:
    """Order of {g in S_n : g.C = C}.

    Backtracks over the images of 1, 2, ..., n.  Labels may only go to labels
    with the same signature, and a subset of the family (I or I^c with
    C.D_I = v) is checked as soon as all its labels are placed.
    """
    n = C.n
    if method == "brute" or (method == "auto" and n <= 7):
        return stabilizer_order_bruteforce(C)
    fam = _set_family(C)
    sigs = {i: _label_signature(i, fam) for i in range(1, n + 1)}
    candidates = {i: [j for j in range(1, n + 1) if sigs[j] == sigs[i]] for i in range(1, n + 1)}
    # subsets grouped by their largest label: checkable once that label is placed
    by_last: dict[int, list[tuple[int, int]]] = {i: [] for i in range(1, n + 1)}
    for m, v in fam.items():
        by_last[m.bit_length()].append((m, v))

    images = [0] * (n + 1)
    used = [False] * (n + 1)
    nodes = 0
    count = 0

    def image_mask(m: int) -> int:
        out = 0
        i = 1
        while m:
            if m & 1:
                out |= 1 << (images[i] - 1)
            m >>= 1
            i += 1
        return out

    def rec(i: int) -> None:
        nonlocal nodes, count
        if i > n:
            count += 1
            return
        for j in candidates[i]:
            if used[j]:
                continue
            nodes += 1
            if nodes > node_budget:
                raise StabilizerTimeout(f"stabilizer search exceeded {node_budget} nodes")
            images[i] = j
            used[j] = True
            if all(fam.get(image_mask(m)) == v for m, v in by_last[i]):
                rec(i + 1)
            used[j] = False
        images[i] = 0

    rec(1)
    log.debug("stabilizer search: %d nodes", nodes)
    return count
