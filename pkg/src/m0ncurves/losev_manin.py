"""Losev-Manin chains and toric degeneration of a one-parameter family.

Two heavy labels sit at 0 and infinity; the light labels have coordinates in
C* given by rational functions of a parameter over Q(zeta_m).  A boundary
stratum of L_n is an ordered partition of the light labels read from the
0-end to the infinity-end.  Light points may coincide in L_n, so the chain
type at a parameter value z0 only depends on the orders of vanishing of the
coordinates at z0 (larger order means closer to 0).

The degeneration applies, for each light label i in turn, the limit under the
one-parameter subgroup T_i that scales x_i.  Every intermediate component has
at most one *active* block whose coordinates move (up to a common scalar);
all other blocks are frozen.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Optional, Sequence

from .core import (
    CurveClass,
    FCurve,
    FCurveExpression,
    full_mask,
    labels_of,
    mask_of,
    popcount,
)
from .cyclotomic import CycElem, Poly, RatFunc
from .errors import (
    DegenerateFamily,
    GermDepthExceeded,
    M0nError,
    NotOneDimensional,
    UnsupportedExceptionalLocus,
)
from .permutations import label_str, parse_label

log = logging.getLogger(__name__)

Block = tuple[int, ...]
OrderedPartition = tuple[Block, ...]


# ----------------------------------------------------------------------------
# ordered partitions


def make_partition(blocks: Iterable[Iterable[int]]) -> OrderedPartition:
    out = tuple(tuple(sorted(b)) for b in blocks)
    seen: set[int] = set()
    for b in out:
        if not b:
            raise M0nError("empty block in ordered partition")
        if seen & set(b):
            raise M0nError("blocks of an ordered partition must be disjoint")
        seen |= set(b)
    return out


def parse_partition(text: str) -> OrderedPartition:
    """'25|147|36' (one character per label, a/b/c = 10/11/12) or
    '2,5|1,4,7|3,6'."""
    blocks = []
    for part in text.split("|"):
        part = part.strip()
        if "," in part or " " in part:
            labels = [parse_label(t) for t in part.replace(" ", ",").split(",") if t]
        else:
            labels = [parse_label(ch) for ch in part]
        blocks.append(labels)
    return make_partition(blocks)


def partition_str(t: OrderedPartition) -> str:
    if all(x <= 12 for b in t for x in b):
        return "|".join("".join(label_str(x, aliases=True) for x in b) for b in t)
    return "|".join(",".join(map(str, b)) for b in t)


def is_one_dimensional(t: OrderedPartition) -> bool:
    sizes = sorted(len(b) for b in t)
    return bool(sizes) and sizes[-1] == 2 and all(s == 1 for s in sizes[:-1])


@dataclass(frozen=True)
class HeavyPair:
    zero_label: int
    infinity_label: int

    def __post_init__(self):
        if self.zero_label == self.infinity_label:
            raise M0nError("heavy labels must differ")


def torus_curve_to_fcurve(t: OrderedPartition, h: HeavyPair, n: Optional[int] = None) -> FCurve:
    """({0} + earlier blocks, {a}, {b}, later blocks + {inf}) for the unique
    doubleton {a, b} of t."""
    if not is_one_dimensional(t):
        raise NotOneDimensional(f"{partition_str(t)} is not a torus-invariant curve")
    k = next(idx for idx, b in enumerate(t) if len(b) == 2)
    a, b = t[k]
    before = [x for blk in t[:k] for x in blk] + [h.zero_label]
    after = [x for blk in t[k + 1:] for x in blk] + [h.infinity_label]
    total = n if n is not None else sum(len(b) for b in t) + 2
    return FCurve.from_blocks([before, [a], [b], after], total)


@dataclass(frozen=True)
class Pushforward:
    kind: str                                   # "torus", "contracted" or "non-toric"
    prefix: tuple[int, ...] = ()
    pair: tuple[int, ...] = ()
    suffix: tuple[int, ...] = ()

    def partition(self) -> OrderedPartition:
        """Representative torus curve: prefix and suffix as ascending singletons."""
        if self.kind != "torus":
            raise NotOneDimensional(f"{self.kind} image has no torus-curve type")
        return tuple((x,) for x in self.prefix) + (self.pair,) + tuple((x,) for x in self.suffix)


def pushforward_fcurve(F: FCurve, h: HeavyPair) -> Pushforward:
    z = 1 << (h.zero_label - 1)
    w = 1 << (h.infinity_label - 1)
    bz = next(b for b in F.blocks if b & z)
    bw = next(b for b in F.blocks if b & w)
    if bz == bw:
        return Pushforward("contracted")
    middle = [b for b in F.blocks if b not in (bz, bw)]
    if any(popcount(b) != 1 for b in middle):
        return Pushforward("non-toric")
    pair = tuple(sorted(labels_of(middle[0] | middle[1])))
    return Pushforward("torus", labels_of(bz ^ z), pair, labels_of(bw ^ w))


# ----------------------------------------------------------------------------
# families


@dataclass
class ConfigurationFamily:
    """Light-point coordinates x_l(z) with the heavy points at 0 and infinity."""

    m: int
    heavy: HeavyPair
    coords: dict[int, RatFunc]

    def __post_init__(self):
        for l, x in self.coords.items():
            if x.is_zero():
                raise DegenerateFamily(f"x_{l} is identically 0")
            if l in (self.heavy.zero_label, self.heavy.infinity_label):
                raise M0nError(f"label {l} is heavy and cannot carry a coordinate")
        labels = sorted(self.coords)
        for i, a in enumerate(labels):
            for b in labels[i + 1:]:
                if (self.coords[a] - self.coords[b]).is_zero():
                    raise DegenerateFamily(f"x_{a} and x_{b} coincide identically")

    @property
    def light(self) -> tuple[int, ...]:
        return tuple(sorted(self.coords))

    @property
    def n(self) -> int:
        """Total number of marked points (light + 2 heavy)."""
        return len(self.coords) + 2

    @classmethod
    def from_positions(cls, m: int, positions: Mapping[int, RatFunc | None], heavy: HeavyPair) -> "ConfigurationFamily":
        """Normalize points of P^1 (None = infinity) by x -> (x - p)/(x - q)
        where p, q are the heavy positions."""
        p = positions[heavy.zero_label]
        q = positions[heavy.infinity_label]
        coords = {}
        for l, y in positions.items():
            if l in (heavy.zero_label, heavy.infinity_label):
                continue
            if y is None:
                if p is None or q is None:
                    raise DegenerateFamily("a light point coincides with a heavy point")
                coords[l] = RatFunc.const(m, 1)
                continue
            if p is None:
                coords[l] = 1 / (y - q)
            elif q is None:
                coords[l] = y - p
            else:
                coords[l] = (y - p) / (y - q)
        return cls(m, heavy, coords)

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "heavy": [self.heavy.zero_label, self.heavy.infinity_label],
            "coords": {str(l): self.coords[l].to_json() for l in self.light},
        }

    @classmethod
    def from_json(cls, data: dict) -> "ConfigurationFamily":
        m = int(data["m"])
        heavy = HeavyPair(*[int(x) for x in data["heavy"]])
        coords = {int(l): RatFunc.from_json(m, c) for l, c in data["coords"].items()}
        return cls(m, heavy, coords)


def candidate_points(coords: Mapping[int, RatFunc]) -> list[Optional[CycElem]]:
    """Roots of all numerators and denominators, then infinity (None)."""
    pts: list[Optional[CycElem]] = []
    for l in sorted(coords):
        x = coords[l]
        for poly in (x.num, x.den):
            if poly.degree >= 1:
                for r in poly.roots():
                    if r not in pts:
                        pts.append(r)
    pts.append(None)
    return pts


def valuations(coords: Mapping[int, RatFunc], z0: Optional[CycElem]) -> dict[int, int]:
    return {l: x.valuation(z0) for l, x in coords.items()}


def _group_desc(weights: Mapping[int, int]) -> list[tuple[int, Block]]:
    levels = sorted(set(weights.values()), reverse=True)
    return [(w, tuple(sorted(l for l, v in weights.items() if v == w))) for w in levels]


def chain_type(coords: Mapping[int, RatFunc], z0: Optional[CycElem]) -> OrderedPartition:
    return tuple(b for _, b in _group_desc(valuations(coords, z0)))


def special_points(fam: ConfigurationFamily) -> list[tuple[Optional[CycElem], OrderedPartition]]:
    out = []
    for z0 in candidate_points(fam.coords):
        t = chain_type(fam.coords, z0)
        if len(t) > 1:
            out.append((z0, t))
    return out


_SAMPLES = (Fraction(2), Fraction(3), Fraction(5, 7), Fraction(-11, 3), Fraction(13))


def family_degree(coords: Mapping[int, RatFunc]) -> int:
    """Degree of z -> [x_l(z)] modulo common scaling; 0 if constant.

    Uses ratios r_l = x_l / x_base.  For a sample value s the polynomials
    num_l(w) den_l(s) - den_l(w) num_l(s) share exactly the fibre over s as
    common roots; their gcd has the map degree for generic s.  Several
    samples are tried and the minimum is taken.
    """
    labels = sorted(coords)
    base = coords[labels[0]]
    ratios = [coords[l] / base for l in labels[1:]]
    ratios = [r for r in ratios if not r.is_constant()]
    if not ratios:
        return 0
    if any(r.degree == 1 for r in ratios):
        return 1
    m = ratios[0].m
    best = None
    for s in _SAMPLES:
        try:
            vals = [(r.num(s), r.den(s)) for r in ratios]
        except ZeroDivisionError:
            continue
        if any(d.is_zero() for _, d in vals):
            continue
        g = None
        for r, (a, b) in zip(ratios, vals):
            P = r.num * Poly.const(m, b) - r.den * Poly.const(m, a)
            g = P if g is None else g.gcd(P)
        deg = g.degree if g is not None else 0
        best = deg if best is None else min(best, deg)
        if best == 1:
            break
    if best is None:
        raise M0nError("could not sample the family at a regular point")
    return best


# ----------------------------------------------------------------------------
# cycles


@dataclass
class LMComponent:
    """A curve in the stratum of ``type``.

    ``weight`` times the pushforward of the parameter line under ``family``
    (coordinates of the active block) is this component's cycle; the cycle
    multiplicity on the image is weight * family degree.  ``family`` is None
    for a torus-fixed point.
    """

    type: OrderedPartition
    weight: int = 1
    active: Optional[int] = None
    family: Optional[dict[int, RatFunc]] = None
    origin: str = ""

    @property
    def multiplicity(self) -> int:
        if self.family is None:
            return self.weight
        return self.weight * family_degree(self.family)

    def type_str(self) -> str:
        return partition_str(self.type)

    def __repr__(self) -> str:
        mult = self.multiplicity
        return f"{self.type_str()}" + (f" ({mult})" if mult != 1 else "")


@dataclass
class LMCycle:
    components: list[LMComponent] = field(default_factory=list)

    def summary(self) -> Counter:
        """type -> total multiplicity."""
        out: Counter = Counter()
        for c in self.components:
            out[c.type] += c.multiplicity
        return out

    def is_torus_invariant(self) -> bool:
        return all(is_one_dimensional(c.type) for c in self.components)

    def __len__(self) -> int:
        return len(self.components)


@dataclass
class DegenerationConfig:
    germ_bound: Optional[int] = None   # default n + 2
    order: Optional[Sequence[int]] = None


def _split_off(t: OrderedPartition, b: int, i: int) -> OrderedPartition:
    block = t[b]
    rest = tuple(x for x in block if x != i)
    return t[:b] + ((i,), rest) + t[b + 1:]


def limit_step(cycle: LMCycle, i: int, germ_bound: int = 64) -> LMCycle:
    """Limit of the cycle under the one-parameter subgroup scaling x_i."""
    out: list[LMComponent] = []
    for comp in cycle.components:
        t = comp.type
        b = next(k for k, blk in enumerate(t) if i in blk)
        if len(t[b]) == 1:
            out.append(comp)
            continue
        if comp.active != b:
            active = comp.active + 1 if comp.active is not None and comp.active > b else comp.active
            out.append(LMComponent(_split_off(t, b, i), comp.weight, active, comp.family, comp.origin))
            continue

        fam = comp.family
        # main component: i bubbles off on the 0-side, the rest keeps moving
        rest = {l: x for l, x in fam.items() if l != i}
        main_t = _split_off(t, b, i)
        if family_degree(rest) == 0:
            log.info("T_%d: main component of %s is a point, dropped", i, comp.type_str())
        else:
            out.append(LMComponent(main_t, comp.weight, b + 1, rest, comp.origin))

        # components through the special points where x_i catches up with a
        # group of higher valuation
        for z0 in candidate_points(fam):
            v = valuations(fam, z0)
            higher = sorted({u for l, u in v.items() if l != i and u > v[i]})
            for u in higher:
                d = u - v[i]
                if d > germ_bound:
                    raise GermDepthExceeded(f"germ order {d} exceeds bound {germ_bound}")
                w = dict(v)
                w[i] += d
                groups = _group_desc(w)
                idx = next(k for k, (_, g) in enumerate(groups) if i in g)
                group = groups[idx][1]
                lead = {l: fam[l].leading(z0) for l in group}
                m = lead[i].m
                new_fam = {}
                for l in group:
                    if l == i:
                        new_fam[l] = RatFunc.const(m, lead[l])
                    else:
                        new_fam[l] = RatFunc(Poly(m, [0, lead[l]]))
                new_t = t[:b] + tuple(g for _, g in groups) + t[b + 1:]
                where = "inf" if z0 is None else repr(z0)
                out.append(LMComponent(new_t, comp.weight * d, b + idx, new_fam,
                                       f"{comp.origin}/T{i}@{where}^{d}"))
    return LMCycle(out)


def initial_cycle(fam: ConfigurationFamily) -> LMCycle:
    return LMCycle([LMComponent((fam.light,), 1, 0, dict(fam.coords), "C0")])


def degenerate(fam: ConfigurationFamily, order: Optional[Sequence[int]] = None,
               germ_bound: Optional[int] = None, history: Optional[list] = None) -> LMCycle:
    """Apply T_i for the light labels in ``order`` (default ascending, all but
    the last) and return the torus-invariant limit cycle.

    If ``history`` is a list, the cycle after each step is appended to it.
    """
    labels = list(order) if order is not None else list(fam.light[:-1])
    bound = germ_bound if germ_bound is not None else fam.n + 2
    cycle = initial_cycle(fam)
    for i in labels:
        cycle = limit_step(cycle, i, bound)
        log.debug("after T_%d: %d components", i, len(cycle))
        if history is not None:
            history.append(cycle)
    if not cycle.is_torus_invariant():
        bad = [c.type_str() for c in cycle.components if not is_one_dimensional(c.type)]
        raise M0nError(f"degeneration did not reach torus curves: {bad}")
    return cycle


def toric_expression(cycle: LMCycle, h: HeavyPair, n: int) -> FCurveExpression:
    """sum of multiplicity * (F-curve over each torus curve)."""
    return FCurveExpression(n, [(torus_curve_to_fcurve(c.type, h, n), c.multiplicity)
                                for c in cycle.components])


def lift_with_proper_transform(cycle: LMCycle, h: HeavyPair, upstairs: CurveClass) -> FCurveExpression:
    """Toric expression minus the exceptional F-curves F_{i,j,k,rest} weighted
    by upstairs . D_{ijk} for all-light triples."""
    n = upstairs.n
    heavy = (1 << (h.zero_label - 1)) | (1 << (h.infinity_label - 1))
    full = full_mask(n)
    corrections = []
    for D, value in upstairs.items():
        for side in (D.mask, full ^ D.mask):
            if side & heavy:
                continue
            size = popcount(side)
            if size >= 4:
                raise UnsupportedExceptionalLocus(
                    f"class meets contracted D{labels_of(side)} with {size} light points")
            if size == 3:
                a, b, c = labels_of(side)
                corrections.append((FCurve.from_masks(
                    [1 << (a - 1), 1 << (b - 1), 1 << (c - 1), full ^ side], n), -value))
    base = toric_expression(cycle, h, n) if cycle.components else FCurveExpression(n)
    return base + FCurveExpression(n, corrections)


# ----------------------------------------------------------------------------
# cycle (de)serialization


def cycle_to_json(cycle: LMCycle, h: Optional[HeavyPair] = None) -> dict:
    comps = []
    for c in cycle.components:
        comps.append({"type": [list(b) for b in c.type], "multiplicity": c.multiplicity})
    data = {"components": comps}
    if h is not None:
        data["heavy"] = [h.zero_label, h.infinity_label]
    return data


def cycle_from_json(data: dict) -> tuple[LMCycle, Optional[HeavyPair]]:
    comps = [LMComponent(make_partition(c["type"]), int(c["multiplicity"]))
             for c in data["components"]]
    h = HeavyPair(*data["heavy"]) if "heavy" in data else None
    return LMCycle(comps), h
