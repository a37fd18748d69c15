"""Boundary divisors, F-curves and curve classes on M_{0,n}-bar.

Subsets of the label set [n] = {1..n} are stored as int bitmasks (bit i-1
set iff label i is a member).  A boundary divisor D_I = D_{I^c} is stored by
its canonical representative: whichever of I, I^c does not contain label n.

Curve classes are total functions from canonical boundary divisors to
integers (the intersection numbers).  Because boundary divisors span N^1,
two curve classes are numerically equal exactly when these vectors agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .errors import (
    AdjacentDivisor,
    BadSize,
    EmptyOrFull,
    InvalidPartition,
    M0nError,
    SizeOutOfRange,
)
from .permutations import Permutation, label_str

# ----------------------------------------------------------------------------
# bitmask helpers


def mask_of(labels: Iterable[int]) -> int:
    m = 0
    for x in labels:
        m |= 1 << (x - 1)
    return m


def labels_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def full_mask(n: int) -> int:
    return (1 << n) - 1


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def lowbit(mask: int) -> int:
    return mask & -mask


def _as_mask(x, n: int) -> int:
    if isinstance(x, int):
        return x
    if isinstance(x, BoundaryDivisor):
        return x.mask
    m = mask_of(x)
    if m >> n:
        raise M0nError(f"labels {sorted(x)} outside 1..{n}")
    return m


def canonical_mask(mask: int, n: int) -> int:
    if mask >> (n - 1) & 1:
        return full_mask(n) ^ mask
    return mask


# ----------------------------------------------------------------------------
# boundary divisors


@dataclass(frozen=True, order=False)
class BoundaryDivisor:
    """D_I with I the representative of {I, I^c} not containing n."""

    n: int
    mask: int

    @property
    def labels(self) -> tuple[int, ...]:
        return labels_of(self.mask)

    @property
    def size(self) -> int:
        return popcount(self.mask)

    @property
    def level(self) -> int:
        """min(|I|, |I^c|): the k with D_I a summand of D_k."""
        s = self.size
        return min(s, self.n - s)

    def sort_key(self):
        return self.labels

    def __lt__(self, other: "BoundaryDivisor") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return "D{" + ",".join(map(str, self.labels)) + "}"


def canonical_divisor_rep(labels, n: int) -> BoundaryDivisor:
    """Canonical boundary divisor D_I for a subset I of [n].

    >>> canonical_divisor_rep({4, 5, 6}, 6).labels
    (1, 2, 3)
    """
    mask = _as_mask(labels, n)
    size = popcount(mask)
    if size < 2 or size > n - 2:
        raise SizeOutOfRange(f"|I| = {size} outside [2, {n - 2}]")
    return BoundaryDivisor(n, canonical_mask(mask, n))


@lru_cache(maxsize=None)
def all_divisors(n: int) -> tuple[BoundaryDivisor, ...]:
    """Every boundary divisor of M_{0,n}, sorted lexicographically by rep.

    Canonical reps are exactly the subsets of [n-1] of size 2..n-2.
    """
    out = [BoundaryDivisor(n, mask_of(c))
           for size in range(2, n - 1)
           for c in combinations(range(1, n), size)]
    out.sort()
    return tuple(out)


@lru_cache(maxsize=None)
def divisor_index(n: int) -> dict[int, int]:
    return {d.mask: i for i, d in enumerate(all_divisors(n))}


def number_of_divisors(n: int) -> int:
    return 2 ** (n - 1) - n - 1


# ----------------------------------------------------------------------------
# circular structure and the nonadjacent basis


def _circular_runs(mask: int, n: int) -> list[tuple[bool, int]]:
    """Maximal runs of the cyclic sequence 1..n, starting at the least member.

    Returns (in_set, run_mask) pairs; the first run is inside the set.
    """
    start = labels_of(mask)[0]
    runs: list[tuple[bool, int]] = []
    for step in range(n):
        label = (start - 1 + step) % n + 1
        inside = bool(mask >> (label - 1) & 1)
        bit = 1 << (label - 1)
        if runs and runs[-1][0] == inside:
            runs[-1] = (inside, runs[-1][1] | bit)
        else:
            runs.append((inside, bit))
    if len(runs) > 1 and runs[-1][0] == runs[0][0]:
        # the last run wraps around onto the first
        last = runs.pop()
        runs[0] = (runs[0][0], runs[0][1] | last[1])
    return runs


def cyclic_component_count(labels, n: int) -> int:
    """t(I): number of arcs of I on the n-cycle 1-2-...-n-1."""
    mask = _as_mask(labels, n)
    if mask == 0 or mask == full_mask(n):
        raise EmptyOrFull("t(I) needs a nonempty proper subset")
    return sum(1 for inside, _ in _circular_runs(mask, n) if inside)


@lru_cache(maxsize=None)
def nonadjacent_basis(n: int) -> tuple[BoundaryDivisor, ...]:
    """Boundary divisors D_I with t(I) >= 2, in canonical order."""
    if n < 5:
        raise M0nError("the nonadjacent basis needs n >= 5")
    return tuple(d for d in all_divisors(n) if cyclic_component_count(d.mask, n) >= 2)


def nonadjacent_basis_size(n: int) -> int:
    return 2 ** (n - 1) - comb(n, 2) - 1


# ----------------------------------------------------------------------------
# F-curves


@dataclass(frozen=True)
class FCurve:
    """F_{A1,A2,A3,A4}: a partition of [n] into four blocks.

    ``blocks`` are bitmasks sorted by least element.
    """

    n: int
    blocks: tuple[int, int, int, int]

    @classmethod
    def from_masks(cls, masks: Sequence[int], n: int) -> "FCurve":
        if len(masks) != 4:
            raise InvalidPartition(f"an F-curve needs 4 blocks, got {len(masks)}")
        union = 0
        for m in masks:
            if m == 0:
                raise InvalidPartition("empty block")
            if union & m:
                raise InvalidPartition("blocks overlap")
            union |= m
        if union != full_mask(n):
            raise InvalidPartition("blocks do not cover [n]")
        return cls(n, tuple(sorted(masks, key=lowbit)))

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]], n: int) -> "FCurve":
        return cls.from_masks([mask_of(b) for b in blocks], n)

    @property
    def block_labels(self) -> tuple[tuple[int, ...], ...]:
        return tuple(labels_of(b) for b in self.blocks)

    def sort_key(self):
        return self.block_labels

    def __lt__(self, other: "FCurve") -> bool:
        return self.sort_key() < other.sort_key()

    def to_text(self, aliases: bool = False) -> str:
        return "F{" + "|".join(",".join(label_str(x, aliases) for x in b)
                               for b in self.block_labels) + "}"

    def __str__(self) -> str:
        return self.to_text()


@lru_cache(maxsize=1 << 18)
def fcurve_pairings(F: FCurve) -> tuple[tuple[int, int], ...]:
    """Nonzero intersection numbers of F with boundary divisors.

    +1 with the three divisors A_i u A_j | A_k u A_l, and -1 with D_{A_i} for
    every block of size >= 2.
    """
    n = F.n
    a1, a2, a3, a4 = F.blocks
    out = [
        (canonical_mask(a1 | a2, n), 1),
        (canonical_mask(a1 | a3, n), 1),
        (canonical_mask(a1 | a4, n), 1),
    ]
    for b in F.blocks:
        if b & (b - 1):
            out.append((canonical_mask(b, n), -1))
    return tuple(out)


def pair_divisor_fcurve(D: BoundaryDivisor, F: FCurve) -> int:
    for mask, value in fcurve_pairings(F):
        if mask == D.mask:
            return value
    return 0


def all_fcurves(n: int) -> Iterator[FCurve]:
    """Every F-curve on M_{0,n} (set partitions of [n] into 4 blocks)."""
    # restricted growth strings with exactly four values
    def rec(i, assign, used):
        if i == n:
            if used == 4:
                masks = [0, 0, 0, 0]
                for label, b in enumerate(assign, start=1):
                    masks[b] |= 1 << (label - 1)
                yield FCurve(n, tuple(masks))
            return
        for b in range(min(used + 1, 4)):
            if n - i - 1 < 4 - max(used, b + 1):
                continue
            assign.append(b)
            yield from rec(i + 1, assign, max(used, b + 1))
            assign.pop()

    yield from rec(0, [], 0)


# ----------------------------------------------------------------------------
# curve classes


class CurveClass:
    """Intersection numbers with every canonical boundary divisor.

    Stored sparsely; absent divisors pair to zero.
    """

    __slots__ = ("n", "_values", "_hash")

    def __init__(self, n: int, values: Mapping[int, int] | None = None):
        if n < 4:
            raise M0nError("curve classes need n >= 4")
        self.n = n
        clean = {}
        for key, v in (values or {}).items():
            mask = key.mask if isinstance(key, BoundaryDivisor) else key
            if v:
                clean[mask] = v
        self._values = clean
        self._hash = None

    @classmethod
    def from_subsets(cls, n: int, pairs: Iterable[tuple[Iterable[int], int]]) -> "CurveClass":
        values: dict[int, int] = {}
        for labels, v in pairs:
            d = canonical_divisor_rep(labels, n)
            values[d.mask] = values.get(d.mask, 0) + v
        return cls(n, values)

    def __getitem__(self, key) -> int:
        if isinstance(key, BoundaryDivisor):
            return self._values.get(key.mask, 0)
        if isinstance(key, int):
            return self._values.get(key, 0)
        return self._values.get(canonical_divisor_rep(key, self.n).mask, 0)

    def items(self) -> list[tuple[BoundaryDivisor, int]]:
        """Nonzero entries in canonical divisor order."""
        out = [(BoundaryDivisor(self.n, m), v) for m, v in self._values.items()]
        out.sort(key=lambda p: p[0].sort_key())
        return out

    def support(self) -> list[BoundaryDivisor]:
        return [d for d, _ in self.items()]

    def vector(self) -> tuple[int, ...]:
        return tuple(self._values.get(d.mask, 0) for d in all_divisors(self.n))

    def as_dict(self) -> dict[int, int]:
        return dict(self._values)

    def level_sum(self, k: int) -> int:
        """C . D_k, where D_k sums the distinct divisors of level k."""
        return sum(v for m, v in self._values.items()
                   if min(popcount(m), self.n - popcount(m)) == k)

    def is_zero(self) -> bool:
        return not self._values

    def __eq__(self, other) -> bool:
        if not isinstance(other, CurveClass):
            return NotImplemented
        return self.n == other.n and self._values == other._values

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._values.items())))
        return self._hash

    def __add__(self, other: "CurveClass") -> "CurveClass":
        _same_n(self.n, other.n)
        values = dict(self._values)
        for m, v in other._values.items():
            values[m] = values.get(m, 0) + v
        return CurveClass(self.n, values)

    def __neg__(self) -> "CurveClass":
        return CurveClass(self.n, {m: -v for m, v in self._values.items()})

    def __sub__(self, other: "CurveClass") -> "CurveClass":
        return self + (-other)

    def __rmul__(self, k: int) -> "CurveClass":
        return CurveClass(self.n, {m: k * v for m, v in self._values.items()})

    def __repr__(self) -> str:
        inner = ", ".join(f"{d}: {v}" for d, v in self.items())
        return f"CurveClass(n={self.n}, {{{inner}}})"


def _same_n(a: int, b: int) -> None:
    if a != b:
        raise M0nError(f"mixing n={a} and n={b}")


# ----------------------------------------------------------------------------
# F-curve expressions


class FCurveExpression:
    """A finite Z-linear combination of F-curves (zero terms never stored)."""

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms: Mapping[FCurve, int] | Iterable[tuple[FCurve, int]] = ()):
        self.n = n
        acc: dict[FCurve, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for F, c in items:
            if F.n != n:
                raise M0nError(f"F-curve on n={F.n} in an expression on n={n}")
            acc[F] = acc.get(F, 0) + c
        self._terms = {F: c for F, c in acc.items() if c}
        self._hash = None

    @classmethod
    def single(cls, F: FCurve, coeff: int = 1) -> "FCurveExpression":
        return cls(F.n, {F: coeff})

    @property
    def terms(self) -> dict[FCurve, int]:
        return dict(self._terms)

    def items(self) -> list[tuple[FCurve, int]]:
        """Terms in canonical order."""
        return sorted(self._terms.items(), key=lambda p: p[0].sort_key())

    def __getitem__(self, F: FCurve) -> int:
        return self._terms.get(F, 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def positive(self) -> dict[FCurve, int]:
        return {F: c for F, c in self._terms.items() if c > 0}

    def negative(self) -> dict[FCurve, int]:
        return {F: c for F, c in self._terms.items() if c < 0}

    def is_effective(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    def key(self) -> tuple:
        """Canonical hashable serialization."""
        return tuple((F.blocks, c) for F, c in self.items())

    def __eq__(self, other) -> bool:
        if not isinstance(other, FCurveExpression):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    def __add__(self, other: "FCurveExpression") -> "FCurveExpression":
        _same_n(self.n, other.n)
        acc = dict(self._terms)
        for F, c in other._terms.items():
            acc[F] = acc.get(F, 0) + c
        return FCurveExpression(self.n, acc)

    def __neg__(self) -> "FCurveExpression":
        return FCurveExpression(self.n, {F: -c for F, c in self._terms.items()})

    def __sub__(self, other: "FCurveExpression") -> "FCurveExpression":
        return self + (-other)

    def __rmul__(self, k: int) -> "FCurveExpression":
        return FCurveExpression(self.n, {F: k * c for F, c in self._terms.items()})

    def to_text(self, aliases: bool = False) -> str:
        return "\n".join(f"{c:+d} {F.to_text(aliases)}" for F, c in self.items())

    def __repr__(self) -> str:
        body = " ".join(f"{c:+d}{F}" for F, c in self.items())
        return f"FCurveExpression(n={self.n}, {body or '0'})"


def class_of_expression(E: FCurveExpression) -> CurveClass:
    values: dict[int, int] = {}
    for F, c in E._terms.items():
        for mask, v in fcurve_pairings(F):
            values[mask] = values.get(mask, 0) + c * v
    return CurveClass(E.n, values)


def class_of_fcurve(F: FCurve) -> CurveClass:
    return class_of_expression(FCurveExpression.single(F))


# ----------------------------------------------------------------------------
# the dual of the nonadjacent basis


def _F(n: int, *masks: int) -> FCurve:
    return FCurve.from_masks(masks, n)


@lru_cache(maxsize=None)
def _dual_cached(n: int, rep: int) -> FCurveExpression:
    runs = _circular_runs(rep, n)
    I = [m for inside, m in runs if inside]
    J = [m for inside, m in runs if not inside]
    t = len(I)
    if t < 2:
        raise AdjacentDivisor(f"D{labels_of(rep)} is adjacent (t = 1)")
    if t == 2:
        return FCurveExpression.single(_F(n, I[0], I[1], J[0], J[1]))
    if t == 3:
        I1, I2, I3 = I
        J1, J2, J3 = J
        return FCurveExpression(n, [
            (_F(n, I1 | I2, J1 | J2, I3, J3), 1),
            (_F(n, I1, J1, I2, J2 | I3 | J3), 1),
            (_F(n, J1, I2, J2, I1 | I3 | J3), 1),
            (_F(n, J1, I2, I1 | J3, J2 | I3), -1),
        ])
    I_tail = 0
    for m in I[2:]:
        I_tail |= m
    J_tail = 0
    for m in J[2:]:
        J_tail |= m
    I12 = I[0] | I[1]
    J12 = J[0] | J[1]
    E = FCurveExpression.single(_F(n, I12, J12, I_tail, J_tail))
    E = E - dual_curve_mask(I12 | J_tail, n)
    for part in (I12, J12, I_tail, J_tail):
        E = E + dual_curve_mask(part, n)
    return E


def dual_curve_mask(mask: int, n: int) -> FCurveExpression:
    return _dual_cached(n, canonical_mask(mask, n))


def dual_curve(D: BoundaryDivisor) -> FCurveExpression:
    """The curve class dual to nonadjacent D, as an F-curve expression.

    For t(I) = 2 this is the single F-curve built from the two arcs of I and
    the two arcs of I^c; for t(I) >= 3 a signed expression obtained by
    recursion on t.  Arcs are taken in circular order starting from the arc
    containing the least element of the canonical representative.
    """
    return _dual_cached(D.n, D.mask)


def expand_in_dual_basis(C: CurveClass) -> FCurveExpression:
    """sum over nonadjacent D of (C . D) * dual(D)."""
    acc: dict[FCurve, int] = {}
    for D in nonadjacent_basis(C.n):
        v = C[D]
        if not v:
            continue
        for F, c in dual_curve(D)._terms.items():
            acc[F] = acc.get(F, 0) + v * c
    return FCurveExpression(C.n, acc)


# ----------------------------------------------------------------------------
# Keel relations


@dataclass(frozen=True)
class KeelRelation:
    """Ordered 5-block partition (I1, ..., I5) of [n]."""

    n: int
    parts: tuple[int, int, int, int, int]

    def __post_init__(self):
        if len(self.parts) != 5:
            raise InvalidPartition(f"a Keel relation needs 5 parts, got {len(self.parts)}")
        union = 0
        for p in self.parts:
            if p == 0 or union & p:
                raise InvalidPartition("parts must be nonempty and disjoint")
            union |= p
        if union != full_mask(self.n):
            raise InvalidPartition("parts do not cover [n]")

    @classmethod
    def from_parts(cls, parts: Sequence[Iterable[int]], n: int) -> "KeelRelation":
        return cls(n, tuple(mask_of(p) for p in parts))

    @property
    def part_labels(self) -> tuple[tuple[int, ...], ...]:
        return tuple(labels_of(p) for p in self.parts)

    def terms(self) -> tuple[tuple[FCurve, int], ...]:
        I1, I2, I3, I4, I5 = self.parts
        n = self.n
        return (
            (_F(n, I1, I2, I3, I4 | I5), 1),
            (_F(n, I1 | I2, I3, I4, I5), 1),
            (_F(n, I1, I4, I3, I2 | I5), -1),
            (_F(n, I1 | I4, I3, I2, I5), -1),
        )

    def __str__(self) -> str:
        return "R(" + "|".join(",".join(map(str, p)) for p in self.part_labels) + ")"


def keel_relation_expression(R: KeelRelation) -> FCurveExpression:
    """F_{I1,I2,I3,I4+I5} + F_{I1+I2,I3,I4,I5} - F_{I1,I4,I3,I2+I5} - F_{I1+I4,I3,I2,I5}."""
    return FCurveExpression(R.n, R.terms())


# ----------------------------------------------------------------------------
# divisor classes


class DivisorClass:
    """Rational combination of boundary divisors (a representative of a class)."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Mapping[int, Fraction]):
        self.n = n
        self.coeffs = {m: Fraction(c) for m, c in coeffs.items() if c}

    def __getitem__(self, D: BoundaryDivisor) -> Fraction:
        return self.coeffs.get(D.mask, Fraction(0))

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        _same_n(self.n, other.n)
        acc = dict(self.coeffs)
        for m, c in other.coeffs.items():
            acc[m] = acc.get(m, 0) + c
        return DivisorClass(self.n, acc)

    def __rmul__(self, k) -> "DivisorClass":
        return DivisorClass(self.n, {m: k * c for m, c in self.coeffs.items()})

    def pair(self, C: CurveClass) -> Fraction:
        _same_n(self.n, C.n)
        return sum((c * C[m] for m, c in self.coeffs.items()), Fraction(0))


def canonical_divisor_coefficient(k: int, n: int) -> Fraction:
    return Fraction(-2) + Fraction(k * (n - k), n - 1)


def canonical_divisor(n: int) -> DivisorClass:
    """K = sum_k (-2 + k(n-k)/(n-1)) D_k; at k = n/2 each divisor counted once."""
    return DivisorClass(n, {d.mask: canonical_divisor_coefficient(d.level, n)
                            for d in all_divisors(n)})


def total_boundary(n: int) -> DivisorClass:
    return DivisorClass(n, {d.mask: Fraction(1) for d in all_divisors(n)})


def psi_divisor(n: int) -> DivisorClass:
    """psi = K + 2D."""
    return canonical_divisor(n) + 2 * total_boundary(n)


# ----------------------------------------------------------------------------
# the S_n action

Actable = Union[BoundaryDivisor, FCurve, FCurveExpression, CurveClass, KeelRelation, frozenset, set, tuple]


def act(g: Permutation, x):
    """Relabel every i by g(i) and re-canonicalize."""
    n = g.n
    if isinstance(x, BoundaryDivisor):
        _same_n(n, x.n)
        return BoundaryDivisor(n, canonical_mask(g.map_mask(x.mask), n))
    if isinstance(x, FCurve):
        _same_n(n, x.n)
        return FCurve(n, tuple(sorted((g.map_mask(b) for b in x.blocks), key=lowbit)))
    if isinstance(x, FCurveExpression):
        _same_n(n, x.n)
        return FCurveExpression(n, [(act(g, F), c) for F, c in x._terms.items()])
    if isinstance(x, CurveClass):
        _same_n(n, x.n)
        return CurveClass(n, {canonical_mask(g.map_mask(m), n): v for m, v in x._values.items()})
    if isinstance(x, KeelRelation):
        return KeelRelation(n, tuple(g.map_mask(p) for p in x.parts))
    if isinstance(x, (set, frozenset, tuple, list)):
        return type(x)(g(i) for i in x) if not isinstance(x, list) else [g(i) for i in x]
    raise TypeError(f"cannot act on {type(x).__name__}")


def forgetful_degree(F: FCurve, S) -> int:
    """Degree of F under the forgetful map to M_{0,S}, |S| = 4."""
    mask = _as_mask(S, F.n)
    if popcount(mask) != 4:
        raise BadSize(f"|S| = {popcount(mask)}, expected 4")
    return int(all(popcount(b & mask) == 1 for b in F.blocks))


def forgetful_degree_of_expression(E: FCurveExpression, S) -> int:
    return sum(c * forgetful_degree(F, S) for F, c in E._terms.items())
