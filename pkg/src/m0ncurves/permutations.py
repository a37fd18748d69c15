"""Permutations of the marked labels 1..n and the cycle-notation parser."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import M0nError

# Single-character aliases for labels 10, 11, 12 (a, b, c).
LABEL_ALIASES = {"a": 10, "b": 11, "c": 12}
_ALIAS_OF = {v: k for k, v in LABEL_ALIASES.items()}


def parse_label(token: str) -> int:
    token = token.strip()
    if token.lower() in LABEL_ALIASES:
        return LABEL_ALIASES[token.lower()]
    try:
        value = int(token)
    except ValueError:
        raise M0nError(f"bad label {token!r}") from None
    if value < 1:
        raise M0nError(f"labels start at 1, got {value}")
    return value


def label_str(label: int, aliases: bool = False) -> str:
    if aliases and label in _ALIAS_OF:
        return _ALIAS_OF[label]
    return str(label)


@dataclass(frozen=True)
class Permutation:
    """A bijection of [n]; ``images[i-1]`` is the image of label i."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise M0nError(f"not a permutation of 1..{n}: {self.images}")

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> "Permutation":
        images = list(range(1, n + 1))
        seen: set[int] = set()
        for cycle in cycles:
            for x in cycle:
                if not 1 <= x <= n:
                    raise M0nError(f"label {x} outside 1..{n}")
                if x in seen:
                    raise M0nError(f"label {x} appears in two cycles")
                seen.add(x)
            for a, b in zip(cycle, tuple(cycle[1:]) + tuple(cycle[:1])):
                images[a - 1] = b
        return cls(tuple(images))

    @classmethod
    def from_mapping(cls, mapping: dict[int, int], n: int) -> "Permutation":
        return cls(tuple(mapping.get(i, i) for i in range(1, n + 1)))

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (self * other)(i) = self(other(i))
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        """Disjoint cycles, each starting at its least label, sorted by that label."""
        seen: set[int] = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cycle.append(x)
                seen.add(x)
                x = self(x)
            if len(cycle) > 1 or include_fixed:
                out.append(tuple(cycle))
        return out

    def fixed_points(self) -> list[int]:
        return [i for i in range(1, self.n + 1) if self(i) == i]

    def order(self) -> int:
        from math import lcm

        out = 1
        for c in self.cycles():
            out = lcm(out, len(c))
        return out

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images, start=1))

    def map_mask(self, mask: int) -> int:
        out = 0
        i = 0
        while mask:
            if mask & 1:
                out |= 1 << (self.images[i] - 1)
            mask >>= 1
            i += 1
        return out

    def to_cycle_string(self, aliases: bool = False) -> str:
        cs = self.cycles()
        if not cs:
            return "()"
        return "".join("(" + " ".join(label_str(x, aliases) for x in c) + ")" for c in cs)

    def __str__(self) -> str:
        return self.to_cycle_string()


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str) -> list[tuple[int, ...]]:
    """Parse disjoint cycle notation.

    Labels inside a cycle may be separated by spaces or commas, or written
    run-together when every label is a single character (``(123)(abc)``).
    """
    stripped = _CYCLE_RE.sub("", text).strip()
    if stripped:
        raise M0nError(f"unparsable cycle notation: {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(text):
        body = body.strip()
        if not body:
            continue
        if re.search(r"[\s,]", body):
            tokens = [t for t in re.split(r"[\s,]+", body) if t]
        else:
            tokens = list(body)
        cycles.append(tuple(parse_label(t) for t in tokens))
    return cycles


def parse_permutation(text: str, n: int) -> Permutation:
    return Permutation.from_cycles(parse_cycles(text), n)
