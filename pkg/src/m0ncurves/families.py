"""The two dihedral D_3 configuration families used as fixtures.

A general point of the invariant curve is the orbit of a point y = z under
z -> w z, z -> 1/z (w a primitive cube root of unity), together with the
fixed points 1, w, w^2 and, for n = 12, -1, -w, -w^2.  Labels 8 and 9 (at w
and w^2) are the heavy pair.
"""

from __future__ import annotations

from .cyclotomic import CycElem, RatFunc
from .losev_manin import ConfigurationFamily, HeavyPair

HEAVY = HeavyPair(8, 9)


def dihedral_positions(n: int) -> dict[int, RatFunc]:
    if n not in (9, 12):
        raise ValueError("only the n = 9 and n = 12 families are built in")
    m = 3
    z = RatFunc.z(m)
    w = CycElem.zeta(m)
    one = RatFunc.const(m, 1)
    inv = one / z
    pos = {
        1: z, 2: z * w, 3: z * w * w,
        4: inv, 5: inv * w, 6: inv * w * w,
        7: one, 8: one * w, 9: one * w * w,
    }
    if n == 12:
        pos.update({10: -one, 11: -one * w, 12: -one * w * w})
    return pos


def dihedral_family(n: int) -> ConfigurationFamily:
    return ConfigurationFamily.from_positions(3, dihedral_positions(n), HEAVY)
