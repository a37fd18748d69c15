"""Exact arithmetic in Q(zeta_m) and in the function field Q(zeta_m)(z).

Field elements are coefficient vectors over the power basis 1, zeta, ...,
zeta^(phi(m)-1), reduced modulo the cyclotomic polynomial Phi_m.  Polynomials
in z are coefficient tuples (ascending degree) of field elements.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence, Union

from .errors import M0nError, UnsupportedFieldExtension

Number = Union[int, Fraction, "CycElem"]


@lru_cache(maxsize=None)
def cyclotomic_modulus(m: int) -> tuple[Fraction, ...]:
    """Coefficients of Phi_m, ascending degree."""
    import sympy

    x = sympy.Symbol("x")
    coeffs = sympy.cyclotomic_poly(m, x, polys=True).all_coeffs()
    return tuple(Fraction(int(c)) for c in reversed(coeffs))


def _trim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def _qpoly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lb = b[-1]
    while len(_trim(a)) >= len(b):
        shift = len(a) - len(b)
        f = a[-1] / lb
        q[shift] = f
        for k, bc in enumerate(b):
            a[shift + k] -= f * bc
        a.pop()
    return _trim(q), a


def _qpoly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _qpoly_sub(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    return _trim(out)


class CycElem:
    """An element of Q(zeta_m)."""

    __slots__ = ("m", "c", "_h")

    def __init__(self, m: int, coeffs: Iterable = ()):
        self.m = m
        mod = cyclotomic_modulus(m)
        deg = len(mod) - 1
        c = [Fraction(x) for x in coeffs]
        if len(c) > deg:
            _, c = _qpoly_divmod(c, list(mod))
        c = c + [Fraction(0)] * (deg - len(c))
        self.c = tuple(c)
        self._h = None

    # constructors
    @classmethod
    def zeta(cls, m: int, power: int = 1) -> "CycElem":
        power %= m
        return cls(m, [0] * power + [1])

    @classmethod
    def rational(cls, m: int, q) -> "CycElem":
        return cls(m, [q])

    def _coerce(self, other) -> "CycElem":
        if isinstance(other, CycElem):
            if other.m != self.m:
                raise M0nError(f"mixing Q(zeta_{self.m}) and Q(zeta_{other.m})")
            return other
        if isinstance(other, (int, Fraction)):
            return CycElem(self.m, [other])
        return NotImplemented

    def is_zero(self) -> bool:
        return not any(self.c)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.c == o.c

    def __hash__(self) -> int:
        if self._h is None:
            self._h = hash((self.m, self.c))
        return self._h

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return CycElem(self.m, [a + b for a, b in zip(self.c, o.c)])

    __radd__ = __add__

    def __neg__(self):
        return CycElem(self.m, [-a for a in self.c])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return CycElem(self.m, [a - b for a, b in zip(self.c, o.c)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return CycElem(self.m, _qpoly_mul(list(self.c), list(o.c)))

    __rmul__ = __mul__

    def inverse(self) -> "CycElem":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta)")
        # extended Euclid: s*a + t*mod = g (a nonzero constant)
        a = _trim(list(self.c))
        b = list(cyclotomic_modulus(self.m))
        s0, s1 = [Fraction(1)], []
        while len(b) > 0 and any(b):
            q, r = _qpoly_divmod(a, b)
            a, b = b, r
            s0, s1 = s1, _qpoly_sub(s0, _qpoly_mul(q, s1))
        # a is now the gcd, a nonzero constant
        g = a[0]
        return CycElem(self.m, [x / g for x in s0])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = CycElem(self.m, [1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def to_json(self) -> list[str]:
        return [str(x) for x in self.c]

    def __repr__(self) -> str:
        terms = []
        for k, x in enumerate(self.c):
            if x:
                terms.append(f"{x}" if k == 0 else f"{x}*w^{k}")
        return "(" + (" + ".join(terms) or "0") + ")"


def elem(m: int, x) -> CycElem:
    if isinstance(x, CycElem):
        return x
    if isinstance(x, (list, tuple)):
        return CycElem(m, [Fraction(v) for v in x])
    return CycElem(m, [Fraction(x)])


# ----------------------------------------------------------------------------
# polynomials over Q(zeta_m)


class Poly:
    """Polynomial in z with Q(zeta_m) coefficients (ascending degree)."""

    __slots__ = ("m", "c")

    def __init__(self, m: int, coeffs: Sequence = ()):
        self.m = m
        c = [elem(m, x) for x in coeffs]
        while c and c[-1].is_zero():
            c.pop()
        self.c = tuple(c)

    @classmethod
    def z(cls, m: int) -> "Poly":
        return cls(m, [0, 1])

    @classmethod
    def const(cls, m: int, x) -> "Poly":
        return cls(m, [x])

    @property
    def degree(self) -> int:
        return len(self.c) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.c

    def lc(self) -> CycElem:
        return self.c[-1]

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.m == other.m and self.c == other.c

    def __hash__(self) -> int:
        return hash((self.m, self.c))

    def _lift(self, other) -> "Poly":
        return other if isinstance(other, Poly) else Poly(self.m, [other])

    def __add__(self, other):
        o = self._lift(other)
        n = max(len(self.c), len(o.c))
        zero = CycElem(self.m)
        return Poly(self.m, [(self.c[i] if i < len(self.c) else zero) + (o.c[i] if i < len(o.c) else zero)
                             for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.m, [-x for x in self.c])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        if not self.c or not o.c:
            return Poly(self.m)
        out = [CycElem(self.m)] * (len(self.c) + len(o.c) - 1)
        for i, x in enumerate(self.c):
            for j, y in enumerate(o.c):
                out[i + j] = out[i + j] + x * y
        return Poly(self.m, out)

    __rmul__ = __mul__

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        a = list(self.c)
        q = [CycElem(self.m)] * max(len(a) - len(other.c) + 1, 1)
        inv = other.lc().inverse()
        while len(a) >= len(other.c) and a:
            shift = len(a) - len(other.c)
            f = a[-1] * inv
            q[shift] = f
            for k, bc in enumerate(other.c):
                a[shift + k] = a[shift + k] - f * bc
            a.pop()
            while a and a[-1].is_zero():
                a.pop()
        return Poly(self.m, q), Poly(self.m, a)

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        inv = self.lc().inverse()
        return Poly(self.m, [x * inv for x in self.c])

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        return a.monic()

    def __call__(self, x) -> CycElem:
        x = elem(self.m, x)
        out = CycElem(self.m)
        for coeff in reversed(self.c):
            out = out * x + coeff
        return out

    def order_at(self, x) -> int:
        """Multiplicity of x as a root."""
        if self.is_zero():
            raise M0nError("order of the zero polynomial")
        lin = Poly(self.m, [-elem(self.m, x), 1])
        p, k = self, 0
        while True:
            q, r = p.divmod(lin)
            if not r.is_zero():
                return k
            p, k = q, k + 1

    def deflate(self, x, times: int) -> "Poly":
        lin = Poly(self.m, [-elem(self.m, x), 1])
        p = self
        for _ in range(times):
            p = p.divmod(lin)[0]
        return p

    def roots(self) -> list[CycElem]:
        """Distinct roots in Q(zeta_m).

        Linear factors are handled directly; higher degree parts are factored
        over Q(zeta_m) with sympy, and a nonlinear irreducible factor raises
        UnsupportedFieldExtension.
        """
        if self.is_zero():
            raise M0nError("roots of the zero polynomial")
        out: list[CycElem] = []
        p = self
        zero = CycElem(self.m)
        if p.c and p.c[0].is_zero():
            out.append(zero)
            k = p.order_at(zero)
            p = p.deflate(zero, k)
        if p.degree == 1:
            out.append(-p.c[0] / p.c[1])
        elif p.degree >= 2:
            out.extend(_sympy_roots(p))
        uniq = []
        for r in out:
            if r not in uniq:
                uniq.append(r)
        return uniq

    def __repr__(self) -> str:
        return " + ".join(f"{c}*z^{k}" for k, c in enumerate(self.c) if not c.is_zero()) or "0"


def _sympy_roots(p: Poly) -> list[CycElem]:
    import sympy
    from sympy.polys.domains import QQ
    from sympy.polys.polyclasses import ANP

    m = p.m
    K = QQ.algebraic_field(sympy.exp(2 * sympy.pi * sympy.I / m))
    mod = K.mod.to_list()
    # ANP reps are highest-degree first over the power basis of zeta
    coeffs = [ANP([QQ(x.numerator, x.denominator) for x in reversed(c.c)], mod, QQ) for c in reversed(p.c)]
    zsym = sympy.Symbol("z")
    P = sympy.Poly.from_list(coeffs, zsym, domain=K)
    _, factors = P.factor_list()
    roots = []
    for f, _mult in factors:
        if f.degree() != 1:
            raise UnsupportedFieldExtension(
                f"factor of degree {f.degree()} has no roots in Q(zeta_{m})")
        a, b = f.rep.to_list()  # a*z + b, as field elements
        rep = K.quo(-b, a)
        vals = [Fraction(int(q.numerator), int(q.denominator)) for q in reversed(rep.to_list())]
        roots.append(CycElem(m, vals))
    return roots


# ----------------------------------------------------------------------------
# rational functions


class RatFunc:
    """num/den in Q(zeta_m)(z), reduced with a monic denominator."""

    __slots__ = ("m", "num", "den")

    def __init__(self, num: Poly, den: Optional[Poly] = None, reduce: bool = True):
        m = num.m
        den = Poly.const(m, 1) if den is None else den
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if reduce:
            if num.is_zero():
                den = Poly.const(m, 1)
            else:
                g = num.gcd(den)
                if g.degree > 0:
                    num = num.divmod(g)[0]
                    den = den.divmod(g)[0]
            inv = den.lc().inverse()
            num = num * Poly.const(m, inv)
            den = den * Poly.const(m, inv)
        self.m = m
        self.num = num
        self.den = den

    @classmethod
    def const(cls, m: int, x) -> "RatFunc":
        return cls(Poly.const(m, x))

    @classmethod
    def z(cls, m: int) -> "RatFunc":
        return cls(Poly.z(m))

    def _lift(self, other) -> "RatFunc":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Poly):
            return RatFunc(other)
        return RatFunc.const(self.m, other)

    def __add__(self, other):
        o = self._lift(other)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o.num.is_zero():
            raise ZeroDivisionError("division by the zero function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatFunc):
            other = self._lift(other)
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    @property
    def degree(self) -> int:
        return max(self.num.degree, self.den.degree)

    def valuation(self, point: Optional[CycElem]) -> int:
        """ord at z = point (None means z = infinity)."""
        if self.is_zero():
            raise M0nError("valuation of the zero function")
        if point is None:
            return self.den.degree - self.num.degree
        return self.num.order_at(point) - self.den.order_at(point)

    def leading(self, point: Optional[CycElem]) -> CycElem:
        """Leading coefficient of the local expansion in the uniformizer
        (z - point), or 1/z at infinity."""
        if point is None:
            return self.num.lc() / self.den.lc()
        a = self.num.order_at(point)
        b = self.den.order_at(point)
        return self.num.deflate(point, a)(point) / self.den.deflate(point, b)(point)

    def __call__(self, x) -> CycElem:
        return self.num(x) / self.den(x)

    def to_json(self) -> dict:
        return {"num": [c.to_json() for c in self.num.c], "den": [c.to_json() for c in self.den.c]}

    @classmethod
    def from_json(cls, m: int, data: dict) -> "RatFunc":
        num = Poly(m, [elem(m, [Fraction(x) for x in c]) for c in data["num"]])
        den = Poly(m, [elem(m, [Fraction(x) for x in c]) for c in data.get("den", [[1]])])
        return cls(num, den)

    def __repr__(self) -> str:
        return f"({self.num})/({self.den})"
