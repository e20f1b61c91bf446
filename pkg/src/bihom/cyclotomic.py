"""Exact arithmetic in the cyclotomic field Q(zeta_m).

Elements are coefficient vectors of length deg(Phi_m) over the rationals,
reduced modulo the m-th cyclotomic polynomial.  Only needed for
bicharacters taking values outside {+1, -1}.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


def _poly_trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _poly_trim(out)


def _poly_divmod(a: list, b: list) -> tuple[list, list]:
    a = [Fraction(x) for x in a]
    b = _poly_trim([Fraction(x) for x in b])
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(_poly_trim(a)) >= len(b):
        shift = len(a) - len(b)
        t = a[-1] / b[-1]
        q[shift] = t
        for i, y in enumerate(b):
            a[i + shift] -= t * y
        _poly_trim(a)
    return _poly_trim(q), a


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple:
    """Integer coefficients of Phi_m, lowest degree first."""
    if m < 1:
        raise ValueError("cyclotomic order must be positive")
    num = [Fraction(-1)] + [Fraction(0)] * (m - 1) + [Fraction(1)]
    for d in range(1, m):
        if m % d == 0:
            num, rem = _poly_divmod(num, list(cyclotomic_polynomial(d)))
            assert not rem
    return tuple(int(x) for x in num)


def _poly_inverse_mod(a: list, mod: list) -> list:
    # extended Euclid over Q[x]
    r0, r1 = [Fraction(x) for x in mod], _poly_trim(list(a))
    s0, s1 = [], [Fraction(1)]
    while r1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        qs = _poly_mul(q, s1)
        n = max(len(s0), len(qs))
        s_new = [(s0[i] if i < len(s0) else 0) - (qs[i] if i < len(qs) else 0) for i in range(n)]
        s0, s1 = s1, _poly_trim([Fraction(x) for x in s_new])
    if len(r0) != 1:
        raise ZeroDivisionError("element is not invertible")
    c = r0[0]
    return [x / c for x in s0]


class Cyclotomic:
    """Element of Q(zeta_m) in the power basis 1, zeta, ..., zeta^(d-1)."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs=()):
        phi = cyclotomic_polynomial(m)
        deg = len(phi) - 1
        poly = [Fraction(c) for c in coeffs]
        if len(poly) > deg:
            _, poly = _poly_divmod(poly, list(phi))
        poly = list(poly) + [Fraction(0)] * (deg - len(poly))
        self.m = m
        self.coeffs = tuple(poly)

    @classmethod
    def zeta(cls, m: int, power: int = 1) -> "Cyclotomic":
        power %= m
        return cls(m, [0] * power + [1])

    @classmethod
    def rational(cls, m: int, value) -> "Cyclotomic":
        return cls(m, [Fraction(value)])

    def _coerce(self, other) -> "Cyclotomic":
        if isinstance(other, Cyclotomic):
            if other.m != self.m:
                raise ValueError("mixing cyclotomic fields of different orders")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.rational(self.m, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Cyclotomic(self.m, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.m, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Cyclotomic(self.m, _poly_mul(list(self.coeffs), list(other.coeffs)))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        inv = _poly_inverse_mod(list(self.coeffs), list(cyclotomic_polynomial(self.m)))
        return Cyclotomic(self.m, inv)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyclotomic.rational(self.m, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def __eq__(self, other) -> bool:
        if isinstance(other, Cyclotomic):
            return self.m == other.m and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.m, self.coeffs))

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            cs = str(c)
            terms.append(cs if i == 0 else f"{cs}*z{self.m}^{i}")
        return " + ".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f"Cyclotomic({self.m}, {list(map(str, self.coeffs))})"
