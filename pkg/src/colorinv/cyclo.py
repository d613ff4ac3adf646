"""Exact arithmetic in cyclotomic fields Q(zeta_m).

An element is a rational polynomial in zeta_m reduced modulo the m-th
cyclotomic polynomial Phi_m, stored as a coefficient tuple of length
deg Phi_m = phi(m).  Working modulo Phi_m (rather than x^m - 1) makes the
representation canonical, so equality and zero tests are exact: relations
like 1 + zeta_3 + zeta_3^2 = 0 hold on the nose.

Elements of different orders are compared and combined by lifting both to
the lcm order via zeta_m = zeta_M^(M/m).
"""

from __future__ import annotations

import math
from fractions import Fraction

def _poly_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c

def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return _poly_trim(out)

def _poly_divmod_exact(num, den):
    """Division of integer polynomials where the quotient is known to be
    integral (den monic divides num): returns (quotient, remainder)."""
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 0)
    d = len(den) - 1
    lead = den[-1]
    while len(_poly_trim(num)) - 1 >= d and num:
        k = len(num) - 1
        c = num[k] // lead
        q[k - d] = c
        for j, y in enumerate(den):
            num[k - d + j] -= c * y
    return _poly_trim(q), _poly_trim(num)

_PHI_CACHE = {}

def cyclotomic_poly(m):
    """Coefficients of Phi_m, low degree first, as a tuple of ints.

    Computed by exact division: Phi_m = (x^m - 1) / prod_{d|m, d<m} Phi_d.
    """
    if m in _PHI_CACHE:
        return _PHI_CACHE[m]
    if m < 1:
        raise ValueError("order must be positive")
    num = [-1] + [0] * (m - 1) + [1]
    den = [1]
    for d in range(1, m):
        if m % d == 0:
            den = _poly_mul(den, list(cyclotomic_poly(d)))
    q, r = _poly_divmod_exact(num, den)
    assert not r, "cyclotomic division left a remainder"
    _PHI_CACHE[m] = tuple(q)
    return _PHI_CACHE[m]

def _reduce_mod_phi(coeffs, m):
    """Reduce a rational coefficient list modulo Phi_m; returns a tuple of
    length deg Phi_m."""
    phi = cyclotomic_poly(m)
    deg = len(phi) - 1
    c = [Fraction(x) for x in coeffs]
    for k in range(len(c) - 1, deg - 1, -1):
        top = c[k]
        if top:
            c[k] = Fraction(0)
            for j in range(deg):
                c[k - deg + j] -= top * phi[j]
    c = c[:deg]
    c += [Fraction(0)] * (deg - len(c))
    return tuple(c)

def _frac_poly_divmod(num, den):
    num = [Fraction(x) for x in num]
    den = [Fraction(x) for x in den]
    while den and not den[-1]:
        den.pop()
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
    while True:
        while num and not num[-1]:
            num.pop()
        if len(num) < len(den):
            return q, num
        c = num[-1] / den[-1]
        k = len(num) - len(den)
        q[k] = c
        for j, y in enumerate(den):
            num[k + j] -= c * y

class CycloRational:
    """An element of Q(zeta_m) in canonical reduced form.  Immutable."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order, coeffs, _reduced=False):
        self.order = order
        if _reduced:
            self.coeffs = coeffs
        else:
            self.coeffs = _reduce_mod_phi(coeffs, order)

    @classmethod
    def from_rational(cls, q):
        return cls(1, (Fraction(q),), _reduced=True)

    @classmethod
    def zero(cls):
        return cls.from_rational(0)

    @classmethod
    def one(cls):
        return cls.from_rational(1)

    @classmethod
    def root(cls, m, e=1):
        """zeta_m^e."""
        e %= m
        c = [Fraction(0)] * e + [Fraction(1)]
        return cls(m, c)

    def lift(self, bigm):
        """Coefficient tuple of this element viewed in Q(zeta_bigm)."""
        if bigm == self.order:
            return self.coeffs
        if bigm % self.order != 0:
            raise ValueError("cannot lift order %d into order %d" % (self.order, bigm))
        step = bigm // self.order
        c = [Fraction(0)] * (step * max(len(self.coeffs), 1))
        for e, x in enumerate(self.coeffs):
            if x:
                c[e * step] = x
        return _reduce_mod_phi(c, bigm)

    def _pair(self, other):
        other = _coerce(other)
        if other is None:
            return None
        m = self.order * other.order // math.gcd(self.order, other.order)
        return m, self.lift(m), other.lift(m), other

    def __add__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        m, a, b, _ = p
        return CycloRational(m, tuple(x + y for x, y in zip(a, b)), _reduced=True)

    __radd__ = __add__

    def __neg__(self):
        return CycloRational(self.order, tuple(-x for x in self.coeffs), _reduced=True)

    def __sub__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        m, a, b, _ = p
        return CycloRational(m, tuple(x - y for x, y in zip(a, b)), _reduced=True)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        m, a, b, _ = p
        prod = _poly_mul(list(a), list(b))
        return CycloRational(m, prod)

    __rmul__ = __mul__

    def inv(self):
        """Multiplicative inverse by the extended Euclidean algorithm in Q[x]
        against Phi_m."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_m)")
        m = self.order
        phi = [Fraction(x) for x in cyclotomic_poly(m)]
        # invariants: r0 = s0*a mod phi, r1 = s1*a mod phi
        r0, r1 = phi, list(self.coeffs)
        s0, s1 = [], [Fraction(1)]
        while True:
            while r1 and not r1[-1]:
                r1.pop()
            if len(r1) == 1:
                c = r1[0]
                return CycloRational(m, [x / c for x in s1])
            q, r = _frac_poly_divmod(r0, r1)
            s = [Fraction(0)] * max(len(s0), len(_poly_mul(q, s1)))
            qs1 = _poly_mul(q, s1)
            for i, x in enumerate(s0):
                s[i] += x
            for i, x in enumerate(qs1):
                s[i] -= x
            r0, r1 = r1, r
            s0, s1 = s1, s

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        return self.inv() * other

    def __pow__(self, n):
        if n < 0:
            return self.inv() ** (-n)
        out = CycloRational.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def is_zero(self):
        return all(not x for x in self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        _, a, b, _ = p
        return a == b

    # equal values can live at different stored orders, so no consistent
    # cheap hash exists; elements are used as dict values, never keys
    __hash__ = None

    def is_rational(self):
        return all(not x for x in self.coeffs[1:])

    def as_fraction(self):
        if not self.is_rational():
            raise ValueError("%s is not rational" % self)
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __str__(self):
        from . import textform
        return textform.format_cyclo(self)

    def __repr__(self):
        return "CycloRational(%d, %r)" % (self.order, [str(x) for x in self.coeffs])

ZERO = CycloRational.zero()
ONE = CycloRational.one()

def _coerce(x):
    if isinstance(x, CycloRational):
        return x
    if isinstance(x, (int, Fraction)):
        return CycloRational.from_rational(x)
    return None

def as_cyclo(x):
    c = _coerce(x)
    if c is None:
        raise TypeError("cannot interpret %r as a cyclotomic rational" % (x,))
    return c
