"""The eps-symmetric algebra on the dual of a mixed tensor space.

W = U_{b_1}^{t_1} (+) ... (+) U_{b_s}^{t_s} is a direct sum of mixed tensor
powers of a graded space U.  The coordinate functions on W are the
variables T(i)[l_1..l_b]^[u_1..u_t], one per basis word of summand i, with
G-degree sum(g_l) - sum(g_u).  S(W*) is the quotient of the tensor algebra
by  v ox w - eps(|v|, |w|) w ox v,  so monomials have the canonical sorted
form produced by sym_normalize, and a monomial containing a repeated odd
variable is zero.

Variables are ordered by (position of their G-degree in the fixed order of
G, summand, index tuples); any total order compatible with the degree
blocks yields an equivalent basis.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .cyclo import CycloRational, as_cyclo
from . import permutations as perms
from .tensors import gamma_exponent

@dataclass(frozen=True)
class SymVariable:
    """Coordinate function on summand i: lower indices are the primal slots,
    upper indices the dual slots of the underlying basis word."""
    summand: int
    lower: tuple
    upper: tuple

    def word(self):
        return self.lower + self.upper

class MixedShape:
    """The space W: a graded space plus the list of (b_i, t_i) pairs."""

    def __init__(self, space, pairs):
        self.space = space
        self.pairs = tuple((int(b), int(t)) for b, t in pairs)
        if any(b < 0 or t < 0 for b, t in self.pairs):
            raise ValueError("summand shapes must be nonnegative")
        self._vars = None
        self._key = None

    @property
    def s(self):
        return len(self.pairs)

    @property
    def chi(self):
        return self.space.chi

    def check_variable(self, v):
        if not 1 <= v.summand <= self.s:
            raise ValueError("summand index %d out of range" % v.summand)
        b, t = self.pairs[v.summand - 1]
        if len(v.lower) != b or len(v.upper) != t:
            raise ValueError("variable %r does not fit summand shape (%d,%d)"
                             % (v, b, t))
        if not all(1 <= i <= self.space.dim for i in v.word()):
            raise ValueError("variable index out of range in %r" % (v,))

    def var_degree(self, v):
        grp = self.chi.group
        lo = grp.sum(self.space.degree(i) for i in v.lower)
        up = grp.sum(self.space.degree(i) for i in v.upper)
        return grp.sub(lo, up)

    def var_parity(self, v):
        return self.chi.parity_bit(self.var_degree(v))

    def var_key(self, v):
        if self._key is None:
            self._key = {}
        k = self._key.get(v)
        if k is None:
            k = (self.chi.position(self.var_degree(v)), v.summand, v.lower, v.upper)
            self._key[v] = k
        return k

    def variables(self):
        """All variables, in the canonical order."""
        if self._vars is None:
            out = []
            rng = range(1, self.space.dim + 1)
            for i, (b, t) in enumerate(self.pairs, start=1):
                for lo in itertools.product(rng, repeat=b):
                    for up in itertools.product(rng, repeat=t):
                        out.append(SymVariable(i, lo, up))
            out.sort(key=self.var_key)
            self._vars = out
        return list(self._vars)

    def __eq__(self, other):
        return (isinstance(other, MixedShape) and self.space == other.space
                and self.pairs == other.pairs)

    def __repr__(self):
        return "MixedShape(%r)" % (list(self.pairs),)

def sym_normalize(shape, seq):
    """Sort a variable sequence into canonical order collecting eps swap
    factors; returns (coefficient, monomial tuple) or None when a repeated
    odd variable makes it zero."""
    chi = shape.chi
    items = list(seq)
    degs = [shape.var_degree(v) for v in items]
    keys = [shape.var_key(v) for v in items]
    exp = 0
    for i in range(1, len(items)):
        j = i
        while j > 0 and keys[j - 1] > keys[j]:
            exp += chi.eps_exponent(degs[j - 1], degs[j])
            items[j - 1], items[j] = items[j], items[j - 1]
            degs[j - 1], degs[j] = degs[j], degs[j - 1]
            keys[j - 1], keys[j] = keys[j], keys[j - 1]
            j -= 1
    for a, b in zip(items, items[1:]):
        if a == b and chi.parity_bit(shape.var_degree(a)):
            return None
    return chi.root(exp), tuple(items)

class SymPolynomial:
    """Element of S(W*): {sorted monomial: CycloRational}.  Immutable."""

    __slots__ = ("shape", "terms")

    def __init__(self, shape, terms):
        self.shape = shape
        self.terms = {m: c for m, c in terms.items() if c}

    @classmethod
    def zero(cls, shape):
        return cls(shape, {})

    @classmethod
    def one(cls, shape):
        return cls(shape, {(): CycloRational.one()})

    @classmethod
    def variable(cls, shape, v):
        shape.check_variable(v)
        return cls(shape, {(v,): CycloRational.one()})

    @classmethod
    def from_word(cls, shape, seq, coeff=1):
        """Image of an arbitrary variable sequence in S(W*)."""
        for v in seq:
            shape.check_variable(v)
        res = sym_normalize(shape, seq)
        if res is None:
            return cls.zero(shape)
        c, mono = res
        c = c * as_cyclo(coeff)
        return cls(shape, {mono: c} if c else {})

    def is_zero(self):
        return not self.terms

    def _check(self, other):
        if self.shape != other.shape:
            raise ValueError("polynomials over different shapes")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, CycloRational)):
            other = SymPolynomial(self.shape, {(): as_cyclo(other)})
        if not isinstance(other, SymPolynomial):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            out[m] = c if s is None else s + c
        return SymPolynomial(self.shape, out)

    __radd__ = __add__

    def __neg__(self):
        return SymPolynomial(self.shape, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, CycloRational)):
            other = SymPolynomial(self.shape, {(): as_cyclo(other)})
        return self + (-other)

    def scale(self, c):
        c = as_cyclo(c)
        return SymPolynomial(self.shape, {m: x * c for m, x in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycloRational)):
            return self.scale(other)
        if not isinstance(other, SymPolynomial):
            return NotImplemented
        self._check(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                res = sym_normalize(self.shape, m1 + m2)
                if res is None:
                    continue
                s, m = res
                c = c1 * c2 * s
                prev = out.get(m)
                out[m] = c if prev is None else prev + c
        return SymPolynomial(self.shape, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, CycloRational)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, SymPolynomial):
            return NotImplemented
        return self.shape == other.shape and self.terms == other.terms

    __hash__ = None

    def g_degree(self):
        """Common G-degree of the monomials, or None if inhomogeneous;
        zero counts as homogeneous of degree identity."""
        grp = self.shape.chi.group
        degs = {grp.sum(self.shape.var_degree(v) for v in m) for m in self.terms}
        if not degs:
            return grp.identity
        if len(degs) > 1:
            return None
        return degs.pop()

    def multidegree(self, mono):
        counts = [0] * self.shape.s
        for v in mono:
            counts[v.summand - 1] += 1
        return tuple(counts)

    def terms_sorted(self):
        key = self.shape.var_key
        return sorted(self.terms.items(), key=lambda t: [key(v) for v in t[0]])

    def __str__(self):
        from . import textform
        return textform.format_sym(self)

    def __repr__(self):
        return "SymPolynomial(%s)" % (str(self),)

def enumerate_sym_basis(shape, r, multidegree=None):
    """Sorted monomials of total degree r (optionally of a fixed summand
    multidegree): nondecreasing variable sequences in the canonical order,
    odd variables strictly increasing."""
    vs = shape.variables()
    chi = shape.chi
    par = [chi.parity_bit(shape.var_degree(v)) for v in vs]
    out = []

    def extend(mono, start, counts):
        if len(mono) == r:
            if multidegree is None or tuple(counts) == tuple(multidegree):
                out.append(tuple(mono))
            return
        if multidegree is not None:
            if any(c > m for c, m in zip(counts, multidegree)):
                return
        for i in range(start, len(vs)):
            if mono and mono[-1] == vs[i] and par[i]:
                continue
            counts[vs[i].summand - 1] += 1
            mono.append(vs[i])
            extend(mono, i, counts)
            mono.pop()
            counts[vs[i].summand - 1] -= 1

    extend([], 0, [0] * shape.s)
    return out

def sym_dimension(shape, r):
    """dim S^r(W*) from the generating function
    prod_even 1/(1-q) * prod_odd (1+q) over the variables."""
    coeffs = [Fraction(1)] + [Fraction(0)] * r
    for v in shape.variables():
        if shape.var_parity(v):
            # multiply by (1 + q)
            for k in range(r, 0, -1):
                coeffs[k] += coeffs[k - 1]
        else:
            # multiply by 1/(1-q): running partial sums
            for k in range(1, r + 1):
                coeffs[k] += coeffs[k - 1]
    assert coeffs[r].denominator == 1
    return int(coeffs[r])

def symmetrize(shape, seq):
    """Image under the symmetrization e(r): the average over S_r of the
    signed place permutation action on the variable word, pushed down to
    S(W*)."""
    r = len(seq)
    chi = shape.chi
    degs = tuple(shape.var_degree(v) for v in seq)
    out = SymPolynomial.zero(shape)
    for sigma in perms.all_perms(r):
        e = gamma_exponent(chi, degs, sigma)
        word = perms.act_tuple(sigma, tuple(seq))
        out = out + SymPolynomial.from_word(shape, word, chi.root(e))
    return out.scale(Fraction(1, max(1, _factorial(r))))

def _factorial(r):
    out = 1
    for i in range(2, r + 1):
        out *= i
    return out
