"""Truncated eps-Grassmann algebras.

Lambda_eps has generators x_1, x_2, ... with G-degrees fixed at construction
and relations  x_a x_b = eps(|x_a|, |x_b|) x_b x_a  for a != b, and
x_a^2 = 0 when x_a is odd.  A basis is given by normal-ordered words: index
sequences that are nondecreasing, strictly increasing at odd generators.
Words longer than the truncation bound D are set to zero, which makes the
algebra finite dimensional and every strictly generator-supported element
nilpotent.

Elements store {word: CycloRational} with zero coefficients dropped, so
representation is canonical and equality is dict comparison.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclo import CycloRational, as_cyclo

class EpsAlgebra:
    """Generator degree table plus truncation bound; the element factory."""

    def __init__(self, chi, gen_degrees, truncation=4):
        self.chi = chi
        self.gen_degrees = tuple(chi.group.element(g) for g in gen_degrees)
        if truncation < 0:
            raise ValueError("truncation must be nonnegative")
        self.truncation = truncation
        # parity of each generator; also validates eps(g,g) = +-1
        self.gen_parity = tuple(chi.parity_bit(g) for g in self.gen_degrees)

    @property
    def ngens(self):
        return len(self.gen_degrees)

    def degree(self, i):
        """G-degree of generator x_i (1-based)."""
        return self.gen_degrees[i - 1]

    def word_degree(self, word):
        return self.chi.group.sum(self.degree(i) for i in word)

    def with_generators(self, extra_degrees, truncation=None):
        t = self.truncation if truncation is None else truncation
        return EpsAlgebra(self.chi, self.gen_degrees + tuple(extra_degrees), t)

    def zero(self):
        return EpsElement(self, {})

    def one(self):
        return EpsElement(self, {(): CycloRational.one()})

    def scalar(self, c):
        c = as_cyclo(c)
        return EpsElement(self, {(): c} if c else {})

    def gen(self, i):
        if not 1 <= i <= self.ngens:
            raise ValueError("generator index %d out of range 1..%d" % (i, self.ngens))
        if self.truncation < 1:
            return self.zero()
        return EpsElement(self, {(i,): CycloRational.one()})

    def monomial(self, word, coeff=1):
        res = normal_order(self, word)
        if res is None:
            return self.zero()
        c, w = res
        if len(w) > self.truncation:
            return self.zero()
        c = c * as_cyclo(coeff)
        return EpsElement(self, {w: c} if c else {})

    def __eq__(self, other):
        return (isinstance(other, EpsAlgebra) and self.chi == other.chi
                and self.gen_degrees == other.gen_degrees
                and self.truncation == other.truncation)

def normal_order(alg, word):
    """Sort a generator index sequence into normal order, collecting the
    eps swap factor.  Returns (coefficient, sorted word), or None when the
    word contains a repeated odd generator and is therefore zero.

    Insertion sort; each time index a hops left past index b the word picks
    up the factor eps(|x_b|, |x_a|) from rewriting x_b x_a.
    """
    chi = alg.chi
    items = list(word)
    exp = 0
    for i in range(1, len(items)):
        j = i
        while j > 0 and items[j - 1] > items[j]:
            exp += chi.eps_exponent(alg.degree(items[j - 1]), alg.degree(items[j]))
            items[j - 1], items[j] = items[j], items[j - 1]
            j -= 1
    for a, b in zip(items, items[1:]):
        if a == b and alg.gen_parity[a - 1]:
            return None
    return chi.root(exp), tuple(items)

class EpsElement:
    """Element of a truncated eps-Grassmann algebra.  Treated as immutable."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg, terms):
        self.alg = alg
        self.terms = {w: c for w, c in terms.items() if c}

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _check(self, other):
        if self.alg is not other.alg and self.alg != other.alg:
            raise ValueError("elements from different eps-Grassmann algebras")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, CycloRational)):
            other = self.alg.scalar(other)
        if not isinstance(other, EpsElement):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w)
            out[w] = c if s is None else s + c
        return EpsElement(self.alg, out)

    __radd__ = __add__

    def __neg__(self):
        return EpsElement(self.alg, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, EpsElement) else -as_cyclo(other))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = as_cyclo(c)
        return EpsElement(self.alg, {w: c * x for w, x in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycloRational)):
            return self.scale(other)
        if not isinstance(other, EpsElement):
            return NotImplemented
        self._check(other)
        alg = self.alg
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                if len(w1) + len(w2) > alg.truncation:
                    continue
                res = normal_order(alg, w1 + w2)
                if res is None:
                    continue
                s, w = res
                c = s * c1 * c2
                prev = out.get(w)
                out[w] = c if prev is None else prev + c
        return EpsElement(alg, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, CycloRational)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, CycloRational)):
            other = self.alg.scalar(other)
        if not isinstance(other, EpsElement):
            return NotImplemented
        return self.alg == other.alg and self.terms == other.terms

    __hash__ = None

    def g_degree(self):
        """Common G-degree of all words, or None when inhomogeneous.
        The zero element is homogeneous of every degree; returns the
        identity for it."""
        alg = self.alg
        degs = {alg.word_degree(w) for w in self.terms}
        if not degs:
            return alg.chi.group.identity
        if len(degs) > 1:
            return None
        return degs.pop()

    def is_homogeneous_of(self, d):
        d = self.alg.chi.group.element(d)
        return all(self.alg.word_degree(w) == d for w in self.terms)

    def constant_part(self):
        return self.terms.get((), CycloRational.zero())

    def proper_part(self):
        """The component supported on nonempty words."""
        return EpsElement(self.alg, {w: c for w, c in self.terms.items() if w})

    def __str__(self):
        from . import textform
        return textform.format_eps(self)

    def __repr__(self):
        return "EpsElement(%s)" % (str(self),)

def hop(elem, d, invert=False):
    """Move an element of Lambda_eps past a basis factor of G-degree d:
    each word w picks up eps(|w|, d) (or its inverse)."""
    alg = elem.alg
    chi = alg.chi
    sign = -1 if invert else 1
    out = {}
    for w, c in elem.terms.items():
        e = chi.eps_exponent(alg.word_degree(w), d)
        out[w] = c * chi.root(sign * e)
    return EpsElement(alg, out)

def filtration_member(elem, N):
    """True when every word uses only generators x_1 .. x_N."""
    return all(all(i <= N for i in w) for w in elem.terms)

def filtration_level(elem):
    """Smallest N with elem in Lambda_eps(N); 0 for scalars."""
    return max((max(w) for w in elem.terms if w), default=0)

def words_of_degree(alg, d, max_len=None):
    """All normal-ordered basis words of the given G-degree with length up
    to max_len (default: the truncation bound).  The empty word is included
    when d is the identity."""
    if max_len is None:
        max_len = alg.truncation
    max_len = min(max_len, alg.truncation)
    d = alg.chi.group.element(d)
    grp = alg.chi.group
    out = []

    def extend(word, deg, start):
        if deg == d:
            out.append(tuple(word))
        if len(word) == max_len:
            return
        for i in range(start, alg.ngens + 1):
            if word and word[-1] == i and alg.gen_parity[i - 1]:
                continue
            word.append(i)
            extend(word, grp.add(deg, alg.degree(i)), i)
            word.pop()

    extend([], grp.identity, 1)
    return out
