"""Restitution of eps-symmetric polynomials and the trace calculus on
End(U) = U ox U*.

A W0Point is a degree-0 point of W: per summand a tensor in variance
(primal^b, dual^t) whose coefficient at each basis word is homogeneous of
the opposite G-degree, so every term has total degree identity.  On such
points restitution F^r is well defined on S(W*): a monomial V_1...V_r
pairs each variable with the matching basis word of the point and takes
the ordered product of the matched coefficients.  No extra sign appears;
because the coefficients carry the negated variable degrees, reordering
them tracks exactly the eps-symmetric relations of the monomials, which
is what makes the value independent of the representative word.

Elements of U ox U* act as operators by e_a ox e_c* . lam : e_b ->
delta_cb e_a eps(|lam|, g_b) lam, which fixes the composition and trace
rules below; tr(id) = m - n and tr(AB) = tr(BA) for degree preserving
arguments.
"""

from __future__ import annotations

import itertools

from . import permutations as perms
from .cyclo import CycloRational
from .epsalgebra import EpsAlgebra, hop
from .sympoly import MixedShape, SymPolynomial, SymVariable, sym_normalize
from .tensors import PRIMAL, DUAL, GradedTensor, GradedOperator, gamma_exponent

class W0Point:
    """A degree-0 point of W = (+)_i U_{b_i}^{t_i}."""

    def __init__(self, shape, alg, parts, check=True):
        self.shape = shape
        self.alg = alg
        self.parts = tuple(parts)
        if len(self.parts) != shape.s:
            raise ValueError("need one tensor per summand")
        for i, u in enumerate(self.parts, start=1):
            b, t = shape.pairs[i - 1]
            if u.variance != (PRIMAL,) * b + (DUAL,) * t:
                raise ValueError("summand %d tensor has wrong variance" % i)
            if u.space != shape.space or u.alg != alg:
                raise ValueError("summand %d tensor over wrong space or algebra" % i)
            if check:
                grp = shape.chi.group
                for idx, lam in u.terms.items():
                    d = u.word_degree(idx)
                    if not lam.is_homogeneous_of(grp.neg(d)):
                        raise ValueError(
                            "summand %d term %r has coefficient of degree != %r; "
                            "point is not degree 0" % (i, idx, grp.neg(d)))

    def part(self, i):
        return self.parts[i - 1]

def restitute_word(shape, word, point):
    """Evaluate an arbitrary variable sequence (an element of T^r(W*)) at a
    point: the ordered product of the point coefficients at the variables'
    basis words, zero if any variable misses the point's support."""
    alg = point.alg
    acc = alg.one()
    for v in word:
        shape.check_variable(v)
        lam = point.part(v.summand).terms.get(v.word())
        if lam is None:
            return alg.zero()
        acc = acc * lam
        if not acc:
            return alg.zero()
    return acc

def restitute(poly, point):
    """F^r on S(W*) at a degree-0 point, monomials evaluated on their
    canonical sorted representatives.  The input must be homogeneous: F^r
    is defined degree by degree, so a mix of total degrees is rejected."""
    degrees = sorted({len(mono) for mono in poly.terms})
    if len(degrees) > 1:
        raise ValueError("restitution needs a homogeneous polynomial; "
                         "found total degrees %s" % degrees)
    total = point.alg.zero()
    for mono, c in poly.terms.items():
        val = restitute_word(poly.shape, mono, point)
        if val:
            total = total + val.scale(c)
    return total

def transposition_sign_check(shape, word, i, point):
    """The adjacent-swap identity behind well-definedness on W_0:
    F(.. V_i ox V_{i+1} ..) = eps(|V_i|, |V_{i+1}|) F(.. V_{i+1} ox V_i ..).
    Returns True when it holds at this word and point.

    The general identity carries a second factor eps(|v|, |V_i| - |V_{i+1}|)
    depending on the degree of the point; on W_0 that degree is the identity
    and the factor is 1, so it is omitted here."""
    if not 1 <= i < len(word):
        raise ValueError("swap position out of range")
    chi = shape.chi
    swapped = list(word)
    swapped[i - 1], swapped[i] = swapped[i], swapped[i - 1]
    lhs = restitute_word(shape, tuple(word), point)
    e = chi.eps(shape.var_degree(word[i - 1]), shape.var_degree(word[i]))
    rhs = restitute_word(shape, tuple(swapped), point).scale(e)
    return lhs == rhs

def staircase_point(shape, r, base_alg=None):
    """The generic point used by the injectivity probe: one fresh
    eps-Grassmann generator per basis word of W, of the opposite degree, at
    strictly increasing filtration levels.  Returns (point, word index map).

    Distinct degree <= r monomials evaluate on it to distinct normal
    ordered words with unit coefficients, so a nonzero polynomial always
    leaves a nonzero certificate."""
    chi = shape.chi
    grp = chi.group
    space = shape.space
    words = []
    for i, (b, t) in enumerate(shape.pairs, start=1):
        rng = range(1, space.dim + 1)
        for lo in itertools.product(rng, repeat=b):
            for up in itertools.product(rng, repeat=t):
                words.append((i, lo + up))
    degrees = []
    for i, w in words:
        b, t = shape.pairs[i - 1]
        lo, up = w[:b], w[b:]
        d = grp.sub(grp.sum(space.degree(x) for x in lo),
                    grp.sum(space.degree(x) for x in up))
        degrees.append(grp.neg(d))
    offset = 0
    if base_alg is not None:
        alg = base_alg.with_generators(degrees,
                                       truncation=max(base_alg.truncation, r))
        offset = base_alg.ngens
    else:
        alg = EpsAlgebra(chi, degrees, truncation=max(r, 1))
    index = {}
    parts_terms = [dict() for _ in shape.pairs]
    for j, (i, w) in enumerate(words, start=1):
        index[(i, w)] = offset + j
        parts_terms[i - 1][w] = alg.gen(offset + j)
    parts = [GradedTensor(space, alg, (PRIMAL,) * b + (DUAL,) * t, terms)
             for (b, t), terms in zip(shape.pairs, parts_terms)]
    return W0Point(shape, alg, parts), index

def injectivity_probe(poly, r=None):
    """Restitute at the staircase point; for a polynomial of total degree
    <= r the result is zero exactly when the polynomial is zero, so a
    nonzero value certifies injectivity of restitution on its span.

    Mixed total degrees are fine here: each homogeneous component is
    restituted on its own, and the staircase values of different degrees
    are normal words of different lengths, so they cannot cancel."""
    if r is None:
        r = max((len(m) for m in poly.terms), default=0)
    point, _ = staircase_point(poly.shape, max(r, 1))
    total = point.alg.zero()
    for d in sorted({len(m) for m in poly.terms}):
        comp = SymPolynomial(poly.shape,
                             {m: c for m, c in poly.terms.items() if len(m) == d})
        total = total + restitute(comp, point)
    return total

# ---------------------------------------------------------------- End(U)

def u11_variance():
    return (PRIMAL, DUAL)

def identity_end(space, alg):
    terms = {(a, a): alg.one() for a in range(1, space.dim + 1)}
    return GradedTensor(space, alg, u11_variance(), terms)

def end_compose(x, y):
    """Composition in U ox U*: (e_a ox e_c* . lam)(e_b ox e_d* . mu) =
    delta_cb e_a ox e_d* . (eps(|lam|, g_b - g_d) lam mu), per word of
    lam."""
    if x.variance != u11_variance() or y.variance != u11_variance():
        raise ValueError("end_compose needs (primal, dual) words")
    if x.space != y.space or x.alg != y.alg:
        raise ValueError("operators over different spaces")
    grp = x.space.chi.group
    out = {}
    for (a, c), lam in x.terms.items():
        for (b, d), mu in y.terms.items():
            if c != b:
                continue
            shift = grp.sub(x.space.degree(b), x.space.degree(d))
            val = hop(lam, shift) * mu
            if not val:
                continue
            key = (a, d)
            prev = out.get(key)
            out[key] = val if prev is None else prev + val
    return GradedTensor(x.space, x.alg, u11_variance(), out)

def end_trace(x):
    """tr(e_a ox e_c* . lam) = delta_ac eps(g_a, g_a) lam."""
    if x.variance != u11_variance():
        raise ValueError("end_trace needs a (primal, dual) word")
    chi = x.space.chi
    total = x.alg.zero()
    for (a, c), lam in x.terms.items():
        if a == c:
            total = total + lam.scale(chi.eps(x.space.degree(a), x.space.degree(a)))
    return total

def operator_to_end(T):
    """GradedOperator matrix -> U ox U* word: entry T_ab = eps(|lam|, g_b) lam."""
    space, alg = T.space, T.alg
    out = {}
    for a in range(1, space.dim + 1):
        for b in range(1, space.dim + 1):
            e = T.mat[a - 1][b - 1]
            if e:
                out[(a, b)] = hop(e, space.degree(b), invert=True)
    return GradedTensor(space, alg, u11_variance(), out)

def end_to_operator(x):
    if x.variance != u11_variance():
        raise ValueError("expected a (primal, dual) word")
    space, alg = x.space, x.alg
    z = alg.zero()
    mat = [[z] * space.dim for _ in range(space.dim)]
    for (a, b), lam in x.terms.items():
        mat[a - 1][b - 1] = mat[a - 1][b - 1] + hop(lam, space.degree(b))
    return GradedOperator(space, alg, mat)

def trace_monomial(ops, cyclist, assign=None):
    """Product over cycles of tr(A_{f(i_1)} ... A_{f(i_r)}), the operators
    composed in cycle order.  assign maps positions 1..N to operator
    indices (default: position j uses operator j)."""
    if not ops:
        raise ValueError("need at least one operator")
    space, alg = ops[0].space, ops[0].alg
    positions = sorted(x for cyc in cyclist for x in cyc)
    n = len(positions)
    if positions != list(range(1, n + 1)):
        raise ValueError("cycles must partition 1..N")
    if assign is None:
        assign = list(range(1, n + 1))
    if len(assign) != n or not all(1 <= a <= len(ops) for a in assign):
        raise ValueError("assignment must map each position to an operator")
    total = alg.one()
    for cyc in sorted(cyclist, key=min):
        chain = identity_end(space, alg)
        for pos in cyc:
            chain = end_compose(chain, ops[assign[pos - 1] - 1])
        total = total * end_trace(chain)
    return total

def position_assignment(pshape):
    """For matrix shapes: which summand each of the N positions holds."""
    out = []
    for i, j in pshape.copies():
        b, t = pshape.shape.pairs[i - 1]
        if (b, t) != (1, 1):
            raise ValueError("trace monomials need matrix shape summands (1,1)")
        out.append(i)
    return out

def trace_match(pshape, sigma, point, phi=None):
    """Compare restitution of phi_sigma at a degree-0 matrix point with the
    product of cycle traces of sigma^{-1}.  Returns (match, lhs, rhs)."""
    from .pictures import build_phi
    assign = position_assignment(pshape)
    if phi is None:
        phi = build_phi(pshape, sigma)
    lhs = restitute(phi.poly, point)
    cyclist = perms.cycles(perms.inverse(sigma))
    rhs = trace_monomial(list(point.parts), cyclist, assign)
    return lhs == rhs, lhs, rhs
