"""Graded tensor words over Lambda_eps and the signed permutation calculus.

A GradedTensor is a sum of terms (basis word, coefficient), the coefficient
an EpsElement written to the right of the word.  Slots are primal (basis
e_i of degree g_i) or dual (e_i* of degree -g_i).  The S_k action is

    sigma . v = gamma(v, sigma^{-1}) (v_{sigma^{-1}(1)} ox ... ox v_{sigma^{-1}(k)})

with gamma(v, sigma) the product of eps(|v_i|, |v_j|) over inversions of
sigma.  Moving a coefficient past a basis factor of degree d costs
eps(|word|, d) per word of the coefficient (the hop rule); tensor products
and operator applications below keep all coefficients collected on the
right through that rule.

Operators T act by T(e_b) = sum_a e_a T_ab.  On dual slots T acts through
composition with T^{-1}, which in coordinates reads
T . e_c* = sum_a e_a* unhop(S_ca, g_a) with S = T^{-1}.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .cyclo import CycloRational, as_cyclo
from .epsalgebra import EpsAlgebra, EpsElement, hop
from . import permutations as perms
from .linalg import invert_fraction_matrix

PRIMAL, DUAL = 0, 1

class GradedSpace:
    """A finite dimensional G-graded space given by the basis degree list.

    Basis degrees must appear in the fixed order of G (even degrees first,
    identity first), so the even part occupies the first m slots.
    """

    def __init__(self, chi, degrees):
        self.chi = chi
        self.degrees = tuple(chi.group.element(g) for g in degrees)
        pos = [chi.position(g) for g in self.degrees]
        if pos != sorted(pos):
            raise ValueError("basis degrees must be listed in the fixed order of G")
        bits = [chi.parity_bit(g) for g in self.degrees]
        self.m = sum(1 for b in bits if b == 0)
        self.n = len(bits) - self.m

    @property
    def dim(self):
        return len(self.degrees)

    def degree(self, i):
        """G-degree of e_i (1-based)."""
        return self.degrees[i - 1]

    def slot_degree(self, variance_bit, i):
        d = self.degrees[i - 1]
        return self.chi.group.neg(d) if variance_bit == DUAL else d

    def __eq__(self, other):
        return (isinstance(other, GradedSpace) and self.chi == other.chi
                and self.degrees == other.degrees)

    def __repr__(self):
        return "GradedSpace(%r)" % (list(self.degrees),)

def gamma_exponent(chi, degrees, sigma):
    """Exponent of gamma(degrees, sigma): sum of eps exponents over the
    inversions of sigma."""
    total = 0
    for i, j in perms.inversions(sigma):
        total += chi.eps_exponent(degrees[i - 1], degrees[j - 1])
    return total % chi.m

def gamma(chi, degrees, sigma):
    return chi.root(gamma_exponent(chi, degrees, sigma))

class GradedTensor:
    """Element of a mixed tensor power of a graded space, coefficients in
    Lambda_eps on the right.  Treated as immutable."""

    __slots__ = ("space", "alg", "variance", "terms")

    def __init__(self, space, alg, variance, terms):
        self.space = space
        self.alg = alg
        self.variance = tuple(variance)
        self.terms = {w: c for w, c in terms.items() if c}

    @classmethod
    def zero(cls, space, alg, variance):
        return cls(space, alg, variance, {})

    @classmethod
    def basis(cls, space, alg, variance, indices, coeff=1):
        indices = tuple(indices)
        variance = tuple(variance)
        if len(indices) != len(variance):
            raise ValueError("index word and variance have different lengths")
        if not all(1 <= i <= space.dim for i in indices):
            raise ValueError("basis index out of range")
        c = coeff if isinstance(coeff, EpsElement) else alg.scalar(coeff)
        return cls(space, alg, variance, {indices: c})

    def slot_degrees(self, indices):
        sd = self.space.slot_degree
        return tuple(sd(v, i) for v, i in zip(self.variance, indices))

    def word_degree(self, indices):
        return self.space.chi.group.sum(self.slot_degrees(indices))

    def is_zero(self):
        return not self.terms

    def _check(self, other):
        if (self.space != other.space or self.alg != other.alg
                or self.variance != other.variance):
            raise ValueError("tensors live in different spaces")

    def __add__(self, other):
        if not isinstance(other, GradedTensor):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w)
            out[w] = c if s is None else s + c
        return GradedTensor(self.space, self.alg, self.variance, out)

    def __neg__(self):
        return GradedTensor(self.space, self.alg, self.variance,
                            {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        """Scalar multiple; central, so no hop is involved."""
        c = as_cyclo(c)
        return GradedTensor(self.space, self.alg, self.variance,
                            {w: x * c for w, x in self.terms.items()})

    def scale_eps(self, lam):
        """Right multiplication of every coefficient by lam."""
        return GradedTensor(self.space, self.alg, self.variance,
                            {w: x * lam for w, x in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, GradedTensor):
            return NotImplemented
        return (self.space == other.space and self.variance == other.variance
                and self.alg == other.alg and self.terms == other.terms)

    __hash__ = None

    def terms_sorted(self):
        return sorted(self.terms.items(), key=lambda t: t[0])

    def __repr__(self):
        return "GradedTensor(variance=%r, %d terms)" % (self.variance, len(self.terms))

def act_perm(sigma, t):
    """The signed place permutation action: slot i moves to slot sigma(i)
    and the term picks up gamma(slot degrees, sigma).  Evaluating gamma at
    the original degrees over the inversions of sigma itself is what makes
    the action a genuine S_k action: inverted-then-restored pairs cancel
    by skewness of eps."""
    k = len(t.variance)
    if len(sigma) != k:
        raise ValueError("permutation size %d does not match tensor width %d"
                         % (len(sigma), k))
    chi = t.space.chi
    new_var = perms.act_tuple(sigma, t.variance)
    out = {}
    for idx, c in t.terms.items():
        g = gamma_exponent(chi, t.slot_degrees(idx), sigma)
        nidx = perms.act_tuple(sigma, idx)
        nc = c * chi.root(g)
        prev = out.get(nidx)
        out[nidx] = nc if prev is None else prev + nc
    return GradedTensor(t.space, t.alg, new_var, out)

def tensor_product(a, b):
    """Concatenate tensor words; a's coefficient hops past b's basis word."""
    if a.space != b.space or a.alg != b.alg:
        raise ValueError("tensor factors live over different spaces")
    out = {}
    for ib, cb in b.terms.items():
        d = b.word_degree(ib)
        for ia, ca in a.terms.items():
            c = hop(ca, d) * cb
            if c:
                out[ia + ib] = c
    return GradedTensor(a.space, a.alg, a.variance + b.variance, out)

def tensor_power(a, k):
    if k == 0:
        return GradedTensor.basis(a.space, a.alg, (), ())
    out = a
    for _ in range(k - 1):
        out = tensor_product(out, a)
    return out

def contract_pairs(t):
    """Full contraction of a word in alternating (dual, primal) variance:
    each adjacent pair e_a* ox e_b contributes delta_ab.  Returns the
    EpsElement sum of surviving coefficients."""
    k2 = len(t.variance)
    if k2 % 2 or any(v != (DUAL if i % 2 == 0 else PRIMAL)
                     for i, v in enumerate(t.variance)):
        raise ValueError("contraction needs alternating dual/primal variance")
    total = t.alg.zero()
    for idx, c in t.terms.items():
        if all(idx[2 * i] == idx[2 * i + 1] for i in range(k2 // 2)):
            total = total + c
    return total

def ev_pair(t):
    """Evaluation of a (dual^k, primal^k) word: shuffle the two halves
    together with the signed action of the fixed interleaving, then contract
    adjacent pairs."""
    k2 = len(t.variance)
    if k2 % 2:
        raise ValueError("ev needs an even number of slots")
    k = k2 // 2
    if t.variance != (DUAL,) * k + (PRIMAL,) * k:
        raise ValueError("ev needs variance (dual^k, primal^k)")
    return contract_pairs(act_perm(perms.tau_perm(k), t))

class GradedOperator:
    """Square matrix of EpsElement entries acting on a graded space by
    T(e_b) = sum_a e_a T_ab.  Treated as immutable."""

    __slots__ = ("space", "alg", "mat")

    def __init__(self, space, alg, mat):
        self.space = space
        self.alg = alg
        n = space.dim
        mat = tuple(tuple(x if isinstance(x, EpsElement) else alg.scalar(x)
                          for x in row) for row in mat)
        if len(mat) != n or any(len(r) != n for r in mat):
            raise ValueError("operator matrix must be %d x %d" % (n, n))
        self.mat = mat

    @classmethod
    def zero(cls, space, alg):
        z = alg.zero()
        return cls(space, alg, [[z] * space.dim for _ in range(space.dim)])

    @classmethod
    def identity(cls, space, alg):
        one = alg.one()
        z = alg.zero()
        return cls(space, alg, [[one if i == j else z for j in range(space.dim)]
                                for i in range(space.dim)])

    @classmethod
    def matrix_unit(cls, space, alg, a, b, coeff=1):
        c = coeff if isinstance(coeff, EpsElement) else alg.scalar(coeff)
        z = alg.zero()
        return cls(space, alg,
                   [[c if (i, j) == (a - 1, b - 1) else z
                     for j in range(space.dim)] for i in range(space.dim)])

    def entry(self, a, b):
        return self.mat[a - 1][b - 1]

    def __add__(self, other):
        self._check(other)
        return GradedOperator(self.space, self.alg,
                              [[x + y for x, y in zip(r1, r2)]
                               for r1, r2 in zip(self.mat, other.mat)])

    def __neg__(self):
        return GradedOperator(self.space, self.alg,
                              [[-x for x in r] for r in self.mat])

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = as_cyclo(c)
        return GradedOperator(self.space, self.alg,
                              [[x * c for x in r] for r in self.mat])

    def _check(self, other):
        if self.space != other.space or self.alg != other.alg:
            raise ValueError("operators on different spaces")

    def compose(self, other):
        """Matrix product in operator order: (self other)(v) = self(other(v))."""
        self._check(other)
        n = self.space.dim
        z = self.alg.zero()
        out = []
        for a in range(n):
            row = []
            for c in range(n):
                acc = z
                for b in range(n):
                    x = self.mat[a][b]
                    y = other.mat[b][c]
                    if x and y:
                        acc = acc + x * y
                row.append(acc)
            out.append(row)
        return GradedOperator(self.space, self.alg, out)

    def __eq__(self, other):
        if not isinstance(other, GradedOperator):
            return NotImplemented
        return (self.space == other.space and self.alg == other.alg
                and self.mat == other.mat)

    __hash__ = None

    def g_degree(self):
        """The G-degree alpha with T(U_h) <= U_{alpha+h}, or None when the
        operator is not homogeneous.  Entry (a,b) must be homogeneous of
        Lambda_eps-degree alpha + g_b - g_a."""
        grp = self.space.chi.group
        alpha = None
        for a in range(1, self.space.dim + 1):
            for b in range(1, self.space.dim + 1):
                e = self.mat[a - 1][b - 1]
                if e.is_zero():
                    continue
                d = e.g_degree()
                if d is None:
                    return None
                cand = grp.add(d, grp.sub(self.space.degree(a), self.space.degree(b)))
                if alpha is None:
                    alpha = cand
                elif alpha != cand:
                    return None
        return grp.identity if alpha is None else alpha

    def is_degree_preserving(self):
        return self.g_degree() == self.space.chi.group.identity

    def constant_part(self):
        """The matrix of empty-word coefficients, as Fractions; raises if a
        constant coefficient is irrational."""
        return [[x.constant_part().as_fraction() for x in row] for row in self.mat]

    def proper_operator(self):
        return GradedOperator(self.space, self.alg,
                              [[x.proper_part() for x in row] for row in self.mat])

    def is_zero(self):
        return all(x.is_zero() for row in self.mat for x in row)

def dual_action_matrix(opinv):
    """Column matrix for the induced action on dual slots: with S = T^{-1},
    e_c* goes to sum_a e_a* unhop(S_ca, g_a).  Returned in the same (new
    index, old index) orientation used for primal slots."""
    space = opinv.space
    n = space.dim
    out = [[None] * n for _ in range(n)]
    for c in range(1, n + 1):
        for a in range(1, n + 1):
            out[a - 1][c - 1] = hop(opinv.mat[c - 1][a - 1], space.degree(a), invert=True)
    return out

def apply_operator(t, op, opinv=None, slots=None):
    """Apply an operator to every slot of a tensor (or to the given 1-based
    slots).  Dual slots transform through composition with the inverse, so
    opinv is required when a transformed slot is dual.  Coefficients emitted
    at a slot hop right past the new basis factors."""
    if slots is None:
        slots = range(1, len(t.variance) + 1)
    slots = sorted(set(slots))
    space, alg, chi = t.space, t.alg, t.space.chi
    if op.space != space or op.alg != alg:
        raise ValueError("operator and tensor live over different spaces")
    dual_mat = None
    if any(t.variance[s - 1] == DUAL for s in slots):
        if opinv is None:
            raise ValueError("dual slots need the inverse operator")
        dual_mat = dual_action_matrix(opinv)
    k = len(t.variance)
    out = GradedTensor.zero(space, alg, t.variance)
    acc = {}
    for idx, lam in t.terms.items():
        # per transformed slot: list of (new index, emitted coefficient)
        options = []
        for s in range(1, k + 1):
            if s not in slots:
                options.append([(idx[s - 1], None)])
                continue
            col = idx[s - 1] - 1
            mat = dual_mat if t.variance[s - 1] == DUAL else op.mat
            opts = [(a + 1, mat[a][col]) for a in range(space.dim) if mat[a][col]]
            options.append(opts)
        for combo in itertools.product(*options):
            nidx = tuple(a for a, _ in combo)
            sd = [space.slot_degree(v, a) for v, a in zip(t.variance, nidx)]
            # suffix degree sums of the new basis word
            grp = chi.group
            suffix = [grp.identity] * (k + 1)
            for j in range(k - 1, -1, -1):
                suffix[j] = grp.add(sd[j], suffix[j + 1])
            coeff = None
            for j, (_, cj) in enumerate(combo):
                if cj is None:
                    continue
                moved = hop(cj, suffix[j + 1])
                coeff = moved if coeff is None else coeff * moved
                if not coeff:
                    break
            if coeff is None:
                coeff = lam
            else:
                if not coeff:
                    continue
                coeff = coeff * lam
            if not coeff:
                continue
            prev = acc.get(nidx)
            acc[nidx] = coeff if prev is None else prev + coeff
    return GradedTensor(space, alg, t.variance, acc)

def psi_derivation(x, t):
    """Twisted derivation action of a homogeneous operator on a primal
    tensor word: slot i picks up eps(|x|, |v_j|) for every slot j < i."""
    if any(v != PRIMAL for v in t.variance):
        raise ValueError("the derivation action is defined on primal words")
    alpha = x.g_degree()
    if alpha is None:
        raise ValueError("operator is not homogeneous")
    space, alg, chi = t.space, t.alg, t.space.chi
    grp = chi.group
    k = len(t.variance)
    acc = {}
    for idx, lam in t.terms.items():
        degs = [space.degree(i) for i in idx]
        prefix = 0
        for i in range(k):
            if i > 0:
                prefix = (prefix + chi.eps_exponent(alpha, degs[i - 1])) % chi.m
            col = idx[i] - 1
            tail = grp.sum(degs[i + 1:])
            for a in range(space.dim):
                entry = x.mat[a][col]
                if not entry:
                    continue
                coeff = chi.root(prefix) * hop(entry, tail) * lam
                if not coeff:
                    continue
                nidx = idx[:i] + (a + 1,) + idx[i + 1:]
                prev = acc.get(nidx)
                acc[nidx] = coeff if prev is None else prev + coeff
    return GradedTensor(space, alg, t.variance, acc)

def eta_action(g, t):
    """The grouplike action: multiply each basis word by
    prod_i eps(g, |v_i|)."""
    if any(v != PRIMAL for v in t.variance):
        raise ValueError("the grouplike action is defined on primal words")
    chi = t.space.chi
    g = chi.group.element(g)
    out = {}
    for idx, lam in t.terms.items():
        e = sum(chi.eps_exponent(g, t.space.degree(i)) for i in idx) % chi.m
        out[idx] = lam * chi.root(e)
    return GradedTensor(t.space, t.alg, t.variance, out)

def color_bracket(x, y):
    """[x, y] = x y - eps(|x|, |y|) y x for homogeneous operators."""
    a = x.g_degree()
    b = y.g_degree()
    if a is None or b is None:
        raise ValueError("color bracket needs homogeneous operators")
    e = x.space.chi.eps(a, b)
    return x.compose(y) - y.compose(x).scale(e)

def invert_operator(T, max_steps=None):
    """Inverse of T = D + N with D the constant (empty word) part and N
    strictly generator supported: D is inverted exactly over Q and the
    rest comes from the finite Neumann series, which terminates because N
    is nilpotent under truncation."""
    space, alg = T.space, T.alg
    D = T.constant_part()
    Dinv = invert_fraction_matrix(D)
    if Dinv is None:
        raise ValueError("constant part of the operator is singular")
    Dinv_op = GradedOperator(space, alg, Dinv)
    N = T.proper_operator()
    M = (-N).compose(Dinv_op)
    series = GradedOperator.identity(space, alg)
    term = M
    steps = alg.truncation + 1 if max_steps is None else max_steps
    count = 0
    while not term.is_zero():
        count += 1
        if count > steps:
            raise ValueError("Neumann series did not terminate; "
                             "generator part is not nilpotent")
        series = series + term
        term = term.compose(M)
    return Dinv_op.compose(series)

def random_gl_epsilon(space, alg, rng, density=0.6):
    """A random invertible degree preserving operator together with its
    exact inverse.  The constant part is a random invertible rational
    matrix supported on the degree blocks; the generator part puts random
    short words of degree g_b - g_a into admissible entries."""
    from .epsalgebra import words_of_degree
    grp = space.chi.group
    n = space.dim
    z = alg.zero()
    while True:
        mat = [[z] * n for _ in range(n)]
        for a in range(1, n + 1):
            for b in range(1, n + 1):
                if space.degree(a) == space.degree(b):
                    mat[a - 1][b - 1] = alg.scalar(rng.randint(-3, 3))
        if invert_fraction_matrix([[x.constant_part().as_fraction() for x in row]
                                   for row in mat]) is not None:
            break
    maxlen = min(alg.truncation, 2)
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            if rng.random() > density:
                continue
            d = grp.sub(space.degree(b), space.degree(a))
            pool = [w for w in words_of_degree(alg, d, maxlen) if w]
            if not pool:
                continue
            w = pool[rng.randrange(len(pool))]
            coeff = rng.choice([-2, -1, 1, 2])
            extra = alg.monomial(w, coeff)
            mat[a - 1][b - 1] = mat[a - 1][b - 1] + extra
    T = GradedOperator(space, alg, mat)
    return T, invert_operator(T)
