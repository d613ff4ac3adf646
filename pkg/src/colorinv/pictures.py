"""Picture invariants phi_sigma and their two evaluation paths.

For a mixed shape with multiplicities m_1..m_s, the blocked space is
(U_{b_1}^{t_1})^{ox m_1} ox ... ; its words list, per copy, b_i primal then
t_i dual slots.  mu is the permutation moving a blocked word into sorted
variance (all primal slots first, original order kept within each half).

A picture invariant is a polynomial in S(W*) built so that its restitution
at u agrees with the functional evaluation

    T_sigma(u ox ... ox u) = ev(nu . tau . (sigma_hat . mu . blocked)),

the right side computed here by t_sigma_eval.  The polynomial's monomial at
index tuple I = (r_1..r_N) uses, for copy (i,j), lower indices r at the
copy's primal positions and upper indices r o sigma^{-1} at its dual
positions; the coefficient is the rearrangement sign gamma(J, rho^{-1})
with rho = nu tau sigma_hat mu and J the blocked degree tuple, times the
dual-word normalization of the w-block degrees.

The dual-word normalization multiplying the rearrangement sign is the
strict reversed product  prod_{c < c'} eps(h_{c'}, h_c)  over the w-block
degrees.  On the support of T_sigma the blocks sum to the identity, so for
sign-valued eps this agrees with the diagonal-included triangular product
prod_{c <= c'} eps(h_c, h_{c'}) (an even number of blocks is odd, and
inverting a sign is harmless); for eps taking higher roots of unity only
the reversed strict form keeps the two evaluation paths equal, which is
how the evaluation oracle fixes it.  p_eps computes the triangular form
for comparison; coefficient uses the strict reversed one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import permutations as perms
from .cyclo import CycloRational
from .sympoly import MixedShape, SymVariable, SymPolynomial, sym_normalize
from .tensors import (PRIMAL, DUAL, GradedTensor, act_perm, contract_pairs,
                      gamma_exponent, tensor_product, tensor_power)

tau = perms.tau_perm
nu = perms.nu_perm
sigma_hat = perms.hat_perm

class PictureShape:
    """A mixed shape with copy multiplicities."""

    def __init__(self, shape, multiplicities):
        if not isinstance(shape, MixedShape):
            raise TypeError("expected a MixedShape")
        self.shape = shape
        self.mults = tuple(int(m) for m in multiplicities)
        if len(self.mults) != shape.s or any(m < 0 for m in self.mults):
            raise ValueError("multiplicities must list one nonnegative int per summand")
        self.N = sum(m * b for m, (b, _) in zip(self.mults, shape.pairs))
        self.Nprime = sum(m * t for m, (_, t) in zip(self.mults, shape.pairs))
        self.k = sum(self.mults)

    @property
    def balanced(self):
        return self.N == self.Nprime

    def require_balanced(self):
        if not self.balanced:
            raise ValueError("shape is unbalanced: N=%d primal vs N'=%d dual slots"
                             % (self.N, self.Nprime))

    def copies(self):
        """(summand, copy) pairs in blocked order."""
        return [(i, j) for i, m in enumerate(self.mults, start=1)
                for j in range(1, m + 1)]

    def lower_positions(self, i, j):
        """Primal-slot positions (1-based, within the primal half) of copy
        (i, j)."""
        base = sum(m * b for m, (b, _) in zip(self.mults[:i - 1], self.shape.pairs[:i - 1]))
        b = self.shape.pairs[i - 1][0]
        base += (j - 1) * b
        return list(range(base + 1, base + b + 1))

    def upper_positions(self, i, j):
        base = sum(m * t for m, (_, t) in zip(self.mults[:i - 1], self.shape.pairs[:i - 1]))
        t = self.shape.pairs[i - 1][1]
        base += (j - 1) * t
        return list(range(base + 1, base + t + 1))

    def blocked_variance(self):
        out = []
        for i, j in self.copies():
            b, t = self.shape.pairs[i - 1]
            out.extend([PRIMAL] * b + [DUAL] * t)
        return tuple(out)

    def __repr__(self):
        return "PictureShape(pairs=%r, mults=%r)" % (list(self.shape.pairs),
                                                     list(self.mults))

def mu(pshape):
    """Blocked-to-sorted rearrangement in S_{N+N'}."""
    N = pshape.N
    p = []
    for i, j in pshape.copies():
        b, t = pshape.shape.pairs[i - 1]
        lo = pshape.lower_positions(i, j)
        up = pshape.upper_positions(i, j)
        p.extend(lo)
        p.extend(N + q for q in up)
    return tuple(p)

def p_eps_exponent(chi, degs):
    """Exponent of the printed triangular product, diagonal included:
    sum over c <= c' of the eps exponent at (h_c, h_c')."""
    total = 0
    k = len(degs)
    for c in range(k):
        for cp in range(c, k):
            total += chi.eps_exponent(degs[c], degs[cp])
    return total % chi.m

def p_eps(chi, degs):
    return chi.root(p_eps_exponent(chi, degs))

def dual_word_exponent(chi, degs):
    """Exponent of the dual-word normalization: the strict reversed product
    prod_{c < c'} eps(h_{c'}, h_c) over the block degrees.  Chosen so that
    restituting the invariant reproduces the direct evaluation path."""
    total = 0
    k = len(degs)
    for c in range(k):
        for cp in range(c + 1, k):
            total += chi.eps_exponent(degs[cp], degs[c])
    return total % chi.m

def _sigma_inv_on_upper(pshape, sigma):
    pshape.require_balanced()
    if len(sigma) != pshape.N:
        raise ValueError("sigma must lie in S_%d" % pshape.N)
    return perms.inverse(sigma)

def picture_monomial(pshape, sigma, I):
    """The variable word of the summand at index tuple I: copy (i, j) reads
    its lower indices off I at its primal positions and its upper indices
    off I o sigma^{-1} at its dual positions."""
    inv = _sigma_inv_on_upper(pshape, sigma)
    word = []
    for i, j in pshape.copies():
        lower = tuple(I[p - 1] for p in pshape.lower_positions(i, j))
        upper = tuple(I[inv[q - 1] - 1] for q in pshape.upper_positions(i, j))
        word.append(SymVariable(i, lower, upper))
    return tuple(word)

def _word_block_degrees(pshape, sigma, I):
    inv = perms.inverse(sigma)
    grp = pshape.shape.chi.group
    space = pshape.shape.space
    out = []
    for i, j in pshape.copies():
        lo = grp.sum(space.degree(I[p - 1]) for p in pshape.lower_positions(i, j))
        up = grp.sum(space.degree(I[inv[q - 1] - 1]) for q in pshape.upper_positions(i, j))
        out.append(grp.sub(lo, up))
    return out

def _rho(pshape, sigma):
    two_n = 2 * pshape.N
    comp = perms.compose(nu(pshape.N), perms.compose(tau(pshape.N),
                         perms.compose(sigma_hat(sigma), mu(pshape))))
    assert len(comp) == two_n
    return comp

def coefficient_exponent(pshape, sigma, I):
    """Exponent of the coefficient at index tuple I: the rearrangement sign
    gamma(J, rho^{-1}) over the blocked degree tuple J, plus the dual-word
    normalization of the w-block degrees."""
    pshape.require_balanced()
    chi = pshape.shape.chi
    space = pshape.shape.space
    grp = chi.group
    inv = perms.inverse(sigma)
    sorted_degs = ([space.degree(r) for r in I]
                   + [grp.neg(space.degree(I[inv[y - 1] - 1]))
                      for y in range(1, pshape.N + 1)])
    J = perms.act_tuple(perms.inverse(mu(pshape)), tuple(sorted_degs))
    e = gamma_exponent(chi, J, _rho(pshape, sigma))
    h = _word_block_degrees(pshape, sigma, I)
    e += dual_word_exponent(chi, h)
    return e % chi.m

def coefficient(pshape, sigma, I):
    return pshape.shape.chi.root(coefficient_exponent(pshape, sigma, I))

@dataclass
class PictureInvariant:
    pshape: PictureShape
    sigma: tuple
    poly: SymPolynomial

def build_phi(pshape, sigma):
    """The picture invariant phi_sigma as an element of S(W*): sum over all
    index tuples I in {1..dim}^N of coefficient(I) times the normalized
    monomial at I."""
    pshape.require_balanced()
    shape = pshape.shape
    chi = shape.chi
    N = pshape.N
    if len(sigma) != N:
        raise ValueError("sigma must lie in S_%d" % N)
    total = {}
    for I in itertools.product(range(1, shape.space.dim + 1), repeat=N):
        word = picture_monomial(pshape, sigma, I)
        res = sym_normalize(shape, word)
        if res is None:
            continue
        swap, mono = res
        c = swap * coefficient(pshape, sigma, I)
        prev = total.get(mono)
        total[mono] = c if prev is None else prev + c
    return PictureInvariant(pshape, tuple(sigma), SymPolynomial(shape, total))

def theta_eval(sigma, t):
    """Theta(sigma) on a tensor in sorted variance (primal^N, dual^N):
    apply the extended sigma to the primal half, interleave, swap each
    pair, contract."""
    two_n = len(t.variance)
    if two_n % 2:
        raise ValueError("theta needs an even number of slots")
    N = two_n // 2
    if t.variance != (PRIMAL,) * N + (DUAL,) * N:
        raise ValueError("theta needs variance (primal^N, dual^N)")
    if len(sigma) != N:
        raise ValueError("sigma must lie in S_%d" % N)
    s = act_perm(sigma_hat(sigma), t)
    s = act_perm(tau(N), s)
    s = act_perm(nu(N), s)
    return contract_pairs(s)

def blocked_word(pshape, parts):
    """u_1^{ox m_1} ox ... ox u_s^{ox m_s} for per-summand tensors u_i."""
    if len(parts) != pshape.shape.s:
        raise ValueError("need one tensor per summand")
    factors = []
    for i, u in enumerate(parts, start=1):
        b, t = pshape.shape.pairs[i - 1]
        if u.variance != (PRIMAL,) * b + (DUAL,) * t:
            raise ValueError("summand %d tensor has wrong variance" % i)
        m = pshape.mults[i - 1]
        if m:
            factors.append(tensor_power(u, m))
    if not factors:
        space = pshape.shape.space
        alg = parts[0].alg if parts else None
        return GradedTensor.basis(space, alg, (), ())
    out = factors[0]
    for f in factors[1:]:
        out = tensor_product(out, f)
    return out

def t_sigma_eval(pshape, sigma, t):
    """T_sigma on a tensor already in sorted variance."""
    pshape.require_balanced()
    return theta_eval(sigma, t)

def t_sigma_on_parts(pshape, sigma, parts):
    """The functional path: block the per-summand tensors, rearrange into
    sorted variance by the signed mu action, evaluate Theta(sigma)."""
    pshape.require_balanced()
    blocked = blocked_word(pshape, parts)
    sorted_t = act_perm(mu(pshape), blocked)
    return t_sigma_eval(pshape, sigma, sorted_t)
