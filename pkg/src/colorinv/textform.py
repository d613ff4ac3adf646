"""Canonical text forms and their parsers.

Every emitter here has a matching parser that reproduces an equal object,
and output ordering is deterministic: cyclotomic scalars list terms by
ascending power of z, algebra elements and tensors sort terms
lexicographically by word, polynomials sort monomials by the canonical
variable order of their shape.  The grammar is deliberately small:

    scalar       1/2 - 1/3*z^2          (z = zeta(m) from context)
    algebra      (c) * x1.x3 + (c) * 1   generators by index, '1' = empty word
    variable     T(2)[1,3]^[2]
    polynomial   (c) * T(1)[1]^[1] * T(1)[2]^[2] + ...
    tensor       (e) * e1 ox e2* + ...   '*' marks dual slots
    point file   one 'i: tensor' line per summand

Structured (JSON) emitters mirror the same data with the same ordering.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .cyclo import CycloRational
from .epsalgebra import EpsElement
from .sympoly import SymPolynomial, SymVariable
from .tensors import PRIMAL, DUAL, GradedTensor

TENSOR_SEP = "ox"

# ---------------------------------------------------------------- scalars

def format_fraction(q):
    return str(q)

def parse_fraction(text):
    try:
        return Fraction(text.strip())
    except ZeroDivisionError:
        raise ValueError("zero denominator in %r" % text.strip())

def _power_name(k):
    if k == 0:
        return ""
    if k == 1:
        return "z"
    return "z^%d" % k

def format_cyclo(x):
    """Terms by ascending power of z; '0' for zero; rational part bare."""
    parts = []
    for k, a in enumerate(x.coeffs):
        if a == 0:
            continue
        mag = format_fraction(abs(a))
        name = _power_name(k)
        body = mag if not name else "%s*%s" % (mag, name)
        parts.append((a < 0, body))
    if not parts:
        return "0"
    out = []
    for i, (negative, body) in enumerate(parts):
        if i == 0:
            out.append("-" + body if negative else body)
        else:
            out.append("- " + body if negative else "+ " + body)
    return " ".join(out)

_TERM_RE = re.compile(r"^(?:(?P<num>-?\d+(?:/\d+)?)(?:\*(?P<pow>z(?:\^\d+)?))?|(?P<bare>-?z(?:\^\d+)?))$")

def parse_cyclo(text, order):
    """Inverse of format_cyclo at a known order.  Also accepts bare 'z^k'
    and '-z^k' terms for hand-written input."""
    s = text.strip()
    if not s:
        raise ValueError("empty scalar")
    s = s.replace("- ", "+ -").replace("+ ", "+")
    if s.startswith("+"):
        s = s[1:]
    total = CycloRational.zero()
    for raw in s.split("+"):
        raw = raw.strip()
        if not raw:
            raise ValueError("malformed scalar %r" % text)
        m = _TERM_RE.match(raw)
        if not m:
            raise ValueError("bad scalar term %r" % raw)
        if m.group("bare"):
            body = m.group("bare")
            coeff = Fraction(-1 if body.startswith("-") else 1)
            powtext = body.lstrip("-")
        else:
            coeff = Fraction(m.group("num"))
            powtext = m.group("pow") or ""
        if not powtext:
            k = 0
        elif powtext == "z":
            k = 1
        else:
            k = int(powtext[2:])
        total = total + CycloRational.from_rational(coeff) * CycloRational.root(order, k)
    return total

# ------------------------------------------------------- splitting helper

def split_top(text, sep):
    """Split on a separator token at bracket depth 0.  The separator is a
    token, not a character: ' + ', ' - ', or '*' between spaces survive
    inside parentheses and brackets."""
    parts = []
    depth = 0
    cur = []
    i = 0
    n = len(text)
    w = len(sep)
    while i < n:
        c = text[i]
        if c in "([":
            depth += 1
        elif c in ")]":
            depth -= 1
            if depth < 0:
                raise ValueError("unbalanced brackets in %r" % text)
        if depth == 0 and text.startswith(sep, i):
            parts.append("".join(cur))
            cur = []
            i += w
            continue
        cur.append(c)
        i += 1
    if depth:
        raise ValueError("unbalanced brackets in %r" % text)
    parts.append("".join(cur))
    return parts

def _strip_parens(text):
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError("expected parenthesized coefficient in %r" % text)
    return s[1:-1]

# ------------------------------------------------- eps-algebra elements

def _format_word(word):
    if not word:
        return "1"
    return ".".join("x%d" % i for i in word)

def _parse_word(text, alg):
    s = text.strip()
    if s == "1":
        return ()
    word = []
    for piece in s.split("."):
        piece = piece.strip()
        if not piece.startswith("x"):
            raise ValueError("bad generator %r" % piece)
        i = int(piece[1:])
        if not 1 <= i <= len(alg.gen_degrees):
            raise ValueError("generator index %d out of range" % i)
        word.append(i)
    return tuple(word)

def format_eps(elem):
    """Terms sorted lexicographically by word; '(c) * word' per term."""
    if not elem.terms:
        return "0"
    parts = []
    for word, c in sorted(elem.terms.items()):
        parts.append("(%s) * %s" % (format_cyclo(c), _format_word(word)))
    return " + ".join(parts)

def parse_eps(text, alg):
    s = text.strip()
    if s == "0":
        return alg.zero()
    total = alg.zero()
    for term in split_top(s, " + "):
        pieces = split_top(term.strip(), " * ")
        if len(pieces) != 2:
            raise ValueError("bad algebra term %r" % term)
        c = parse_cyclo(_strip_parens(pieces[0]), alg.chi.m)
        word = _parse_word(pieces[1], alg)
        total = total + alg.monomial(word).scale(c)
    return total

# ---------------------------------------------------------- variables

def format_variable(v):
    return "T(%d)[%s]^[%s]" % (
        v.summand,
        ",".join(str(i) for i in v.lower),
        ",".join(str(i) for i in v.upper))

_VAR_RE = re.compile(r"^T\((\d+)\)\[([0-9,]*)\]\^\[([0-9,]*)\]$")

def parse_variable(text):
    m = _VAR_RE.match(text.strip())
    if not m:
        raise ValueError("bad variable %r" % text)
    def ints(s):
        return tuple(int(x) for x in s.split(",")) if s else ()
    return SymVariable(int(m.group(1)), ints(m.group(2)), ints(m.group(3)))

def format_sym(poly):
    """Monomials in the canonical variable order of the shape; within a
    term the coefficient comes first, then the variables."""
    if not poly.terms:
        return "0"
    parts = []
    for mono, c in poly.terms_sorted():
        names = [format_variable(v) for v in mono] or ["1"]
        parts.append("(%s) * %s" % (format_cyclo(c), " * ".join(names)))
    return " + ".join(parts)

def parse_sym(text, shape):
    from .sympoly import sym_normalize
    s = text.strip()
    if s == "0":
        return SymPolynomial.zero(shape)
    total = SymPolynomial.zero(shape)
    for term in split_top(s, " + "):
        pieces = split_top(term.strip(), " * ")
        if len(pieces) < 2:
            raise ValueError("bad polynomial term %r" % term)
        c = parse_cyclo(_strip_parens(pieces[0]), shape.chi.m)
        if len(pieces) == 2 and pieces[1].strip() == "1":
            word = ()
        else:
            word = tuple(parse_variable(p) for p in pieces[1:])
            for v in word:
                shape.check_variable(v)
        res = sym_normalize(shape, word)
        if res is None:
            continue
        swap, mono = res
        total = total + SymPolynomial(shape, {mono: c * swap})
    return total

# ------------------------------------------------------------- tensors

def _format_slots(idx, variance):
    names = []
    for i, var in zip(idx, variance):
        names.append("e%d%s" % (i, "*" if var == DUAL else ""))
    return (" %s " % TENSOR_SEP).join(names) if names else "1"

def format_tensor(t):
    """'(coefficient) * e1 ox e2*' terms, sorted by index word."""
    if not t.terms:
        return "0"
    parts = []
    for idx, c in t.terms_sorted():
        parts.append("(%s) * %s" % (format_eps(c), _format_slots(idx, t.variance)))
    return " + ".join(parts)

_SLOT_RE = re.compile(r"^e(\d+)(\*?)$")

def parse_tensor(text, space, alg, variance):
    s = text.strip()
    if s == "0":
        return GradedTensor.zero(space, alg, variance)
    total = GradedTensor.zero(space, alg, variance)
    for term in split_top(s, " + "):
        pieces = split_top(term.strip(), " * ")
        if len(pieces) != 2:
            raise ValueError("bad tensor term %r" % term)
        coeff = parse_eps(_strip_parens(pieces[0]), alg)
        slots = pieces[1].strip()
        if slots == "1":
            idx = ()
            var = ()
        else:
            idx = []
            var = []
            for piece in split_top(slots, " %s " % TENSOR_SEP):
                m = _SLOT_RE.match(piece.strip())
                if not m:
                    raise ValueError("bad tensor slot %r" % piece)
                idx.append(int(m.group(1)))
                var.append(DUAL if m.group(2) else PRIMAL)
            idx = tuple(idx)
            var = tuple(var)
        if var != tuple(variance):
            raise ValueError("tensor term variance %r does not match %r"
                             % (var, tuple(variance)))
        total = total + GradedTensor.basis(space, alg, var, idx).scale_eps(coeff)
    return total

# --------------------------------------------------------- point files

def format_point(point):
    lines = []
    for i, part in enumerate(point.parts, start=1):
        lines.append("%d: %s" % (i, format_tensor(part)))
    return "\n".join(lines) + "\n"

def parse_point(text, shape, alg, check=True):
    from .traces import W0Point
    parts = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if ":" not in line:
            raise ValueError("line %d: expected 'summand: tensor'" % lineno)
        head, body = line.split(":", 1)
        try:
            i = int(head.strip())
        except ValueError:
            raise ValueError("line %d: bad summand index %r" % (lineno, head))
        if not 1 <= i <= shape.s:
            raise ValueError("line %d: summand %d out of range" % (lineno, i))
        if i in parts:
            raise ValueError("line %d: summand %d given twice" % (lineno, i))
        b, t = shape.pairs[i - 1]
        variance = (PRIMAL,) * b + (DUAL,) * t
        try:
            parts[i] = parse_tensor(body.strip(), shape.space, alg, variance)
        except ValueError as exc:
            raise ValueError("line %d: %s" % (lineno, exc))
    for i in range(1, shape.s + 1):
        if i not in parts:
            b, t = shape.pairs[i - 1]
            variance = (PRIMAL,) * b + (DUAL,) * t
            parts[i] = GradedTensor.zero(shape.space, alg, variance)
    return W0Point(shape, alg, [parts[i] for i in range(1, shape.s + 1)],
                   check=check)

# ------------------------------------------------------ structured form

def structured_cyclo(x):
    return {"order": x.order, "coeffs": [str(a) for a in x.coeffs]}

def structured_eps(elem):
    return {"truncation": elem.alg.truncation,
            "terms": [{"word": list(w), "coeff": structured_cyclo(c)}
                      for w, c in sorted(elem.terms.items())]}

def structured_sym(poly):
    return {"pairs": [list(p) for p in poly.shape.pairs],
            "terms": [{"coeff": structured_cyclo(c),
                       "monomial": [{"summand": v.summand,
                                     "lower": list(v.lower),
                                     "upper": list(v.upper)} for v in mono]}
                      for mono, c in poly.terms_sorted()]}

def structured_tensor(t):
    return {"variance": list(t.variance),
            "terms": [{"indices": list(idx), "coeff": structured_eps(c)}
                      for idx, c in t.terms_sorted()]}

def dump_structured(obj):
    return json.dumps(obj, indent=2, sort_keys=False)
