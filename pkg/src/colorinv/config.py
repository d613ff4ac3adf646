"""Configuration files and the shipped example configurations.

A configuration is a flat text file of dotted-key assignments whose values
are Python literals:

    group.factors = [2]
    bicharacter.expmat = [[1]]
    space.degrees = [(0,), (1,)]
    shape.pairs = [(1, 1)]
    bounds.truncation = 4
    bounds.max_n = 5

Blank lines and lines starting with '#' are ignored.  Parsing reports the
offending line number; semantic checks (bicharacter axioms, the fixed
basis order) run on load so that a Config in hand is always valid.
"""

from __future__ import annotations

import ast
from dataclasses import dataclass
from importlib import resources

from .groups import Bicharacter, validate_bicharacter
from .sympoly import MixedShape
from .tensors import GradedSpace

KNOWN_KEYS = ("group.factors", "bicharacter.expmat", "space.degrees",
              "shape.pairs", "bounds.truncation", "bounds.max_n")
REQUIRED_KEYS = KNOWN_KEYS[:4]

DEFAULT_TRUNCATION = 4
DEFAULT_MAX_N = 5

class ConfigError(ValueError):
    pass

@dataclass
class Config:
    name: str
    chi: Bicharacter
    space: GradedSpace
    shape: MixedShape
    truncation: int = DEFAULT_TRUNCATION
    max_n: int = DEFAULT_MAX_N

def _parse_lines(text, name):
    values = {}
    lines = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigError("%s:%d: expected 'key = value'" % (name, lineno))
        key, _, rhs = line.partition("=")
        key = key.strip()
        if key not in KNOWN_KEYS:
            raise ConfigError("%s:%d: unknown key %r (known: %s)"
                              % (name, lineno, key, ", ".join(KNOWN_KEYS)))
        if key in values:
            raise ConfigError("%s:%d: key %r given twice (first at line %d)"
                              % (name, lineno, key, lines[key]))
        try:
            values[key] = ast.literal_eval(rhs.strip())
        except (ValueError, SyntaxError) as exc:
            raise ConfigError("%s:%d: bad literal for %r: %s"
                              % (name, lineno, key, exc))
        lines[key] = lineno
    for key in REQUIRED_KEYS:
        if key not in values:
            raise ConfigError("%s: missing required key %r" % (name, key))
    return values, lines

def _int_list(value, what):
    if not isinstance(value, (list, tuple)) or not value:
        raise ConfigError("%s must be a nonempty list of integers" % what)
    out = []
    for x in value:
        if not isinstance(x, int) or isinstance(x, bool):
            raise ConfigError("%s must contain only integers, got %r" % (what, x))
        out.append(x)
    return out

def parse_config_text(text, name="<config>"):
    values, lines = _parse_lines(text, name)

    factors = _int_list(values["group.factors"], "group.factors")
    if any(d < 1 for d in factors):
        raise ConfigError("%s:%d: cyclic orders must be >= 1"
                          % (name, lines["group.factors"]))

    expmat = values["bicharacter.expmat"]
    if (not isinstance(expmat, (list, tuple)) or len(expmat) != len(factors)
            or any(not isinstance(row, (list, tuple)) or len(row) != len(factors)
                   for row in expmat)):
        raise ConfigError("%s:%d: bicharacter.expmat must be a %dx%d integer matrix"
                          % (name, lines["bicharacter.expmat"],
                             len(factors), len(factors)))
    expmat = [_int_list(row, "bicharacter.expmat row") for row in expmat]

    chi = Bicharacter(factors, expmat)
    report = validate_bicharacter(chi)
    if not report.ok:
        raise ConfigError("%s:%d: invalid bicharacter:\n  %s"
                          % (name, lines["bicharacter.expmat"],
                             "\n  ".join(report.failures[:6])))

    raw_degrees = values["space.degrees"]
    if not isinstance(raw_degrees, (list, tuple)) or not raw_degrees:
        raise ConfigError("%s:%d: space.degrees must be a nonempty list"
                          % (name, lines["space.degrees"]))
    degrees = []
    for d in raw_degrees:
        if isinstance(d, int) and not isinstance(d, bool):
            d = (d,)
        degrees.append(tuple(_int_list(d, "space.degrees entry")))
    try:
        space = GradedSpace(chi, degrees)
    except ValueError as exc:
        raise ConfigError("%s:%d: %s" % (name, lines["space.degrees"], exc))

    raw_pairs = values["shape.pairs"]
    if not isinstance(raw_pairs, (list, tuple)) or not raw_pairs:
        raise ConfigError("%s:%d: shape.pairs must be a nonempty list of (b, t)"
                          % (name, lines["shape.pairs"]))
    pairs = []
    for p in raw_pairs:
        bt = _int_list(p, "shape.pairs entry")
        if len(bt) != 2 or min(bt) < 0 or max(bt) == 0:
            raise ConfigError("%s:%d: each shape pair needs b, t >= 0, not both 0"
                              % (name, lines["shape.pairs"]))
        pairs.append(tuple(bt))
    try:
        shape = MixedShape(space, pairs)
    except ValueError as exc:
        raise ConfigError("%s:%d: %s" % (name, lines["shape.pairs"], exc))

    truncation = values.get("bounds.truncation", DEFAULT_TRUNCATION)
    max_n = values.get("bounds.max_n", DEFAULT_MAX_N)
    for key, val in (("bounds.truncation", truncation), ("bounds.max_n", max_n)):
        if not isinstance(val, int) or isinstance(val, bool) or val < 1:
            raise ConfigError("%s:%d: %s must be a positive integer"
                              % (name, lines[key], key))

    return Config(name, chi, space, shape, truncation, max_n)

def parse_config(path):
    with open(path, "r", encoding="utf-8") as f:
        text = f.read()
    return parse_config_text(text, name=str(path))

def list_builtin_configs():
    out = []
    for entry in resources.files(__package__).joinpath("configs").iterdir():
        if entry.name.endswith(".cfg"):
            out.append(entry.name[:-4])
    return sorted(out)

def builtin_config(name):
    ref = resources.files(__package__).joinpath("configs").joinpath(name + ".cfg")
    if not ref.is_file():
        raise ConfigError("no builtin configuration %r (available: %s)"
                          % (name, ", ".join(list_builtin_configs())))
    return parse_config_text(ref.read_text(encoding="utf-8"),
                             name="builtin:" + name)

def resolve_config(spec):
    """CLI helper: 'builtin:NAME' or a filesystem path."""
    if spec.startswith("builtin:"):
        return builtin_config(spec[len("builtin:"):])
    return parse_config(spec)
