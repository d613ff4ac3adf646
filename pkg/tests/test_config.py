"""Configuration parsing: shipped files, inline text, error reporting."""

import pytest

from colorinv.config import (
    ConfigError,
    builtin_config,
    list_builtin_configs,
    parse_config_text,
    resolve_config,
)
from colorinv.groups import validate_bicharacter

GOOD = """
# comment line
group.factors = [2]
bicharacter.expmat = [[1]]
space.degrees = [(0,), (1,)]
shape.pairs = [(1, 1), (2, 1)]
bounds.truncation = 3
bounds.max_n = 4
"""


def test_builtin_configs_load_and_validate():
    names = list_builtin_configs()
    assert sorted(names) == names
    assert set(names) == {"super", "trivial", "z2z2", "z3z3", "z4"}
    for name in names:
        cfg = builtin_config(name)
        assert cfg.name == "builtin:%s" % name
        assert validate_bicharacter(cfg.chi).ok
        assert cfg.space.dim == len(cfg.space.degrees)
        assert cfg.shape.pairs
        assert cfg.truncation >= 1
        assert cfg.max_n >= 1


def test_parse_inline_text():
    cfg = parse_config_text(GOOD, name="inline")
    assert cfg.chi.group.order == 2
    assert cfg.space.dim == 2
    assert cfg.shape.pairs == ((1, 1), (2, 1))
    assert cfg.truncation == 3
    assert cfg.max_n == 4


def test_bounds_have_defaults():
    text = "\n".join(line for line in GOOD.splitlines()
                     if not line.startswith("bounds."))
    cfg = parse_config_text(text, name="nobounds")
    assert cfg.truncation >= 1
    assert cfg.max_n >= 1


def test_missing_section_reports_error():
    text = "group.factors = [2]\nbicharacter.expmat = [[1]]\n"
    with pytest.raises(ConfigError):
        parse_config_text(text, name="partial")


def test_bad_value_reports_line():
    text = GOOD.replace("group.factors = [2]", "group.factors = [x]")
    with pytest.raises(ConfigError) as err:
        parse_config_text(text, name="badline")
    assert "badline" in str(err.value)


def test_wrong_matrix_shape_rejected():
    text = GOOD.replace("bicharacter.expmat = [[1]]",
                        "bicharacter.expmat = [[1, 0], [0, 1]]")
    with pytest.raises(ConfigError):
        parse_config_text(text, name="badmat")


def test_wrong_degree_width_rejected():
    text = GOOD.replace("space.degrees = [(0,), (1,)]",
                        "space.degrees = [(0, 0), (1, 1)]")
    with pytest.raises(ConfigError):
        parse_config_text(text, name="baddeg")


def test_unknown_key_rejected():
    with pytest.raises(ConfigError):
        parse_config_text(GOOD + "\nmystery.key = 1\n", name="extra")


def test_resolve_config_builtin_and_unknown(tmp_path):
    cfg = resolve_config("builtin:super")
    assert cfg.chi == builtin_config("super").chi
    with pytest.raises(ConfigError):
        resolve_config("builtin:missing")
    path = tmp_path / "own.cfg"
    path.write_text(GOOD)
    cfg = resolve_config(str(path))
    assert cfg.shape.pairs == ((1, 1), (2, 1))
    with pytest.raises((ConfigError, OSError)):
        resolve_config(str(tmp_path / "absent.cfg"))
