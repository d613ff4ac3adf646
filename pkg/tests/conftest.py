import pytest

from colorinv.config import builtin_config, list_builtin_configs
from colorinv.sampling import standard_test_algebra

BUILTINS = tuple(list_builtin_configs())


@pytest.fixture(scope="session")
def cfgs():
    """All shipped example configurations, keyed by name."""
    return {name: builtin_config(name) for name in BUILTINS}


@pytest.fixture(scope="session")
def algebras(cfgs):
    """A standard coefficient algebra per configuration (truncation 4)."""
    return {name: standard_test_algebra(cfg.chi) for name, cfg in cfgs.items()}
