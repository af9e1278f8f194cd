import doctest
import importlib

import pytest

MODULES = ["linform", "partitions", "roots", "residual", "bn", "mfunction", "classification"]


@pytest.mark.parametrize("name", MODULES)
def test_module_examples(name):
    module = importlib.import_module(f"hecke_residual.{name}")
    result = doctest.testmod(module)
    assert result.failed == 0
