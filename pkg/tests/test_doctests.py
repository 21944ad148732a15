import doctest
import importlib

import pytest

MODULES = ["poly", "diagram", "builder", "skein", "twist", "families", "surgery", "cli", "verify"]


@pytest.mark.parametrize("name", MODULES)
def test_docstring_examples(name):
    mod = importlib.import_module("skeintwist." + name)
    result = doctest.testmod(mod)
    assert result.failed == 0
