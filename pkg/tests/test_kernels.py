"""The compiled kernel must agree with the pure-Python one everywhere."""

import os
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from helpers import random_diagrams
from skeintwist import _purecore, core

try:
    from skeintwist import _ccore
except ImportError:  # pragma: no cover - exercised only without a C compiler
    _ccore = None

needs_ext = pytest.mark.skipif(_ccore is None, reason="compiled kernel not built")


@needs_ext
@given(st.integers(0, 100_000))
def test_kernels_agree(seed):
    d = random_diagrams(1, 12, seed)[0]
    P, S, loops = d.flat()
    for fn in ("simplify", "canonical_key", "split_components", "pieces"):
        args = (P, S, loops) if fn in ("simplify", "canonical_key", "split_components") else (P, S)
        assert getattr(_ccore, fn)(*args) == getattr(_purecore, fn)(*args), fn
    assert _ccore.components(P, S) == _purecore.components(P, S)
    assert _ccore.successor_table(P, S) == _purecore.successor_table(P, S)
    for strategy in (0, 1):
        starts = _purecore.component_starts(P, S, strategy)
        assert _ccore.component_starts(P, S, strategy) == starts
        assert _ccore.bad_crossings(P, S, starts) == _purecore.bad_crossings(P, S, starts)
    for x in range(len(S)):
        assert _ccore.switch(P, S, x) == _purecore.switch(P, S, x)
        assert _ccore.smooth(P, S, loops, x) == _purecore.smooth(P, S, loops, x)


def test_implementation_flag():
    assert core.IMPLEMENTATION in ("cython", "python")
    assert core.kernel.IMPLEMENTATION == core.IMPLEMENTATION


def test_pure_fallback_selected_by_environment():
    code = "from skeintwist.core import IMPLEMENTATION; print(IMPLEMENTATION)"
    env = dict(os.environ, SKEINTWIST_PURE="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
