"""Build the optional compiled kernel; the package works without it."""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("SKEINTWIST_NO_EXT", "").strip() in ("", "0"):
    try:
        from Cython.Build import cythonize
    except ImportError:  # pragma: no cover - Cython missing at build time
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            ["src/skeintwist/_ccore.pyx"],
            compiler_directives={"language_level": "3"},
            quiet=True,
        )

setup(ext_modules=ext_modules)
