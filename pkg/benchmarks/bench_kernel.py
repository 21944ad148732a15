"""Compare the compiled and pure-Python diagram kernels.

Usage: python benchmarks/bench_kernel.py [--repeat N]

Part one times the individual kernels on random braid closures.  Part two
runs the full skein engine in a subprocess per kernel, since the engine
picks its kernel once at import time.
"""

import argparse
import os
import random
import subprocess
import sys
import time

from skeintwist import _purecore
from skeintwist.builder import random_braid_closure

try:
    from skeintwist import _ccore
except ImportError:
    _ccore = None

ENGINE_SNIPPET = """
import time
from importlib import resources
from skeintwist.core import IMPLEMENTATION
from skeintwist.diagram import parse_pd, insert_full_twists
from skeintwist.skein import SkeinEngine
text = resources.files('skeintwist').joinpath('data/templates/synthetic_k5.pd').read_text()
d = insert_full_twists(parse_pd(text), {n})
t = time.perf_counter()
SkeinEngine(max_crossings=400).f_polynomial(d)
print(IMPLEMENTATION, d.num_crossings, time.perf_counter() - t)
"""


def bench_kernels(repeat: int) -> None:
    rng = random.Random(7)
    diagrams = [random_braid_closure(rng, 30, 6) for _ in range(200)]
    mods = [("python", _purecore)] + ([("cython", _ccore)] if _ccore else [])
    print("%-16s" % "kernel" + "".join("%12s" % name for name, _ in mods))
    for fn in ("simplify", "canonical_key", "components", "bad_crossings"):
        row = []
        for _, mod in mods:
            f = getattr(mod, fn)
            t = time.perf_counter()
            for _ in range(repeat):
                for d in diagrams:
                    if fn == "bad_crossings":
                        f(d.P, d.S, mod.component_starts(d.P, d.S, 0))
                    elif fn == "components":
                        f(d.P, d.S)
                    else:
                        f(d.P, d.S, d.loops)
            row.append(time.perf_counter() - t)
        print("%-16s" % fn + "".join("%11.3fs" % x for x in row))


def bench_engine() -> None:
    for n in (1, 2, 3):
        for pure in ("1", "0"):
            env = dict(os.environ, SKEINTWIST_PURE=pure)
            res = subprocess.run([sys.executable, "-c", ENGINE_SNIPPET.format(n=n)], env=env,
                                 capture_output=True, text=True, check=True)
            impl, crossings, secs = res.stdout.split()
            print("engine  %-7s %3s crossings  %.3fs" % (impl, crossings, float(secs)))


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _ccore is None:
        print("compiled kernel not built; only the pure kernel is timed")
    bench_kernels(args.repeat)
    bench_engine()


if __name__ == "__main__":
    main()
