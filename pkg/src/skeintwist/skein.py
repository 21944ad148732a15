"""Skein-relation engines for HOMFLYPT and its degree-zero part.

Conventions: ``v^-1 H(L+) - v H(L-) = z H(L0)`` with ``H(unknot) = 1``, and
``F_L`` is the ``z^0`` coefficient of ``(v^-1 z)^(#L-1) H_L``.  For ``F``
the relation becomes ``v^-2 F(L+) - F(L-) = F(L0)`` when the two strands at
the crossing lie on one component and ``0`` otherwise.

Both engines walk a diagram from base points, switching the crossings met
under-first ("bad" crossings) one at a time.  Each switch is paid for by a
smoothed diagram with one crossing fewer; once no bad crossing remains the
diagram is a descending unlink.  Every intermediate diagram is simplified
by Reidemeister 1 and 2 moves and memoized on its canonical key.
"""

from __future__ import annotations

import os
import threading
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .core import kernel
from .diagram import Diagram
from .poly import DENOM, HomflyPoly, LaurentPoly, z_degree_zero

__all__ = [
    "BudgetExceeded",
    "SkeinEngine",
    "Stats",
    "homfly",
    "f_polynomial",
    "f_split_formula",
    "f_from_homfly",
    "choose_crossing",
    "default_engine",
]

DEFAULT_MAX_CROSSINGS = 64

_V2 = LaurentPoly({2: 1})
_VM2 = LaurentPoly({-2: 1})
_ONE = LaurentPoly({0: 1})
_MINUS_ONE = LaurentPoly({0: -1})

# (v^-1 - v) z^-1: the factor contributed by each extra split circle.
_MU = HomflyPoly({(-1, -1): 1, (1, -1): -1})
_H_ONE = HomflyPoly({(0, 0): 1})
_VZ = HomflyPoly({(1, 1): 1})
_MINUS_VINV_Z = HomflyPoly({(-1, 1): -1})
_HV2 = HomflyPoly({(2, 0): 1})
_HVM2 = HomflyPoly({(-2, 0): 1})


class BudgetExceeded(RuntimeError):
    """The diagram is larger than the crossing budget or the time ran out."""


@dataclass
class Stats:
    """Counters for one engine; shown by the command line ``--stats`` flag."""

    nodes: int = 0
    cache_hits: int = 0
    cache_misses: int = 0
    branches: int = 0
    max_crossings_seen: int = 0

    def as_dict(self) -> Dict[str, int]:
        return {
            "nodes": self.nodes,
            "cache_hits": self.cache_hits,
            "cache_misses": self.cache_misses,
            "branches": self.branches,
            "max_crossings_seen": self.max_crossings_seen,
        }


class SkeinEngine:
    """Memoizing evaluator for ``H`` and ``F``.

    Args:
        max_crossings: Diagrams with more crossings are refused.
        timeout: Wall-clock limit in seconds for one public call, or ``None``.
        strategy: Base-point rule for choosing bad crossings: ``0`` walks
            from the smallest arcs, ``1`` from the largest.  Values never
            depend on it.
        workers: Number of processes used for the top-level branches of
            ``F``; ``1`` computes everything in this process.
    """

    def __init__(
        self,
        max_crossings: int = DEFAULT_MAX_CROSSINGS,
        timeout: Optional[float] = None,
        strategy: int = 0,
        workers: int = 1,
    ) -> None:
        self.max_crossings = max_crossings
        self.timeout = timeout
        self.strategy = strategy
        self.workers = max(1, int(workers))
        self.stats = Stats()
        self._f_cache: Dict[tuple, LaurentPoly] = {}
        self._h_cache: Dict[tuple, HomflyPoly] = {}
        self._lock = threading.Lock()
        self._deadline: Optional[float] = None

    def clear(self) -> None:
        with self._lock:
            self._f_cache.clear()
            self._h_cache.clear()
            self.stats = Stats()

    # -- budget -------------------------------------------------------------

    def _start(self, d: Diagram) -> None:
        if d.num_crossings > self.max_crossings:
            raise BudgetExceeded(
                "diagram has %d crossings; the limit is %d" % (d.num_crossings, self.max_crossings)
            )
        self._deadline = time.monotonic() + self.timeout if self.timeout else None

    def _tick(self, n: int) -> None:
        st = self.stats
        st.nodes += 1
        if n > st.max_crossings_seen:
            st.max_crossings_seen = n
        if self._deadline is not None and time.monotonic() > self._deadline:
            raise BudgetExceeded("time limit of %.3gs exceeded" % self.timeout)

    # -- F ------------------------------------------------------------------

    def f_polynomial(self, d: Diagram) -> LaurentPoly:
        self._start(d)
        if self.workers > 1:
            return self._f_parallel(d)
        return self._f_link(d.P, d.S, d.loops)

    def _f_link(self, P, S, loops) -> LaurentPoly:
        P, S, loops = kernel.simplify(P, S, loops)
        if not S:
            return DENOM ** (loops - 1) if loops > 1 else _ONE
        comp, k = kernel.components(P, S)
        if k == 1 and loops == 0:
            return self._f_knot(P, S)
        parts, signed, free = kernel.split_components(P, S, loops)
        total = k + loops
        result = (DENOM ** (total - 1)).shift(signed)
        for sub_P, sub_S in parts:
            result = result * self._f_knot(*kernel.simplify(sub_P, sub_S, 0)[:2])
        return result

    def _f_knot(self, P, S) -> LaurentPoly:
        if not S:
            return _ONE
        key = kernel.canonical_key(P, S, 0)
        cached = self._f_cache.get(key)
        if cached is not None:
            self.stats.cache_hits += 1
            return cached
        self.stats.cache_misses += 1
        self._tick(len(S))
        starts = kernel.component_starts(P, S, self.strategy)
        bad = kernel.bad_crossings(P, S, starts)
        acc = LaurentPoly()
        coef = _ONE
        for x in bad:
            self.stats.branches += 1
            sP, sS, sl = kernel.smooth(P, S, 0, x)
            f0 = self._f_link(sP, sS, sl)
            if S[x] > 0:
                acc = acc + (coef * f0).shift(2)
                coef = coef.shift(2)
            else:
                acc = acc - coef * f0
                coef = coef.shift(-2)
            P, S = kernel.switch(P, S, x)
        result = acc + coef
        self._f_cache[key] = result
        return result

    def _f_parallel(self, d: Diagram) -> LaurentPoly:
        # Expand the first level of the knot recursion and farm out the
        # smoothed diagrams; the sum is assembled in a fixed order.
        P, S, loops = kernel.simplify(d.P, d.S, d.loops)
        comp, k = kernel.components(P, S)
        if not S or k + loops != 1:
            return self._f_link(P, S, loops)
        starts = kernel.component_starts(P, S, self.strategy)
        bad = kernel.bad_crossings(P, S, starts)
        jobs = []
        coefs = []
        coef = _ONE
        for x in bad:
            jobs.append(kernel.smooth(P, S, 0, x))
            if S[x] > 0:
                coefs.append(coef.shift(2))
                coef = coef.shift(2)
            else:
                coefs.append(-coef)
                coef = coef.shift(-2)
            P, S = kernel.switch(P, S, x)
        with ProcessPoolExecutor(max_workers=self.workers) as pool:
            args = [(job, self.max_crossings, self.timeout, self.strategy) for job in jobs]
            values = list(pool.map(_f_worker, args))
        result = coef
        for c, val in zip(coefs, values):
            result = result + c * LaurentPoly.parse(val)
        return result

    # -- H ------------------------------------------------------------------

    def homfly(self, d: Diagram) -> HomflyPoly:
        self._start(d)
        return self._h(d.P, d.S, d.loops)

    def _h(self, P, S, loops) -> HomflyPoly:
        P, S, loops = kernel.simplify(P, S, loops)
        if not S:
            return _MU ** (loops - 1) if loops > 1 else _H_ONE
        parts = kernel.pieces(P, S)
        if len(parts) > 1 or loops:
            result = _MU ** (len(parts) + loops - 1)
            for sub_P, sub_S in parts:
                result = result * self._h_connected(sub_P, sub_S)
            return result
        return self._h_connected(P, S)

    def _h_connected(self, P, S) -> HomflyPoly:
        key = kernel.canonical_key(P, S, 0)
        cached = self._h_cache.get(key)
        if cached is not None:
            self.stats.cache_hits += 1
            return cached
        self.stats.cache_misses += 1
        self._tick(len(S))
        _, k = kernel.components(P, S)
        starts = kernel.component_starts(P, S, self.strategy)
        bad = kernel.bad_crossings(P, S, starts)
        acc = HomflyPoly()
        coef = _H_ONE
        for x in bad:
            self.stats.branches += 1
            h0 = self._h(*kernel.smooth(P, S, 0, x))
            if S[x] > 0:
                acc = acc + coef * _VZ * h0
                coef = coef * _HV2
            else:
                acc = acc + coef * _MINUS_VINV_Z * h0
                coef = coef * _HVM2
            P, S = kernel.switch(P, S, x)
        result = acc + coef * (_MU ** (k - 1))
        self._h_cache[key] = result
        return result


def _f_worker(args) -> str:
    flat, max_crossings, timeout, strategy = args
    eng = SkeinEngine(max_crossings=max_crossings, timeout=timeout, strategy=strategy)
    return str(eng._f_link(*flat))


_default = None
_default_lock = threading.Lock()


def default_engine() -> SkeinEngine:
    """Process-wide engine configured from ``SKEINTWIST_*`` variables."""
    global _default
    with _default_lock:
        if _default is None:
            env = os.environ
            _default = SkeinEngine(
                max_crossings=int(env.get("SKEINTWIST_MAX_CROSSINGS", DEFAULT_MAX_CROSSINGS)),
                timeout=float(env["SKEINTWIST_TIMEOUT"]) if env.get("SKEINTWIST_TIMEOUT") else None,
                workers=int(env.get("SKEINTWIST_WORKERS", 1)),
            )
        return _default


def homfly(d: Diagram, engine: Optional[SkeinEngine] = None) -> HomflyPoly:
    """HOMFLYPT polynomial of ``d`` normalized so the unknot has value 1."""
    return (engine or default_engine()).homfly(d)


def f_polynomial(d: Diagram, engine: Optional[SkeinEngine] = None) -> LaurentPoly:
    """Degree-zero part ``F`` computed with the pruned skein relation."""
    return (engine or default_engine()).f_polynomial(d)


def f_from_homfly(d: Diagram, engine: Optional[SkeinEngine] = None) -> LaurentPoly:
    """``F`` obtained from the full HOMFLYPT polynomial."""
    return z_degree_zero(homfly(d, engine), d.num_components)


def f_split_formula(component_polys: Sequence[LaurentPoly], linking: Sequence[Sequence[int]]) -> LaurentPoly:
    """``(v^-2 - 1)^(m-1) v^(2 sum_{i<j} lk_ij) F_1 ... F_m``."""
    m = len(component_polys)
    if m == 0:
        raise ValueError("need at least one component")
    if len(linking) != m or any(len(row) != m for row in linking):
        raise ValueError("linking matrix dimension does not match the component list")
    total = sum(linking[i][j] for i in range(m) for j in range(i + 1, m))
    result = (DENOM ** (m - 1)).shift(2 * total)
    for p in component_polys:
        result = result * p
    return result


def choose_crossing(d: Diagram, order: Optional[Sequence[int]] = None) -> int:
    """First crossing met under-first along the traversal.

    ``order`` gives one base arc per component (default: smallest arcs).

    Raises:
        ValueError: if the diagram is a descending unlink for that order.
    """
    if order is None:
        order = kernel.component_starts(d.P, d.S, 0)
    bad = kernel.bad_crossings(d.P, d.S, list(order))
    if not bad:
        raise ValueError("diagram is a descending unlink for this traversal")
    return bad[0]
