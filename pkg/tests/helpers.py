"""Shared test data and diagram moves.

The move helpers work on the flat ``(P, S, loops)`` form and build a new
:class:`Diagram`; they never simplify, so the result has more crossings
than the input.
"""

import random
from pathlib import Path
from typing import List, Tuple

from skeintwist.builder import random_braid_closure
from skeintwist.core import kernel
from skeintwist.diagram import Diagram, _faces, parse_pd
from skeintwist.poly import HomflyPoly

DATA = Path(__file__).parent / "data"


def prime_knots() -> List[Tuple[str, Diagram, HomflyPoly]]:
    out = []
    for line in (DATA / "prime_knots.txt").read_text().splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        name, pd, poly = (part.strip() for part in line.split(";"))
        out.append((name, parse_pd(pd), HomflyPoly.parse(poly)))
    return out


def random_diagrams(count: int, max_crossings: int, seed: int, components=None) -> List[Diagram]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        d = random_braid_closure(rng, max_crossings, 4)
        if components is None or d.num_components == components:
            out.append(d)
    return out


def corpus() -> List[Diagram]:
    """The prime knots through seven crossings plus 50 random braid closures."""
    return [d for _, d, _ in prime_knots()] + random_diagrams(50, 10, seed=11)


def _head_slots(P, S):
    heads = set()
    for x, s in enumerate(S):
        heads.add(4 * x)
        heads.add(4 * x + (3 if s > 0 else 1))
    return heads


def _other_slot(P, slot):
    lab = P[slot]
    return next(i for i, q in enumerate(P) if q == lab and i != slot)


def add_kink(d: Diagram, arc: int, sign: int, over_first: bool) -> Diagram:
    """Insert a Reidemeister 1 curl of the given sign on ``arc`` (0-based)."""
    P, S = list(d.P), list(d.S)
    m = len(P) // 2
    heads = _head_slots(P, S)
    slots = [i for i, q in enumerate(P) if q == arc]
    head = next(i for i in slots if i in heads)
    a1, loop, a2 = arc, m, m + 1
    P[head] = a2
    if over_first:
        quad = (loop, loop, a2, a1) if sign > 0 else (loop, a1, a2, loop)
    else:
        quad = (a1, a2, loop, loop) if sign > 0 else (a1, loop, loop, a2)
    return Diagram(P + list(quad), S + [sign], d.loops)


def face_pairs(d: Diagram) -> List[Tuple[int, int]]:
    """Pairs of departure slots whose arcs are distinct and share a face."""
    face = _faces(d.P)
    out = []
    for s in range(len(d.P)):
        for t in range(len(d.P)):
            if s < t and face[s] == face[t] and d.P[s] != d.P[t]:
                out.append((s, t))
    return out


def add_bigon(d: Diagram, sa: int, sb: int, a_over: bool = True) -> Diagram:
    """Reidemeister 2: push the arc leaving slot ``sa`` across the arc
    leaving slot ``sb``; both slots must border the same face."""
    P, S = list(d.P), list(d.S)
    m = len(P) // 2
    heads = _head_slots(P, S)
    a, b = P[sa], P[sb]
    a_along = sa not in heads
    b_along = sb not in heads
    a_mid, a2, b_mid, b2 = m, m + 1, m + 2, m + 3
    P[_other_slot(P, sa)] = a2
    P[_other_slot(P, sb)] = b2
    # Counterclockwise around each new crossing: east, north, west, south.
    ring1 = (b_mid, a_mid, b2, a)
    ring2 = (b, a_mid, b_mid, a2)
    new = []
    for ring, over_path, under_in_along in (
        (ring1, (a, a_mid), b_mid),
        (ring2, (a_mid, a2), b),
    ):
        under_in = under_in_along if b_along else next(
            x for x in (ring[0], ring[2]) if x != under_in_along
        )
        k = ring.index(under_in)
        quad = ring[k:] + ring[:k]
        over_in = over_path[0] if a_along else over_path[1]
        new.append((quad, 1 if quad[3] == over_in else -1))
    for quad, sign in new:
        P.extend(quad)
        S.append(sign)
    if not a_over:
        n = len(S)
        for c in (n - 2, n - 1):
            P, S = kernel.switch(P, S, c)
    return Diagram(P, S, d.loops)


# Outcome of each acceptance criterion, printed by the terminal summary hook.
ACCEPTANCE = {}


def record(criterion: int, title: str, passed: bool, detail: str) -> None:
    ACCEPTANCE[criterion] = (title, passed, detail)
