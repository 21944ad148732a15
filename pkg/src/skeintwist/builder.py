"""Build planar diagrams from Morse presentations.

A presentation is read bottom to top as a list of events acting on a row of
strand positions:

* ``("cup", i)`` opens two new strands at positions ``i, i+1``;
* ``("cap", i)`` closes the strands at ``i, i+1``;
* ``("x", i, e)`` is the braid generator ``sigma_i^e`` with ``e = +1`` when
  the strand coming from the bottom left passes over;
* ``("twist", i, k)`` marks a twist region on positions ``i .. i+k-1``.

The row must be empty at both ends.  Each component is oriented so that the
strand through the lowest corner of its first crossing points upward; the
``reverse`` argument flips chosen components (numbered by first crossing).
"""

from __future__ import annotations

import random
from typing import List, Optional, Sequence, Set, Tuple

from .diagram import Diagram, RegionError, TwistRegion

__all__ = ["from_morse", "braid_closure", "random_braid_closure", "plat_closure"]

# Corner indices of a crossing, in counterclockwise order.
SE, NE, NW, SW = 0, 1, 2, 3
_OPP = {SW: NE, NE: SW, SE: NW, NW: SE}


def from_morse(events: Sequence[tuple], reverse: Optional[Set[int]] = None) -> Diagram:
    reverse = reverse or set()
    # Segments join at cups and caps; they end at crossing corners.
    seg_bottom: List[tuple] = []
    seg_top: List[tuple] = []
    row: List[int] = []
    corners: List[List[int]] = []  # per crossing: segment at each corner
    over_sw: List[bool] = []
    region_spec = None

    def new_seg(bottom) -> int:
        seg_bottom.append(bottom)
        seg_top.append(None)
        return len(seg_bottom) - 1

    for ev in events:
        kind = ev[0]
        if kind == "cup":
            i = ev[1]
            if not 0 <= i <= len(row):
                raise ValueError("cup position out of range")
            a = new_seg(None)
            b = new_seg(None)
            seg_bottom[a] = ("cup", b)
            seg_bottom[b] = ("cup", a)
            row[i:i] = [a, b]
        elif kind == "cap":
            i = ev[1]
            if not 0 <= i < len(row) - 1:
                raise ValueError("cap position out of range")
            a, b = row[i], row[i + 1]
            seg_top[a] = ("cap", b)
            seg_top[b] = ("cap", a)
            del row[i : i + 2]
        elif kind == "x":
            i, e = ev[1], ev[2]
            if not 0 <= i < len(row) - 1:
                raise ValueError("crossing position out of range")
            x = len(corners)
            a, b = row[i], row[i + 1]
            seg_top[a] = ("x", x, SW)
            seg_top[b] = ("x", x, SE)
            c = new_seg(("x", x, NW))
            d = new_seg(("x", x, NE))
            cs = [-1] * 4
            cs[SW], cs[SE], cs[NW], cs[NE] = a, b, c, d
            corners.append(cs)
            over_sw.append(e > 0)
            row[i], row[i + 1] = c, d
        elif kind == "twist":
            i, k = ev[1], ev[2]
            if not (k >= 2 and 0 <= i and i + k <= len(row)):
                raise RegionError("twist marker out of range")
            region_spec = list(row[i : i + k])
        else:
            raise ValueError("unknown event %r" % (kind,))
    if row:
        raise ValueError("presentation leaves %d open strands" % len(row))

    # Arcs: classes of segments joined by cups and caps.
    nseg = len(seg_bottom)
    parent = list(range(nseg))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for s in range(nseg):
        for end in (seg_bottom[s], seg_top[s]):
            if end[0] in ("cup", "cap"):
                ra, rb = find(s), find(end[1])
                if ra != rb:
                    parent[ra] = rb
    touched = {find(s) for cs in corners for s in cs}
    loops = len({find(s) for s in range(nseg)} - touched)

    n = len(corners)
    arc_of = {}
    lab = [[0] * 4 for _ in range(n)]
    for x, cs in enumerate(corners):
        for c in range(4):
            r = find(cs[c])
            if r not in arc_of:
                arc_of[r] = len(arc_of)
            lab[x][c] = arc_of[r]
    occ = {}
    for x in range(n):
        for c in range(4):
            occ.setdefault(lab[x][c], []).append((x, c))

    def other(x: int, c: int) -> Tuple[int, int]:
        a, b = occ[lab[x][c]]
        return b if a == (x, c) else a

    # Orient components: walk from an entry corner.
    entry = [[False] * 4 for _ in range(n)]
    done = [[False] * 4 for _ in range(n)]
    comp_index = 0
    for x in range(n):
        for c0 in (SW, SE):
            if done[x][c0]:
                continue
            forward = comp_index not in reverse
            comp_index += 1
            start = (x, c0) if forward else (x, _OPP[c0])
            cx, cc = start
            while not done[cx][cc]:
                done[cx][cc] = True
                done[cx][_OPP[cc]] = True
                entry[cx][cc] = True
                cx, cc = other(cx, _OPP[cc])
    P: List[int] = []
    S: List[int] = []
    ccw = [SE, NE, NW, SW]
    for x in range(n):
        under = (SE, NW) if over_sw[x] else (SW, NE)
        u_in = under[0] if entry[x][under[0]] else under[1]
        k0 = ccw.index(u_in)
        quad = [lab[x][ccw[(k0 + j) % 4]] for j in range(4)]
        over = (SW, NE) if over_sw[x] else (SE, NW)
        o_in = over[0] if entry[x][over[0]] else over[1]
        S.append(1 if (ccw.index(o_in) - k0) % 4 == 3 else -1)
        P.extend(quad)

    region = None
    if region_spec is not None:
        arcs = []
        pattern = []
        for s in region_spec:
            r = find(s)
            if r not in arc_of:
                raise RegionError("twist region strand has no crossings")
            arcs.append(arc_of[r])
            pattern.append(_segment_direction(s, seg_bottom, seg_top, entry))
        region = TwistRegion(k=len(arcs), arcs=tuple(arcs), pattern=tuple(pattern))
    d = Diagram(P, S, loops, region=region)
    if region is not None:
        from .diagram import _region_faces

        _region_faces(d, region)
    return d


def _segment_direction(s: int, seg_bottom, seg_top, entry) -> int:
    """+1 if segment ``s`` is traversed upward by the orientation."""
    going_up = True
    cur = s
    while True:
        end = seg_top[cur] if going_up else seg_bottom[cur]
        if end[0] == "x":
            _, x, c = end
            # Arriving at an entry corner means the walk follows the
            # orientation.
            # The walk began by moving up through ``s``.
            return 1 if entry[x][c] else -1
        cur = end[1]
        going_up = not going_up


def braid_closure(word: Sequence[int], strands: int, twist: Optional[Tuple[int, int]] = None) -> Diagram:
    """Closure of a braid word (nonzero integers, ``+i`` for ``sigma_i``).

    ``twist=(i, k)`` marks a twist region on braid positions ``i..i+k-1``
    below the word.
    """
    events: List[tuple] = []
    for j in range(strands):
        events.append(("cup", j))
    if twist is not None:
        events.append(("twist", strands + twist[0], twist[1]))
    for g in word:
        if g == 0 or abs(g) >= strands:
            raise ValueError("generator %d out of range for %d strands" % (g, strands))
        events.append(("x", strands + abs(g) - 1, 1 if g > 0 else -1))
    for j in range(strands - 1, -1, -1):
        events.append(("cap", j))
    return from_morse(events)


def plat_closure(word: Sequence[int], pairs: int, twist: Optional[Tuple[int, int]] = None,
                 reverse: Optional[Set[int]] = None) -> Diagram:
    """Plat closure of a braid on ``2*pairs`` strands (cups and caps join
    neighbouring positions)."""
    events: List[tuple] = [("cup", 2 * j) for j in range(pairs)]
    if twist is not None:
        events.append(("twist", twist[0], twist[1]))
    for g in word:
        events.append(("x", abs(g) - 1, 1 if g > 0 else -1))
    events.extend(("cap", 0) for _ in range(pairs))
    return from_morse(events, reverse=reverse)


def random_braid_closure(rng: random.Random, max_crossings: int, max_strands: int = 4) -> Diagram:
    strands = rng.randint(2, max_strands)
    length = rng.randint(1, max_crossings)
    word = [rng.choice([1, -1]) * rng.randint(1, strands - 1) for _ in range(length)]
    return braid_closure(word, strands)
