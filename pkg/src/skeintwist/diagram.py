"""Oriented link diagrams stored as PD codes.

Convention: ``X(a,b,c,d)`` lists the four arcs at a crossing counterclockwise,
starting with the incoming under-arc, so the under-strand runs ``a -> c``.
The crossing is positive when the over-strand runs ``d -> b`` and negative
when it runs ``b -> d``.  Orientations of strands that pass under somewhere
are forced by this convention; a component that only ever passes over is
oriented along increasing arc labels unless an ``ORIENT(a,b)`` token says
that arc ``b`` follows arc ``a``.  When a component has only two arcs both
join the same pair of crossings, so ``ORIENT(a,b,x)`` also names the
(1-based) ``X`` token where ``a`` hands over to ``b``.

``O(i)`` tokens stand for crossingless circles.  Template files may also
carry one ``TWIST(k; arcs; pattern)`` token marking a twist region: ``arcs``
lists the ``k`` arcs cut by a segment running left to right through the
region and ``pattern`` gives each strand's direction (``u``/``d``) relative
to that segment, ``u`` meaning the strand crosses it from right to left.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .core import kernel

__all__ = [
    "Diagram",
    "TwistRegion",
    "PDParseError",
    "RegionError",
    "parse_pd",
    "parse_pd_records",
    "format_pd",
    "linking_number",
    "split_link",
    "switch_crossing",
    "resolve_crossing",
    "simplify",
    "is_descending_unlink",
    "insert_full_twists",
    "canonical_key",
    "mirror_diagram",
    "full_twist_word",
    "half_twist_word",
    "SCHEDULE_PATTERNS",
]


class PDParseError(ValueError):
    """Malformed PD text or inconsistent crossing data."""


class RegionError(ValueError):
    """A twist region does not match the diagram it is attached to."""


# Sign sequences of the marked half twist that the step formulas expect.
SCHEDULE_PATTERNS: Dict[int, Tuple[int, ...]] = {
    5: (1, -1, 1, -1, -1, 1, -1, 1, -1, -1),
    4: (-1, 1, -1, 1, -1, -1),
    3: (1, -1, -1),
}


@dataclass(frozen=True)
class TwistRegion:
    """A disk crossed by ``k`` parallel strands.

    Attributes:
        k: Number of strands.
        arcs: For a template, the arcs cut by the region's base segment, left
            to right.  For a twisted diagram, the arcs entering the box from
            below.
        pattern: ``+1`` for a strand running up through the box, ``-1`` for
            down.
        n: Number of full twists currently in the box.
        schedule: Crossing indices of the marked half twist (empty if
            ``n == 0``).  Switching all of them removes one full twist.
        crossings: All crossing indices inside the box.
    """

    k: int
    arcs: Tuple[int, ...]
    pattern: Tuple[int, ...]
    n: int = 0
    schedule: Tuple[int, ...] = ()
    crossings: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.k < 2:
            raise RegionError("a twist region needs at least two strands")
        if len(self.arcs) != self.k or len(self.pattern) != self.k:
            raise RegionError("region strand mismatch: expected %d arcs and directions" % self.k)
        if any(p not in (1, -1) for p in self.pattern):
            raise RegionError("pattern entries must be +1 or -1")

    @property
    def pattern_text(self) -> str:
        return "".join("u" if p > 0 else "d" for p in self.pattern)


class Diagram:
    """An immutable oriented link diagram.

    Internally arcs are numbered ``0..2N-1``; ``arc_names`` keeps the labels
    the diagram was parsed with, for messages and round-tripping.
    """

    __slots__ = ("P", "S", "loops", "region", "arc_names", "_comp")

    def __init__(
        self,
        P: Sequence[int],
        S: Sequence[int],
        loops: int = 0,
        region: Optional[TwistRegion] = None,
        arc_names: Optional[Sequence[int]] = None,
        check: bool = True,
    ) -> None:
        self.P = tuple(P)
        self.S = tuple(S)
        self.loops = int(loops)
        self.region = region
        self.arc_names = tuple(arc_names) if arc_names is not None else None
        self._comp = None
        if check:
            self._validate()

    # -- validation ---------------------------------------------------------

    def _validate(self) -> None:
        n = len(self.S)
        if len(self.P) != 4 * n:
            raise PDParseError("crossing data and signs disagree in length")
        if any(s not in (1, -1) for s in self.S):
            raise PDParseError("crossing signs must be +1 or -1")
        if self.loops < 0:
            raise PDParseError("negative number of free circles")
        if n == 0 and self.loops == 0:
            raise PDParseError("empty diagram")
        m = 2 * n
        seen = [0] * m
        for lab in self.P:
            if not 0 <= lab < m:
                raise PDParseError("arc labels must be compact in 0..%d" % (m - 1))
            seen[lab] += 1
        bad = [lab for lab in range(m) if seen[lab] != 2]
        if bad:
            raise PDParseError("arc %d appears %d times" % (bad[0], seen[bad[0]]))
        heads = [0] * m
        for x, s in enumerate(self.S):
            for p in (0, 3) if s > 0 else (0, 1):
                heads[self.P[4 * x + p]] += 1
        if any(h != 1 for h in heads):
            raise PDParseError("crossing signs are inconsistent with strand orientations")
        if self.region is not None:
            for c in self.region.crossings + self.region.schedule:
                if not 0 <= c < n:
                    raise RegionError("region refers to a missing crossing")
            if self.region.n == 0:
                for a in self.region.arcs:
                    if not 0 <= a < m:
                        raise RegionError("region refers to a missing arc")

    # -- basic data ---------------------------------------------------------

    @property
    def num_crossings(self) -> int:
        return len(self.S)

    @property
    def crossings(self) -> List[Tuple[int, int, int, int]]:
        return [tuple(self.P[4 * x : 4 * x + 4]) for x in range(len(self.S))]

    @property
    def signs(self) -> Tuple[int, ...]:
        return self.S

    def writhe(self) -> int:
        return sum(self.S)

    def flat(self):
        return self.P, self.S, self.loops

    def _components(self):
        if self._comp is None:
            comp, k = kernel.components(self.P, self.S)
            self._comp = (tuple(comp), k)
        return self._comp

    @property
    def num_components(self) -> int:
        """Number of link components, free circles included."""
        return self._components()[1] + self.loops

    def arc_component(self, arc: int) -> int:
        return self._components()[0][arc]

    def components(self) -> List[List[int]]:
        """Arc cycles of the components that have crossings, in order.

        Free circles are components ``len(result) .. num_components - 1``.
        """
        comp, k = self._components()
        nxt, _ = kernel.successor_table(self.P, self.S)
        out: List[List[int]] = []
        done = [False] * len(comp)
        for start in range(len(comp)):
            if done[start]:
                continue
            cyc = []
            lab = start
            while not done[lab]:
                done[lab] = True
                cyc.append(lab)
                lab = nxt[lab]
            out.append(cyc)
        return out

    def crossing_components(self, c: int) -> Tuple[int, int]:
        """Components of the (under, over) strands at crossing ``c``."""
        self._check_index(c)
        comp = self._components()[0]
        return comp[self.P[4 * c]], comp[self.P[4 * c + 1]]

    def linking_matrix(self) -> List[List[int]]:
        k = self.num_components
        twice = [[0] * k for _ in range(k)]
        for c, s in enumerate(self.S):
            i, j = self.crossing_components(c)
            if i != j:
                twice[i][j] += s
                twice[j][i] += s
        out = [[0] * k for _ in range(k)]
        for i in range(k):
            for j in range(k):
                if twice[i][j] % 2:
                    raise ValueError("odd crossing count between two components")
                out[i][j] = twice[i][j] // 2
        return out

    def _check_index(self, c: int) -> None:
        if not isinstance(c, int) or not 0 <= c < len(self.S):
            raise IndexError("crossing index %r out of range" % (c,))

    # -- equality and display ----------------------------------------------

    def canonical_key(self) -> tuple:
        return kernel.canonical_key(self.P, self.S, self.loops)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Diagram):
            return NotImplemented
        return (self.P, self.S, self.loops) == (other.P, other.S, other.loops)

    def __hash__(self) -> int:
        return hash((self.P, self.S, self.loops))

    def __repr__(self) -> str:
        return "Diagram(%d crossings, %d components)" % (self.num_crossings, self.num_components)

    def __str__(self) -> str:
        return format_pd(self)


# ---------------------------------------------------------------------------
# Parsing and formatting
# ---------------------------------------------------------------------------

_TOKEN_RE = re.compile(r"([A-Za-z]+)\s*\(([^()]*)\)")


def parse_pd(text: str) -> Diagram:
    """Parse one diagram from PD text.

    Examples:
        >>> d = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)")
        >>> d.num_crossings, d.num_components
        (3, 1)
    """
    body = "\n".join(line.split("#", 1)[0] for line in text.splitlines())
    raw: List[Tuple[int, int, int, int]] = []
    loops = 0
    orient_hints: List[Tuple[int, ...]] = []
    twist_spec = None
    pos = 0
    for m in _TOKEN_RE.finditer(body):
        gap = body[pos : m.start()]
        if gap.strip(" \t\r\n,;"):
            raise PDParseError("unexpected text %r" % gap.strip())
        pos = m.end()
        name = m.group(1).upper()
        args = m.group(2)
        if name == "X":
            vals = _ints(args)
            if len(vals) != 4:
                raise PDParseError("X token needs four arcs: X(%s)" % args)
            raw.append(tuple(vals))
        elif name == "O":
            loops += 1
        elif name == "ORIENT":
            vals = _ints(args)
            if len(vals) not in (2, 3):
                raise PDParseError("ORIENT token needs two arcs and optionally a crossing")
            orient_hints.append(tuple(vals))
        elif name == "TWIST":
            if twist_spec is not None:
                raise PDParseError("only one TWIST region is supported")
            twist_spec = _parse_twist_args(args)
        else:
            raise PDParseError("unknown token %s(...)" % m.group(1))
    if body[pos:].strip(" \t\r\n,;"):
        raise PDParseError("unexpected text %r" % body[pos:].strip())
    if not raw and loops == 0:
        raise PDParseError("empty diagram")
    return _from_raw(raw, loops, orient_hints, twist_spec)


def parse_pd_records(text: str) -> List[Diagram]:
    """Parse several diagrams separated by blank lines."""
    out = []
    block: List[str] = []
    for line in text.splitlines() + [""]:
        if line.strip():
            block.append(line)
        elif block:
            content = "\n".join(block)
            if any(ln.split("#", 1)[0].strip() for ln in block):
                out.append(parse_pd(content))
            block = []
    return out


def _ints(args: str) -> List[int]:
    try:
        return [int(t) for t in re.split(r"[,\s]+", args.strip()) if t]
    except ValueError as exc:
        raise PDParseError("non-integer arc label in %r" % args) from exc


def _parse_twist_args(args: str):
    parts = [p.strip() for p in args.split(";")]
    if len(parts) != 3:
        raise PDParseError("TWIST needs three ';'-separated fields")
    try:
        k = int(parts[0])
    except ValueError as exc:
        raise PDParseError("bad strand count in TWIST") from exc
    arcs = _ints(parts[1])
    pat_txt = re.sub(r"[\s,]", "", parts[2])
    pattern = []
    for ch in pat_txt:
        if ch in "u+U":
            pattern.append(1)
        elif ch in "d-D":
            pattern.append(-1)
        else:
            raise PDParseError("bad pattern character %r" % ch)
    if len(arcs) != k or len(pattern) != k:
        raise RegionError("region strand mismatch: TWIST lists %d arcs for k=%d" % (len(arcs), k))
    return k, arcs, pattern


def _from_raw(raw, loops, orient_hints, twist_spec) -> Diagram:
    names: List[int] = []
    index: Dict[int, int] = {}
    for quad in raw:
        for lab in quad:
            if lab not in index:
                index[lab] = len(names)
                names.append(lab)
    counts = [0] * len(names)
    for quad in raw:
        for lab in quad:
            counts[index[lab]] += 1
    for i, c in enumerate(counts):
        if c != 2:
            raise PDParseError("arc %d appears %d times" % (names[i], c))
    P = [index[lab] for quad in raw for lab in quad]
    m = len(names)
    first = [-1] * m
    second = [-1] * m
    for slot, lab in enumerate(P):
        if first[lab] < 0:
            first[lab] = slot
        else:
            second[lab] = slot

    def other(slot: int) -> int:
        lab = P[slot]
        return second[lab] if first[lab] == slot else first[lab]

    hint_next: Dict[int, Tuple[int, int]] = {}
    for hint in orient_hints:
        a, b = hint[0], hint[1]
        if a not in index or b not in index:
            raise PDParseError("ORIENT refers to an unknown arc")
        x = hint[2] - 1 if len(hint) == 3 else -1
        if len(hint) == 3 and not 0 <= x < len(raw):
            raise PDParseError("ORIENT refers to a missing crossing")
        hint_next[index[a]] = (index[b], x)

    n = len(raw)
    in_slot = [False] * (4 * n)
    visited = [False] * (4 * n)
    for start in range(4 * n):
        if visited[start]:
            continue
        # Walk one component; record the entry slots in walking order.
        entries = []
        arcs_walk = []
        slot = start
        while not visited[slot]:
            visited[slot] = True
            entries.append(slot)
            out_slot = (slot & ~3) | ((slot & 3) ^ 2)
            visited[out_slot] = True
            lab = P[out_slot]
            arcs_walk.append(lab)
            slot = other(out_slot)
        votes = set()
        for s in entries:
            if s & 3 == 0:
                votes.add(1)
            elif s & 3 == 2:
                votes.add(-1)
        if len(votes) > 1:
            raise PDParseError("unorientable crossing data: a component passes under both ways")
        if votes:
            forward = votes.pop() == 1
        else:
            forward = _over_only_direction(arcs_walk, [P[s] for s in entries], entries, names, hint_next)
        for s in entries:
            if forward:
                in_slot[s] = True
            else:
                in_slot[(s & ~3) | ((s & 3) ^ 2)] = True
    S = []
    for x in range(n):
        if in_slot[4 * x + 3]:
            S.append(1)
        elif in_slot[4 * x + 1]:
            S.append(-1)
        else:  # pragma: no cover - excluded by the walk above
            raise PDParseError("unorientable crossing data at crossing %d" % x)
    region = None
    if twist_spec is not None:
        k, arcs, pattern = twist_spec
        try:
            arcs_c = tuple(index[a] for a in arcs)
        except KeyError as exc:
            raise RegionError("TWIST names an arc that is not in the diagram") from exc
        region = TwistRegion(k=k, arcs=arcs_c, pattern=tuple(pattern))
    d = Diagram(P, S, loops, region=region, arc_names=names)
    if region is not None:
        _region_faces(d, region)  # validates the region
    return d


def _over_only_direction(
    arcs_walk: List[int],
    arcs_in: List[int],
    entries: List[int],
    names: List[int],
    hint_next: Dict[int, Tuple[int, int]],
) -> bool:
    # The walk enters crossing entries[i] // 4 on arcs_in[i] and leaves on arcs_walk[i].
    m = len(arcs_walk)
    for lab in arcs_walk:
        if lab not in hint_next:
            continue
        b, x = hint_next[lab]
        for i in range(m):
            if x >= 0 and entries[i] // 4 != x:
                continue
            if (arcs_in[i], arcs_walk[i]) == (lab, b):
                return True
            if (arcs_in[i], arcs_walk[i]) == (b, lab):
                return False
        raise PDParseError("ORIENT hint does not match consecutive arcs")
    up = down = 0
    for i in range(m):
        a, b = names[arcs_walk[i]], names[arcs_walk[(i + 1) % m]]
        if b == a + 1:
            up += 1
        elif a == b + 1:
            down += 1
    return up >= down


def format_pd(d: Diagram, names: bool = False) -> str:
    """Render as PD text; arcs are renumbered from 1 unless ``names``."""
    lab = (lambda a: d.arc_names[a]) if (names and d.arc_names) else (lambda a: a + 1)
    parts = ["X(%d,%d,%d,%d)" % tuple(lab(a) for a in q) for q in d.crossings]
    parts.extend("O(%d)" % (i + 1) for i in range(d.loops))
    hints = _needed_orient_hints(d, lab)
    parts.extend("ORIENT(%s)" % ",".join(map(str, h)) for h in hints)
    if d.region is not None and d.region.n == 0:
        r = d.region
        parts.insert(
            0,
            "TWIST(%d; %s; %s)" % (r.k, ",".join(str(lab(a)) for a in r.arcs), r.pattern_text),
        )
    return " ".join(parts)


def _needed_orient_hints(d: Diagram, lab) -> List[Tuple[int, ...]]:
    out: List[Tuple[int, ...]] = []
    nxt, head = kernel.successor_table(d.P, d.S)
    for cyc in d.components():
        under = any(d.P[4 * x] in cyc for x in range(d.num_crossings))
        if not under:
            hint: Tuple[int, ...] = (lab(cyc[0]), lab(nxt[cyc[0]]))
            if len(cyc) <= 2:
                hint += (head[cyc[0]] // 4 + 1,)
            out.append(hint)
    return out


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------


def linking_number(d: Diagram, i: int, j: int) -> int:
    """Half the signed count of crossings between components ``i`` and ``j``."""
    k = d.num_components
    if not (0 <= i < k and 0 <= j < k):
        raise IndexError("unknown component index")
    if i == j:
        raise ValueError("linking number needs two distinct components")
    return d.linking_matrix()[i][j]


def split_link(d: Diagram) -> List[Diagram]:
    """One diagram per component, obtained by deleting every crossing
    between different components.  The order of the result is unspecified.
    """
    parts, _, free = kernel.split_components(d.P, d.S, d.loops)
    out = [Diagram(P, S, 0) for P, S in parts]
    out.extend(Diagram([], [], 1) for _ in range(free))
    return out


def switch_crossing(d: Diagram, c: int) -> Diagram:
    """Exchange the over- and under-strand at crossing ``c``."""
    d._check_index(c)
    P, S = kernel.switch(d.P, d.S, c)
    out = Diagram(P, S, d.loops, region=d.region, check=False)
    out._comp = d._comp
    return out


def switch_crossings(d: Diagram, cs: Iterable[int]) -> Diagram:
    for c in cs:
        d = switch_crossing(d, c)
    return d


def resolve_crossing(d: Diagram, c: int) -> Tuple[Diagram, int]:
    """Oriented smoothing at crossing ``c``.

    Returns the new diagram and ``delta``: 0 when both strands at ``c``
    belong to the same component, 1 otherwise.
    """
    d._check_index(c)
    i, j = d.crossing_components(c)
    delta = 0 if i == j else 1
    P, S, loops = kernel.smooth(d.P, d.S, d.loops, c)
    return Diagram(P, S, loops, check=False), delta


def simplify(d: Diagram) -> Diagram:
    """Remove Reidemeister 1 and 2 configurations until none is left."""
    P, S, loops = kernel.simplify(d.P, d.S, d.loops)
    if len(S) == len(d.S):
        return d
    return Diagram(P, S, loops, check=False)


def is_descending_unlink(d: Diagram, order: Optional[Sequence[int]] = None) -> bool:
    """True iff the traversal from the given base arcs meets every crossing
    over-first.  ``order`` lists one base arc per component, in the order
    the components are walked; by default each component starts at its
    smallest arc."""
    if order is None:
        order = kernel.component_starts(d.P, d.S, 0)
    _check_order(d, order)
    return not kernel.bad_crossings(d.P, d.S, list(order))


def _check_order(d: Diagram, order: Sequence[int]) -> None:
    comp, k = d._components()
    got = sorted(comp[a] for a in order)
    if got != list(range(k)):
        raise ValueError("order must give exactly one base arc per component")


def canonical_key(d: Diagram) -> tuple:
    return d.canonical_key()


def mirror_diagram(d: Diagram) -> Diagram:
    """Switch every crossing."""
    P, S = d.P, d.S
    for c in range(len(S)):
        P, S = kernel.switch(P, S, c)
    region = d.region
    if region is not None:
        region = replace(region, n=-region.n)
    out = Diagram(P, S, d.loops, region=region, check=False)
    out._comp = d._comp
    return out


# ---------------------------------------------------------------------------
# Twist regions
# ---------------------------------------------------------------------------


def half_twist_word(k: int) -> List[int]:
    """A reduced word for the half twist on ``k`` strands (0-based generators)."""
    word = []
    for top in range(k - 1, 0, -1):
        word.extend(range(top))
    return word


def full_twist_word(k: int) -> List[Tuple[int, int]]:
    """One positive full twist written as ``w * reverse(w)``.

    The first half ``w`` is the marked half twist: switching its crossings
    turns it into the inverse of ``reverse(w)``, which then cancels by
    Reidemeister 2 moves alone.
    """
    w = half_twist_word(k)
    return [(i, 1) for i in w] + [(i, 1) for i in reversed(w)]


def _faces(P: Sequence[int]) -> List[int]:
    """Face index of each departure slot; the face lies to the left."""
    first, second = [-1] * (len(P) // 2), [-1] * (len(P) // 2)
    for slot, lab in enumerate(P):
        if first[lab] < 0:
            first[lab] = slot
        else:
            second[lab] = slot
    face = [-1] * len(P)
    f = 0
    for start in range(len(P)):
        if face[start] >= 0:
            continue
        slot = start
        while face[slot] < 0:
            face[slot] = f
            lab = P[slot]
            arrive = second[lab] if first[lab] == slot else first[lab]
            slot = (arrive & ~3) | (((arrive & 3) - 1) & 3)
        f += 1
    return face


def _region_faces(d: Diagram, region: TwistRegion) -> List[Tuple[int, int]]:
    """Check that the region's arcs are consecutive along a segment and
    return ``(bottom_slot, top_slot)`` for each strand."""
    if len(set(region.arcs)) != region.k:
        raise RegionError("region strand mismatch: an arc is listed twice")
    face = _faces(d.P)
    _, head = kernel.successor_table(d.P, d.S)
    tail = [-1] * (2 * d.num_crossings)
    for slot, lab in enumerate(d.P):
        if head[lab] != slot:
            tail[lab] = slot
    ends = []
    prev_after = None
    for arc, up in zip(region.arcs, region.pattern):
        left, right = face[tail[arc]], face[head[arc]]
        before, after = (left, right) if up > 0 else (right, left)
        if prev_after is not None and before != prev_after:
            raise RegionError(
                "region strand mismatch: arcs are not consecutive with the given directions"
            )
        prev_after = after
        ends.append((tail[arc], head[arc]) if up > 0 else (head[arc], tail[arc]))
    return ends


def _braid_crossing(i: int, e: int, labels: List[int], orient: List[int], new: int):
    """PD tuple and sign for generator ``sigma_i^e`` acting on positions
    ``i, i+1``; returns ``(tuple, sign, NW, NE)``."""
    sw, se = labels[i], labels[i + 1]
    nw, ne = new, new + 1
    if e > 0:  # bottom-left strand passes over
        if orient[i + 1] > 0:
            quad = (se, ne, nw, sw)
        else:
            quad = (nw, sw, se, ne)
        over_in = sw if orient[i] > 0 else ne
    else:
        if orient[i] > 0:
            quad = (sw, se, ne, nw)
        else:
            quad = (ne, nw, sw, se)
        over_in = se if orient[i + 1] > 0 else nw
    sign = 1 if over_in == quad[3] else -1
    return quad, sign, nw, ne


def _order_schedule(cs: List[int], signs: List[int], k: int) -> Tuple[int, ...]:
    target = SCHEDULE_PATTERNS.get(k)
    if target is None or sorted(target) != sorted(signs):
        return tuple(cs)
    pos = [c for c, s in zip(cs, signs) if s > 0]
    neg = [c for c, s in zip(cs, signs) if s < 0]
    out = []
    for t in target:
        out.append(pos.pop(0) if t > 0 else neg.pop(0))
    return tuple(out)


def insert_full_twists(template: Diagram, n: int) -> Diagram:
    """Replace the template's marked region by ``|n|`` full twists.

    Positive ``n`` gives twists whose crossings are positive between
    parallel strands.  For ``n >= 1`` the returned region records the marked
    half twist of the first full twist as its schedule, ordered so that the
    crossing signs follow :data:`SCHEDULE_PATTERNS` whenever the strand
    directions allow it.

    Raises:
        RegionError: if the template has no region, or its arcs do not form
            a consecutive family of strands with the given directions.
    """
    region = template.region
    if region is None:
        raise RegionError("template has no marked twist region")
    if region.n != 0:
        raise RegionError("twists can only be inserted into an untwisted template")
    ends = _region_faces(template, region)
    k = region.k
    unit = full_twist_word(k)
    marked = len(half_twist_word(k))
    if n >= 0:
        word = unit * n
    else:
        inv = [(i, -e) for (i, e) in reversed(unit)]
        word = inv * (-n)
    P = list(template.P)
    S = list(template.S)
    labels = list(region.arcs)
    orient = list(region.pattern)
    new = 2 * template.num_crossings
    base = template.num_crossings
    created = []
    for i, e in word:
        quad, sign, nw, ne = _braid_crossing(i, e, labels, orient, new)
        new += 2
        P.extend(quad)
        S.append(sign)
        created.append(base + len(created))
        labels[i], labels[i + 1] = nw, ne
        orient[i], orient[i + 1] = orient[i + 1], orient[i]
    if orient != list(region.pattern):  # pragma: no cover - full twists are pure braids
        raise RegionError("twist word is not a pure braid")
    if word:
        for pos, (_, top_slot) in enumerate(ends):
            P[top_slot] = labels[pos]
        # Labels created last were never used twice; compact them.
        P = list(kernel.relabel(P))
    schedule: Tuple[int, ...] = ()
    if n >= 1:
        cs = created[:marked]
        schedule = _order_schedule(cs, [S[c] for c in cs], k)
    bottom_arcs = tuple(P[b] for b, _ in ends)
    new_region = TwistRegion(
        k=k,
        arcs=bottom_arcs,
        pattern=region.pattern,
        n=n,
        schedule=schedule,
        crossings=tuple(created),
    )
    return Diagram(P, S, template.loops, region=new_region)
