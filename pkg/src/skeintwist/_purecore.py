"""Pure-Python diagram kernels.

A diagram is handled here in flat form: ``P`` is a tuple of ``4*N`` arc
labels (crossing ``x`` occupies ``P[4x:4x+4]`` in PD order), ``S`` is a tuple
of ``N`` crossing signs and ``loops`` counts crossingless circles.  Every
function returning a diagram returns labels compacted to ``0..2N-1``.

The compiled module ``_ccore`` implements the same functions with the same
signatures; :mod:`skeintwist.core` picks one at import time.
"""

from __future__ import annotations

from typing import List, Sequence, Tuple

Flat = Tuple[Tuple[int, ...], Tuple[int, ...], int]

IMPLEMENTATION = "python"


def relabel(P: Sequence[int]) -> Tuple[int, ...]:
    """Compact labels to ``0..M-1`` in order of first appearance."""
    mapping = {}
    out = []
    for lab in P:
        new = mapping.get(lab)
        if new is None:
            new = len(mapping)
            mapping[lab] = new
        out.append(new)
    return tuple(out)


def _occurrences(P: Sequence[int]) -> Tuple[List[int], List[int]]:
    m = len(P) // 2
    first = [-1] * m
    second = [-1] * m
    for slot, lab in enumerate(P):
        if first[lab] < 0:
            first[lab] = slot
        else:
            second[lab] = slot
    return first, second


def _in_positions(s: int) -> Tuple[int, int]:
    # Under strand enters at 0; over strand enters at 3 (positive) or 1.
    return (0, 3) if s > 0 else (0, 1)


def successor_table(P: Sequence[int], S: Sequence[int]) -> Tuple[List[int], List[int]]:
    """Return ``(nxt, head)``: the arc following each arc and the slot
    (``4*x + position``) where each arc ends."""
    m = len(P) // 2
    head = [-1] * m
    nxt = [-1] * m
    for x, s in enumerate(S):
        base = 4 * x
        for p in _in_positions(s):
            lab = P[base + p]
            head[lab] = base + p
            nxt[lab] = P[base + (p ^ 2)]
    return nxt, head


def remove_crossings(
    P: Sequence[int],
    S: Sequence[int],
    loops: int,
    remove: Sequence[int],
    pairs: Sequence[Tuple[int, int]],
) -> Flat:
    """Delete crossings and reconnect their arcs.

    ``pairs`` lists labels that become joined.  Labels seen twice among the
    removed crossings vanish; each joined class with no surviving endpoint
    becomes a free circle, and each class with two surviving endpoints is
    merged into a single arc.
    """
    rm = set(remove)
    count = {}
    for x in rm:
        for lab in P[4 * x : 4 * x + 4]:
            count[lab] = count.get(lab, 0) + 1
    parent = {lab: lab for lab in count}

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a, b in pairs:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    classes = {}
    for lab, c in count.items():
        classes.setdefault(find(lab), []).append(lab if c == 1 else None)
    rename = {}
    for members in classes.values():
        ext = [lab for lab in members if lab is not None]
        if not ext:
            loops += 1
        elif len(ext) == 2:
            rename[ext[1]] = ext[0]
        else:
            raise ValueError("inconsistent reconnection while removing crossings")
    newP = []
    newS = []
    for x, s in enumerate(S):
        if x in rm:
            continue
        for lab in P[4 * x : 4 * x + 4]:
            newP.append(rename.get(lab, lab))
        newS.append(s)
    return relabel(newP), tuple(newS), loops


def _straight_pairs(P: Sequence[int], xs: Sequence[int]) -> List[Tuple[int, int]]:
    out = []
    for x in xs:
        b = 4 * x
        out.append((P[b], P[b + 2]))
        out.append((P[b + 1], P[b + 3]))
    return out


def switch(P: Sequence[int], S: Sequence[int], x: int) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Exchange over and under strands at crossing ``x``."""
    b = 4 * x
    a0, a1, a2, a3 = P[b : b + 4]
    new = (a3, a0, a1, a2) if S[x] > 0 else (a1, a2, a3, a0)
    P2 = tuple(P[:b]) + new + tuple(P[b + 4 :])
    S2 = tuple(S[:x]) + (-S[x],) + tuple(S[x + 1 :])
    return P2, S2


def smooth(P: Sequence[int], S: Sequence[int], loops: int, x: int) -> Flat:
    """Oriented smoothing of crossing ``x``."""
    b = 4 * x
    a0, a1, a2, a3 = P[b : b + 4]
    if S[x] > 0:
        pairs = [(a0, a1), (a3, a2)]
    else:
        pairs = [(a0, a3), (a1, a2)]
    return remove_crossings(P, S, loops, [x], pairs)


def _find_r1(P: Sequence[int]) -> int:
    for x in range(len(P) // 4):
        b = 4 * x
        for i in range(4):
            if P[b + i] == P[b + ((i + 1) & 3)]:
                return x
    return -1


def _find_r2(P: Sequence[int], first: List[int], second: List[int]) -> Tuple[int, int]:
    for x in range(len(P) // 4):
        b = 4 * x
        for i in range(4):
            p = P[b + i]
            q = P[b + ((i + 1) & 3)]
            if p == q:
                continue
            sp = second[p] if first[p] == b + i else first[p]
            y = sp >> 2
            if y == x:
                continue
            j = sp & 3
            if (i & 1) != (j & 1):
                continue
            sq = second[q] if first[q] == b + ((i + 1) & 3) else first[q]
            if sq >> 2 != y:
                continue
            k = sq & 3
            if k == ((j + 1) & 3) or k == ((j - 1) & 3):
                return x, y
    return -1, -1


def simplify(P: Sequence[int], S: Sequence[int], loops: int) -> Flat:
    """Apply Reidemeister 1 and 2 reductions until none is available."""
    P = tuple(P)
    S = tuple(S)
    while P:
        x = _find_r1(P)
        if x >= 0:
            P, S, loops = remove_crossings(P, S, loops, [x], _straight_pairs(P, [x]))
            continue
        first, second = _occurrences(P)
        x, y = _find_r2(P, first, second)
        if x >= 0:
            P, S, loops = remove_crossings(P, S, loops, [x, y], _straight_pairs(P, [x, y]))
            continue
        break
    return P, S, loops


def components(P: Sequence[int], S: Sequence[int]) -> Tuple[List[int], int]:
    """Label each arc with its component index (ordered by smallest arc)."""
    nxt, _ = successor_table(P, S)
    m = len(nxt)
    comp = [-1] * m
    k = 0
    for start in range(m):
        if comp[start] >= 0:
            continue
        lab = start
        while comp[lab] < 0:
            comp[lab] = k
            lab = nxt[lab]
        k += 1
    return comp, k


def component_starts(P: Sequence[int], S: Sequence[int], strategy: int) -> List[int]:
    """Base arcs, one per component, in traversal order.

    Strategy 0 starts each component at its smallest arc and orders
    components by that arc; strategy 1 uses largest arcs in decreasing
    order.
    """
    comp, k = components(P, S)
    best = [-1] * k
    if strategy == 0:
        for lab in range(len(comp) - 1, -1, -1):
            best[comp[lab]] = lab
        return sorted(best)
    for lab in range(len(comp)):
        best[comp[lab]] = lab
    return sorted(best, reverse=True)


def bad_crossings(P: Sequence[int], S: Sequence[int], starts: Sequence[int]) -> List[int]:
    """Crossings first met on the under-strand, in traversal order."""
    nxt, head = successor_table(P, S)
    seen = [False] * len(S)
    bad = []
    for start in starts:
        lab = start
        while True:
            slot = head[lab]
            x = slot >> 2
            if not seen[x]:
                seen[x] = True
                if slot & 3 == 0:
                    bad.append(x)
            lab = nxt[lab]
            if lab == start:
                break
    return bad


def pieces(P: Sequence[int], S: Sequence[int]) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """Split into connected pieces (crossings joined by arcs)."""
    n = len(S)
    if n == 0:
        return []
    first, second = _occurrences(P)
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for lab in range(len(first)):
        ra, rb = find(first[lab] >> 2), find(second[lab] >> 2)
        if ra != rb:
            parent[ra] = rb
    groups = {}
    for x in range(n):
        groups.setdefault(find(x), []).append(x)
    if len(groups) == 1:
        return [(tuple(P), tuple(S))]
    out = []
    for xs in groups.values():
        sub = []
        for x in xs:
            sub.extend(P[4 * x : 4 * x + 4])
        out.append((relabel(sub), tuple(S[x] for x in xs)))
    return out


def split_components(P: Sequence[int], S: Sequence[int], loops: int):
    """Separate a link diagram into its components.

    Returns ``(parts, signed_inter, free)``: per-component flat diagrams
    (components without self-crossings are counted in ``free``, together
    with the original free circles) and the signed count of crossings
    between distinct components.
    """
    comp, k = components(P, S)
    inter = []
    signed = 0
    for x, s in enumerate(S):
        if comp[P[4 * x]] != comp[P[4 * x + 1]]:
            inter.append(x)
            signed += s
    P2, S2, loops2 = remove_crossings(P, S, loops, inter, _straight_pairs(P, inter))
    parts = pieces(P2, S2)
    return parts, signed, loops2


def canonical_key(P: Sequence[int], S: Sequence[int], loops: int) -> tuple:
    """Relabeling-invariant encoding of a flat diagram."""
    if not S:
        return (loops,)
    codes = []
    for sub_P, sub_S in pieces(P, S):
        codes.append(_piece_code(sub_P, sub_S))
    codes.sort()
    return (loops,) + tuple(codes)


def _piece_code(P: Sequence[int], S: Sequence[int]) -> tuple:
    n = len(S)
    m = 2 * n
    nxt, head = successor_table(P, S)
    in_over = [P[4 * x + (3 if S[x] > 0 else 1)] for x in range(n)]
    best = None
    for root_x in range(n):
        root = P[4 * root_x]
        newid = [-1] * m
        xid = [-1] * n
        order = []
        counter = 0
        ptr = 0
        start = root
        while True:
            lab = start
            while newid[lab] < 0:
                newid[lab] = counter
                counter += 1
                x = head[lab] >> 2
                if xid[x] < 0:
                    xid[x] = len(order)
                    order.append(x)
                lab = nxt[lab]
            start = -1
            while ptr < len(order):
                x = order[ptr]
                if newid[P[4 * x]] < 0:
                    start = P[4 * x]
                    break
                if newid[in_over[x]] < 0:
                    start = in_over[x]
                    break
                ptr += 1
            if start < 0:
                break
        code = []
        for x in order:
            b = 4 * x
            code.extend((newid[P[b]], newid[P[b + 1]], newid[P[b + 2]], newid[P[b + 3]], S[x]))
        code = tuple(code)
        if best is None or code < best:
            best = code
    return best
