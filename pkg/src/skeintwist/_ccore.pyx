# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled diagram kernels; same functions and results as ``_purecore``."""

from libc.stdlib cimport malloc, free

IMPLEMENTATION = "cython"


cdef int* _to_c(P) except NULL:
    cdef Py_ssize_t n = len(P), i
    cdef int* out = <int*> malloc((n + 1) * sizeof(int))
    if out == NULL:
        raise MemoryError()
    for i in range(n):
        out[i] = P[i]
    return out


cdef inline int _over_in(int s):
    return 3 if s > 0 else 1


def relabel(P):
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


cdef void _succ(int* P, int* S, int n, int* nxt, int* head):
    cdef int x, b, p, lab
    for x in range(n):
        b = 4 * x
        lab = P[b]
        head[lab] = b
        nxt[lab] = P[b + 2]
        p = _over_in(S[x])
        lab = P[b + p]
        head[lab] = b + p
        nxt[lab] = P[b + (p ^ 2)]


def successor_table(P, S):
    """Return ``(nxt, head)`` as lists."""
    cdef int n = len(S), m = 2 * len(S), i
    cdef int* cP = _to_c(P)
    cdef int* cS = _to_c(S)
    cdef int* nxt = <int*> malloc((m + 1) * sizeof(int))
    cdef int* head = <int*> malloc((m + 1) * sizeof(int))
    try:
        for i in range(m):
            nxt[i] = -1
            head[i] = -1
        _succ(cP, cS, n, nxt, head)
        return [nxt[i] for i in range(m)], [head[i] for i in range(m)]
    finally:
        free(cP)
        free(cS)
        free(nxt)
        free(head)


def remove_crossings(P, S, int loops, remove, pairs):
    """Delete crossings and reconnect their arcs (see ``_purecore``)."""
    rm = set(remove)
    count = {}
    for x in rm:
        for lab in P[4 * x : 4 * x + 4]:
            count[lab] = count.get(lab, 0) + 1
    parent = {lab: lab for lab in count}

    def find(a):
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


def _straight_pairs(P, xs):
    out = []
    for x in xs:
        b = 4 * x
        out.append((P[b], P[b + 2]))
        out.append((P[b + 1], P[b + 3]))
    return out


def switch(P, S, int x):
    """Exchange over and under strands at crossing ``x``."""
    cdef int b = 4 * x
    a0 = P[b]
    a1 = P[b + 1]
    a2 = P[b + 2]
    a3 = P[b + 3]
    new = (a3, a0, a1, a2) if S[x] > 0 else (a1, a2, a3, a0)
    P2 = tuple(P[:b]) + new + tuple(P[b + 4 :])
    S2 = tuple(S[:x]) + (-S[x],) + tuple(S[x + 1 :])
    return P2, S2


def smooth(P, S, int loops, int x):
    """Oriented smoothing of crossing ``x``."""
    cdef int b = 4 * x
    a0 = P[b]
    a1 = P[b + 1]
    a2 = P[b + 2]
    a3 = P[b + 3]
    if S[x] > 0:
        pairs = [(a0, a1), (a3, a2)]
    else:
        pairs = [(a0, a3), (a1, a2)]
    return remove_crossings(P, S, loops, [x], pairs)


cdef int _find_r1(int* P, int n):
    cdef int x, b, i
    for x in range(n):
        b = 4 * x
        for i in range(4):
            if P[b + i] == P[b + ((i + 1) & 3)]:
                return x
    return -1


cdef int _find_r2(int* P, int n, int* first, int* second, int* out_y):
    cdef int x, b, i, p, q, sp, sq, y, j, k
    for x in range(n):
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
                out_y[0] = y
                return x
    return -1


cdef void _occ(int* P, int n4, int* first, int* second):
    cdef int slot, lab
    for slot in range(n4 // 2):
        first[slot] = -1
        second[slot] = -1
    for slot in range(n4):
        lab = P[slot]
        if first[lab] < 0:
            first[lab] = slot
        else:
            second[lab] = slot


def simplify(P, S, int loops):
    """Apply Reidemeister 1 and 2 reductions until none is available."""
    P = tuple(P)
    S = tuple(S)
    cdef int n, x, y
    cdef int* cP
    cdef int* first
    cdef int* second
    while P:
        n = len(S)
        y = -1
        cP = _to_c(P)
        first = <int*> malloc((2 * n + 1) * sizeof(int))
        second = <int*> malloc((2 * n + 1) * sizeof(int))
        try:
            x = _find_r1(cP, n)
            if x < 0:
                _occ(cP, 4 * n, first, second)
                x = _find_r2(cP, n, first, second, &y)
        finally:
            free(cP)
            free(first)
            free(second)
        if x < 0:
            break
        xs = [x] if y < 0 else [x, y]
        P, S, loops = remove_crossings(P, S, loops, xs, _straight_pairs(P, xs))
    return P, S, loops


cdef int _components_c(int* P, int* S, int n, int* comp):
    cdef int m = 2 * n, start, lab, k = 0
    cdef int* nxt = <int*> malloc((m + 1) * sizeof(int))
    cdef int* head = <int*> malloc((m + 1) * sizeof(int))
    _succ(P, S, n, nxt, head)
    for start in range(m):
        comp[start] = -1
    for start in range(m):
        if comp[start] >= 0:
            continue
        lab = start
        while comp[lab] < 0:
            comp[lab] = k
            lab = nxt[lab]
        k += 1
    free(nxt)
    free(head)
    return k


def components(P, S):
    """Label each arc with its component index (ordered by smallest arc)."""
    cdef int n = len(S), m = 2 * len(S), k, i
    cdef int* cP = _to_c(P)
    cdef int* cS = _to_c(S)
    cdef int* comp = <int*> malloc((m + 1) * sizeof(int))
    try:
        k = _components_c(cP, cS, n, comp)
        return [comp[i] for i in range(m)], k
    finally:
        free(cP)
        free(cS)
        free(comp)


def component_starts(P, S, int strategy):
    """Base arcs, one per component, in traversal order."""
    comp, k = components(P, S)
    best = [-1] * k
    if strategy == 0:
        for lab in range(len(comp) - 1, -1, -1):
            best[comp[lab]] = lab
        return sorted(best)
    for lab in range(len(comp)):
        best[comp[lab]] = lab
    return sorted(best, reverse=True)


def bad_crossings(P, S, starts):
    """Crossings first met on the under-strand, in traversal order."""
    cdef int n = len(S), m = 2 * len(S), lab, start, slot, x, i
    cdef int* cP = _to_c(P)
    cdef int* cS = _to_c(S)
    cdef int* nxt = <int*> malloc((m + 1) * sizeof(int))
    cdef int* head = <int*> malloc((m + 1) * sizeof(int))
    cdef char* seen = <char*> malloc(n + 1)
    bad = []
    try:
        _succ(cP, cS, n, nxt, head)
        for i in range(n):
            seen[i] = 0
        for start in starts:
            lab = start
            while True:
                slot = head[lab]
                x = slot >> 2
                if not seen[x]:
                    seen[x] = 1
                    if slot & 3 == 0:
                        bad.append(x)
                lab = nxt[lab]
                if lab == start:
                    break
        return bad
    finally:
        free(cP)
        free(cS)
        free(nxt)
        free(head)
        free(seen)


def pieces(P, S):
    """Split into connected pieces (crossings joined by arcs)."""
    cdef int n = len(S), lab, a, b, x
    if n == 0:
        return []
    cdef int* cP = _to_c(P)
    cdef int* first = <int*> malloc((2 * n + 1) * sizeof(int))
    cdef int* second = <int*> malloc((2 * n + 1) * sizeof(int))
    cdef int* parent = <int*> malloc((n + 1) * sizeof(int))
    try:
        _occ(cP, 4 * n, first, second)
        for x in range(n):
            parent[x] = x
        for lab in range(2 * n):
            a = _find(parent, first[lab] >> 2)
            b = _find(parent, second[lab] >> 2)
            if a != b:
                parent[a] = b
        groups = {}
        for x in range(n):
            groups.setdefault(_find(parent, x), []).append(x)
    finally:
        free(cP)
        free(first)
        free(second)
        free(parent)
    if len(groups) == 1:
        return [(tuple(P), tuple(S))]
    out = []
    for xs in groups.values():
        sub = []
        for x in xs:
            sub.extend(P[4 * x : 4 * x + 4])
        out.append((relabel(sub), tuple(S[x] for x in xs)))
    return out


cdef int _find(int* parent, int a):
    while parent[a] != a:
        parent[a] = parent[parent[a]]
        a = parent[a]
    return a


def split_components(P, S, int loops):
    """Separate a link diagram into its components (see ``_purecore``)."""
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


def canonical_key(P, S, int loops):
    """Relabeling-invariant encoding of a flat diagram."""
    if not S:
        return (loops,)
    codes = []
    for sub_P, sub_S in pieces(P, S):
        codes.append(_piece_code(sub_P, sub_S))
    codes.sort()
    return (loops,) + tuple(codes)


cdef int _cmp_codes(int* a, int* b, int length):
    cdef int i
    for i in range(length):
        if a[i] != b[i]:
            return -1 if a[i] < b[i] else 1
    return 0


def _piece_code(P, S):
    cdef int n = len(S), m = 2 * len(S)
    cdef int L = 5 * n
    cdef int root_x, root, counter, ptr, start, lab, x, b, norder, i
    cdef int* cP = _to_c(P)
    cdef int* cS = _to_c(S)
    cdef int* nxt = <int*> malloc((m + 1) * sizeof(int))
    cdef int* head = <int*> malloc((m + 1) * sizeof(int))
    cdef int* in_over = <int*> malloc((n + 1) * sizeof(int))
    cdef int* newid = <int*> malloc((m + 1) * sizeof(int))
    cdef int* xid = <int*> malloc((n + 1) * sizeof(int))
    cdef int* order = <int*> malloc((n + 1) * sizeof(int))
    cdef int* code = <int*> malloc((L + 1) * sizeof(int))
    cdef int* best = <int*> malloc((L + 1) * sizeof(int))
    cdef bint have_best = False
    try:
        _succ(cP, cS, n, nxt, head)
        for x in range(n):
            in_over[x] = cP[4 * x + _over_in(cS[x])]
        for root_x in range(n):
            root = cP[4 * root_x]
            for i in range(m):
                newid[i] = -1
            for i in range(n):
                xid[i] = -1
            norder = 0
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
                        xid[x] = norder
                        order[norder] = x
                        norder += 1
                    lab = nxt[lab]
                start = -1
                while ptr < norder:
                    x = order[ptr]
                    if newid[cP[4 * x]] < 0:
                        start = cP[4 * x]
                        break
                    if newid[in_over[x]] < 0:
                        start = in_over[x]
                        break
                    ptr += 1
                if start < 0:
                    break
            for i in range(norder):
                x = order[i]
                b = 4 * x
                code[5 * i] = newid[cP[b]]
                code[5 * i + 1] = newid[cP[b + 1]]
                code[5 * i + 2] = newid[cP[b + 2]]
                code[5 * i + 3] = newid[cP[b + 3]]
                code[5 * i + 4] = cS[x]
            if not have_best or _cmp_codes(code, best, 5 * norder) < 0:
                for i in range(5 * norder):
                    best[i] = code[i]
                have_best = True
        return tuple([best[i] for i in range(5 * norder)])
    finally:
        free(cP)
        free(cS)
        free(nxt)
        free(head)
        free(in_over)
        free(newid)
        free(xid)
        free(order)
        free(code)
        free(best)
