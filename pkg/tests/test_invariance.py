"""Mirror and Reidemeister invariance of H and F on the test corpus."""

import random

import pytest
from hypothesis import given, strategies as st

from helpers import add_bigon, add_kink, corpus, face_pairs
from skeintwist.builder import braid_closure
from skeintwist.diagram import mirror_diagram
from skeintwist.poly import LaurentPoly
from skeintwist.skein import SkeinEngine

CORPUS = corpus()


@pytest.fixture(scope="module")
def eng():
    return SkeinEngine(max_crossings=200)


@pytest.mark.parametrize("index", range(len(CORPUS)))
def test_mirror(eng, index):
    d = CORPUS[index]
    m = mirror_diagram(d)
    assert eng.homfly(m) == eng.homfly(d).mirror()
    # F carries the normalization (v^-1 z)^(k-1), which picks up a factor
    # (-v^-2)^(k-1) under v -> -v^-1; for knots F just has v -> v^-1.
    k = d.num_components
    f_m, f = eng.f_polynomial(m), eng.f_polynomial(d)
    if k == 1:
        assert f_m == f.mirror()
    else:
        assert f_m == f.mirror() * LaurentPoly.monomial(-2 * (k - 1), (-1) ** (k - 1))


@pytest.mark.parametrize("index", range(len(CORPUS)))
def test_reidemeister_one(eng, index):
    d = CORPUS[index]
    if d.num_crossings == 0:
        return
    rng = random.Random(index)
    h, f = eng.homfly(d), eng.f_polynomial(d)
    arc = rng.randrange(2 * d.num_crossings)
    for sign in (1, -1):
        for over_first in (True, False):
            e = add_kink(d, arc, sign, over_first)
            assert e.num_crossings == d.num_crossings + 1
            assert eng.homfly(e) == h
            assert eng.f_polynomial(e) == f


@pytest.mark.parametrize("index", range(len(CORPUS)))
def test_reidemeister_two(eng, index):
    d = CORPUS[index]
    pairs = face_pairs(d)
    if not pairs:
        return
    rng = random.Random(index)
    h, f = eng.homfly(d), eng.f_polynomial(d)
    for sa, sb in rng.sample(pairs, min(3, len(pairs))):
        for a_over in (True, False):
            e = add_bigon(d, sa, sb, a_over)
            assert e.num_crossings == d.num_crossings + 2
            assert eng.homfly(e) == h
            assert eng.f_polynomial(e) == f


# Reidemeister 3 instances: the braid relation sigma_i sigma_{i+1} sigma_i =
# sigma_{i+1} sigma_i sigma_{i+1}, with every sign choice that makes it a
# valid move, placed inside otherwise fixed braid words.
R3_PAIRS = [
    ((1, 2, 1), (2, 1, 2)),
    ((-1, -2, -1), (-2, -1, -2)),
    ((1, 2, -1), (-2, 1, 2)),
    ((-1, 2, 1), (2, 1, -2)),
    ((1, -2, -1), (-2, -1, 2)),
    ((-1, -2, 1), (2, -1, -2)),
]


@pytest.mark.parametrize("left, right", R3_PAIRS)
@pytest.mark.parametrize("prefix, suffix", [((), ()), ((2, 3), (-1,)), ((-3, 1, 1), (3, -2))])
def test_reidemeister_three(eng, left, right, prefix, suffix):
    a = braid_closure(list(prefix) + list(left) + list(suffix), 4)
    b = braid_closure(list(prefix) + list(right) + list(suffix), 4)
    assert a != b
    assert eng.homfly(a) == eng.homfly(b)
    assert eng.f_polynomial(a) == eng.f_polynomial(b)


@given(st.integers(0, len(CORPUS) - 1), st.data())
def test_random_move_sequences(index, data):
    eng = SkeinEngine(max_crossings=200)
    d = CORPUS[index]
    want = eng.homfly(d)
    e = d
    for _ in range(data.draw(st.integers(1, 3))):
        if data.draw(st.booleans()) and e.num_crossings:
            arc = data.draw(st.integers(0, 2 * e.num_crossings - 1))
            e = add_kink(e, arc, data.draw(st.sampled_from([1, -1])), data.draw(st.booleans()))
        else:
            pairs = face_pairs(e)
            if pairs:
                sa, sb = data.draw(st.sampled_from(pairs))
                e = add_bigon(e, sa, sb, data.draw(st.booleans()))
    assert eng.homfly(e) == want
