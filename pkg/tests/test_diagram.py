import pytest
from hypothesis import given, strategies as st

from helpers import add_bigon, add_kink, face_pairs, prime_knots, random_diagrams
from skeintwist.builder import braid_closure
from skeintwist.diagram import (
    Diagram,
    PDParseError,
    RegionError,
    canonical_key,
    format_pd,
    insert_full_twists,
    is_descending_unlink,
    linking_number,
    mirror_diagram,
    parse_pd,
    resolve_crossing,
    simplify,
    split_link,
    switch_crossing,
)
from skeintwist.verify import synthetic_template

TREFOIL = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"
HOPF_POS = "X(1,3,2,4) X(3,1,4,2)"
FIGURE_EIGHT = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)"


def arcs_twice(d):
    counts = {}
    for a in d.P:
        counts[a] = counts.get(a, 0) + 1
    return all(c == 2 for c in counts.values())


def test_parse_trefoil():
    d = parse_pd(TREFOIL)
    assert (d.num_crossings, d.num_components) == (3, 1)


def test_parse_circle_token():
    d = parse_pd("O(1)")
    assert (d.num_crossings, d.num_components) == (0, 1)


def test_parse_hopf():
    d = parse_pd(HOPF_POS)
    assert (d.num_crossings, d.num_components) == (2, 2)
    assert d.writhe() == 2


@pytest.mark.parametrize(
    "text",
    ["", "X(1,2,3)", "X(1,1,2,2) junk", "Y(1,2,3,4)", "X(1,2,3,4) X(1,2,3,4) X(1,2,3,4)"],
)
def test_parse_errors(text):
    with pytest.raises(PDParseError):
        parse_pd(text)


def test_bad_region_arcs():
    with pytest.raises(RegionError):
        parse_pd("TWIST(2; 1,1; uu) " + TREFOIL)


def test_linking_numbers():
    assert linking_number(parse_pd("O(1) O(2)"), 0, 1) == 0
    assert linking_number(parse_pd(HOPF_POS), 0, 1) == 1
    with pytest.raises(ValueError):
        linking_number(parse_pd(HOPF_POS), 0, 0)


def test_switch_hopf_negates_linking():
    d = parse_pd(HOPF_POS)
    e = switch_crossing(switch_crossing(d, 0), 1)
    assert linking_number(e, 0, 1) == -1
    assert linking_number(switch_crossing(d, 0), 0, 1) == 0
    with pytest.raises(IndexError):
        switch_crossing(d, 2)


def test_resolve_hopf_merges_components():
    for c in (0, 1):
        e, delta = resolve_crossing(parse_pd(HOPF_POS), c)
        assert delta == 1 and e.num_components == 1


def test_resolve_kink_splits_unknot():
    kinked = parse_pd("X(1,2,2,1)")
    e, delta = resolve_crossing(kinked, 0)
    assert delta == 0 and e.num_components == 2


def test_simplify_kink_and_bigon():
    assert simplify(parse_pd("X(1,2,2,1)")).num_crossings == 0
    bigon = parse_pd("X(1,2,3,4) X(3,2,1,4) ORIENT(2,4,2)")
    assert bigon.num_components == 2 and linking_number(bigon, 0, 1) == 0
    assert simplify(bigon).num_crossings == 0
    trefoil = parse_pd(TREFOIL)
    assert simplify(trefoil) is trefoil


def test_descending_unlinks():
    assert is_descending_unlink(parse_pd("O(1) O(2) O(3)"))
    t = parse_pd(TREFOIL)
    for start in range(6):
        assert not is_descending_unlink(t, [start])


def test_descending_split_union():
    kink = parse_pd("X(1,2,2,1)")
    good = [a for a in range(2) if is_descending_unlink(kink, [a])]
    bad = [a for a in range(2) if not is_descending_unlink(kink, [a])]
    assert len(good) == 1 and len(bad) == 1
    # The same kink twice, on disjoint arc labels.
    d = parse_pd("X(1,2,2,1) X(3,4,4,3)")
    assert d.num_components == 2
    assert is_descending_unlink(d, [good[0], good[0] + 2])
    assert not is_descending_unlink(d, [good[0], bad[0] + 2])


def test_descending_order_validation():
    with pytest.raises(ValueError):
        is_descending_unlink(parse_pd(HOPF_POS), [0])


def test_canonical_keys():
    t, e = parse_pd(TREFOIL), parse_pd(FIGURE_EIGHT)
    assert canonical_key(t) != canonical_key(e)
    assert canonical_key(t) != canonical_key(switch_crossing(t, 0))


@given(st.integers(0, 500))
def test_canonical_key_ignores_labels(seed):
    d = random_diagrams(1, 10, seed)[0]
    shift = parse_pd(format_pd(d))
    assert canonical_key(shift) == canonical_key(d)


def test_mirror_diagram():
    assert mirror_diagram(parse_pd("O(1)")).num_components == 1
    m = mirror_diagram(parse_pd(HOPF_POS))
    assert linking_number(m, 0, 1) == -1


@given(st.integers(0, 10_000))
def test_mirror_is_involution_and_negates_writhe(seed):
    d = random_diagrams(1, 10, seed)[0]
    m = mirror_diagram(d)
    assert m.writhe() == -d.writhe()
    assert mirror_diagram(m) == d


def test_format_round_trip_with_region():
    t = synthetic_template("synthetic_k3")
    again = parse_pd(format_pd(t))
    assert again.region.pattern == t.region.pattern
    assert canonical_key(again) == canonical_key(t)


def test_insert_zero_twists_is_identity():
    t = synthetic_template("synthetic_k3")
    assert insert_full_twists(t, 0).num_crossings == t.num_crossings


def test_parallel_full_twist_adds_two_positive_crossings():
    # Two parallel strands of a split two-component unlink.
    t = parse_pd("TWIST(2; 4,1; uu) X(1,2,3,4) X(3,2,1,4) ORIENT(2,4,2)")
    d = insert_full_twists(t, 1)
    assert d.num_crossings == t.num_crossings + 2
    assert d.writhe() == t.writhe() + 2
    assert linking_number(t, 0, 1) == 0 and linking_number(d, 0, 1) == 1


def test_orient_hint_with_crossing():
    a = parse_pd("X(1,2,3,4) X(3,2,1,4) ORIENT(2,4,2)")
    b = parse_pd("X(1,2,3,4) X(3,2,1,4) ORIENT(2,4,1)")
    assert a.signs != b.signs
    with pytest.raises(PDParseError):
        parse_pd("X(1,2,3,4) X(3,2,1,4) ORIENT(2,4,5)")
    with pytest.raises(PDParseError):
        parse_pd("X(1,2,3,4) X(3,2,1,4) ORIENT(2,3)")


@given(st.integers(0, 10_000))
def test_format_round_trip_keeps_signs(seed):
    d = random_diagrams(1, 10, seed)[0]
    e = parse_pd(format_pd(d))
    assert e.signs == d.signs and e.loops == d.loops


@pytest.mark.parametrize("name, k", [("synthetic_k3", 3), ("synthetic_k4", 4), ("synthetic_k5", 5)])
@pytest.mark.parametrize("n", [-2, -1, 1, 2])
def test_twist_crossing_counts(name, k, n):
    t = synthetic_template(name)
    d = insert_full_twists(t, n)
    assert d.num_crossings == t.num_crossings + abs(n) * k * (k - 1)
    assert d.region.n == n
    assert arcs_twice(d)
    if n >= 1:
        assert len(d.region.schedule) == k * (k - 1) // 2


def test_twisting_twice_is_rejected():
    d = insert_full_twists(synthetic_template("synthetic_k3"), 1)
    with pytest.raises(RegionError):
        insert_full_twists(d, 1)
    with pytest.raises(RegionError):
        insert_full_twists(parse_pd(TREFOIL), 1)


def test_split_link():
    parts = split_link(parse_pd(HOPF_POS))
    assert len(parts) == 2 and all(p.num_components == 1 for p in parts)
    assert sorted(p.num_crossings for p in split_link(parse_pd("O(1) " + TREFOIL))) == [0, 3]


@given(st.integers(0, 10_000), st.data())
def test_moves_keep_every_arc_used_twice(seed, data):
    d = random_diagrams(1, 8, seed)[0]
    if d.num_crossings == 0:
        return
    arc = data.draw(st.integers(0, 2 * d.num_crossings - 1))
    e = add_kink(d, arc, data.draw(st.sampled_from([1, -1])), data.draw(st.booleans()))
    assert arcs_twice(e) and e.num_components == d.num_components
    assert simplify(e).num_crossings <= d.num_crossings
    pairs = face_pairs(d)
    if pairs:
        sa, sb = data.draw(st.sampled_from(pairs))
        f = add_bigon(d, sa, sb)
        assert arcs_twice(f) and f.writhe() == d.writhe()
        assert f.linking_matrix() == d.linking_matrix()


@pytest.mark.parametrize("name, d, _", prime_knots())
def test_corpus_knots_have_one_component(name, d, _):
    assert d.num_components == 1
