import random

import pytest
from hypothesis import given, strategies as st

from skeintwist.diagram import SCHEDULE_PATTERNS, RegionError, insert_full_twists, parse_pd
from skeintwist.families import fixture
from skeintwist.poly import FamilyPoly, LaurentPoly
from skeintwist.skein import f_polynomial
from skeintwist.twist import (
    derive_skein_tree,
    five_twist_step,
    four_twist_step,
    sequential_step,
    skein_tree_coefficients,
    solve_recursion,
    solve_recursion_family,
    three_twist_step,
    two_twist_opposite,
    two_twist_same,
    unroll_recursion,
)
from skeintwist.verify import SYNTHETIC, synthetic_template, twist_step_value

L = LaurentPoly.parse
ZERO = LaurentPoly()
ONE = L("1")
DENOM = L("v^-2 - 1")

laurent = st.dictionaries(st.integers(-10, 10), st.integers(-6, 6), max_size=5).map(LaurentPoly)


def test_trivial_step_values():
    assert five_twist_step([ZERO] * 10, ZERO) == ZERO
    assert five_twist_step([ZERO] * 10, ONE) == L("v^-4")
    assert four_twist_step([ZERO] * 6, ZERO) == ZERO
    assert four_twist_step([ZERO] * 6, ONE) == L("v^-4")
    assert three_twist_step(ZERO, ZERO, ZERO, ZERO) == ZERO
    assert three_twist_step(ZERO, ZERO, ZERO, ONE) == L("v^-2")
    with pytest.raises(ValueError):
        five_twist_step([ZERO] * 9, ONE)
    with pytest.raises(ValueError):
        four_twist_step([ZERO] * 7, ONE)


def test_five_twist_step_connects_table_entries():
    fj = [fixture("J%d" % i).family.evaluate(2) for i in range(1, 11)]
    assert five_twist_step(fj, fixture("K_1").value()) == fixture("K_2").value()
    fjp = [fixture("J%dp" % i).family.evaluate(2) for i in range(1, 11)]
    assert five_twist_step(fjp, fixture("Kp_1").value()) == fixture("Kp_2").value()


def test_three_twist_family_from_known_links():
    # Twisting three strands of a knot X^2_n whose auxiliary links are known.
    f_u = DENOM * L("v^2") * L("v^-2 + v^-4 - v^-6")
    f_v = DENOM * L("v^-2")
    f = L("2v^2 - 5 + 6v^-2 - 2v^-4")
    for n in range(1, 6):
        f = three_twist_step(DENOM, f_u, f_v, f)
        assert f == 1 - L("v^-2") ** n + (L("2v^2 - 5 + 6v^-2 - 2v^-4") * L("v^-2") ** n)


def test_two_twist_opposite_examples():
    assert two_twist_opposite(DENOM, L("v^3 + 2"), 0) == L("v^3 + 2")
    assert two_twist_opposite(DENOM, ONE, 2) == ONE
    f0 = L("v^2 - v^-2 + v^-4")
    for n in range(8):
        want = 1 + (L("v^2 - 1 - v^-2 + v^-4") * L("v^-2") ** n)
        assert two_twist_opposite(DENOM, f0, n) == want


def test_two_twist_same_examples():
    assert two_twist_same(ONE, ONE, 3, L("v^-2 + 7"), 0) == L("v^-2 + 7")
    assert two_twist_same(ONE, ONE, 0, ONE, 1) == ONE


@given(laurent, laurent, st.integers(-4, 4), laurent)
def test_two_twist_same_unrolls(fx, fy, lk, f0):
    f = f0
    for m in range(1, 4):
        f = (DENOM * fx * fy).shift(2 * m + 2 * lk) + f.shift(2)
    assert two_twist_same(fx, fy, lk, f0, 3) == f


@given(laurent, laurent, st.integers(0, 6))
def test_two_twist_opposite_unrolls(fz, f0, n):
    # Single step: F_m = v^-2 F_(m-1) - F_Z.
    f = f0
    for _ in range(n):
        f = f.shift(-2) - fz
    assert two_twist_opposite(fz, f0, n) == f


def test_skein_tree_coefficients_match_step_formulas():
    rng = random.Random(3)
    for k, step in ((5, five_twist_step), (4, four_twist_step)):
        signs = SCHEDULE_PATTERNS[k]
        aux = [LaurentPoly({rng.randint(-6, 6): rng.randint(-5, 5)}) for _ in signs]
        prev = LaurentPoly({rng.randint(-6, 6): 1})
        assert sequential_step(signs, aux, prev) == step(aux, prev)
    coeffs, prev_coeff = skein_tree_coefficients((1, -1, -1))
    assert prev_coeff == L("v^-2")
    assert len(coeffs) == 3


# Step-formula soundness on the bundled synthetic templates.
@pytest.mark.parametrize("name", SYNTHETIC)
@pytest.mark.parametrize("n", [1, 2, 3])
def test_step_formula_soundness(engine, name, n):
    t = synthetic_template(name)
    direct = f_polynomial(insert_full_twists(t, n), engine)
    assert twist_step_value(t, n, engine) == direct


@pytest.mark.parametrize("name", ["synthetic_k3", "synthetic_k4", "synthetic_k5"])
def test_skein_tree_structure(name):
    d = insert_full_twists(synthetic_template(name), 1)
    k = d.region.k
    tree = derive_skein_tree(d)
    assert len(tree.aux) == k * (k - 1) // 2
    assert all(a.num_components == 2 for a in tree.aux)
    assert tree.reduced.num_crossings == d.num_crossings
    assert tree.signs == tuple(d.signs[c] for c in d.region.schedule)


def test_skein_tree_two_strands():
    d = insert_full_twists(synthetic_template("synthetic_k2_opposite"), 1)
    tree = derive_skein_tree(d)
    assert len(tree.aux) == 1


def test_skein_tree_errors():
    with pytest.raises(RegionError):
        derive_skein_tree(parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"))
    with pytest.raises(RegionError):
        derive_skein_tree(synthetic_template("synthetic_k3"))


# The recursion F_n = X + Y v^(-2n) + Z v^(-4n) + v^-4 F_(n-1).
def test_solve_recursion_examples():
    assert solve_recursion(ONE, ZERO, ZERO, ZERO, 0, 2) == L("1 + v^-4")
    for n in range(1, 6):
        assert solve_recursion(ZERO, ZERO, ZERO, ONE, 0, n) == L("v^-4") ** n
    with pytest.raises(ValueError):
        solve_recursion(ONE, ONE, ONE, ONE, 3, 3)


def test_propagation_exponent_in_family_form():
    fam = solve_recursion_family(ZERO, ZERO, ZERO, ONE, 2)
    for n in range(3, 12):
        assert fam.evaluate(n) == LaurentPoly.monomial(-4 * (n - 2))


def test_solver_against_unrolling_seeded():
    rng = random.Random(2024)

    def rand_poly():
        return LaurentPoly({rng.randint(-8, 8): rng.randint(-9, 9) for _ in range(rng.randint(0, 4))})

    for _ in range(100):
        x, y, z, base = rand_poly(), rand_poly(), rand_poly(), rand_poly()
        n0 = rng.randint(0, 6)
        n = rng.randint(n0 + 1, n0 + 20)
        assert solve_recursion(x, y, z, base, n0, n) == unroll_recursion(x, y, z, base, n0, n)


@given(laurent, laurent, laurent, laurent, st.integers(0, 5), st.integers(1, 20))
def test_solver_against_unrolling(x, y, z, base, n0, steps):
    n = n0 + steps
    assert solve_recursion(x, y, z, base, n0, n) == unroll_recursion(x, y, z, base, n0, n)


@given(laurent, laurent, laurent, laurent, st.integers(0, 5))
def test_family_solver_pointwise(x0, y, z, base, n0):
    # X enters through sum v^-4j, so the family form needs 1 + v^-2 | X.
    x = x0 * L("1 + v^-2")
    fam = solve_recursion_family(x, y, z, base, n0)
    for n in range(n0 + 1, n0 + 8):
        assert fam.evaluate(n) == solve_recursion(x, y, z, base, n0, n)


def test_family_solver_rejects_unsummable_x():
    with pytest.raises(ValueError, match="divisible"):
        solve_recursion_family(ONE, ZERO, ZERO, ZERO, 0)


def test_family_solver_with_n_dependent_data():
    y = FamilyPoly.parse("(2n-1)v^2 - n")
    z = FamilyPoly.parse("(n-3)v^-2 + 4")
    x = FamilyPoly.parse("1 - v^-4")
    base = L("v^6 - 2")
    fam = solve_recursion_family(x, y, z, base, 1)
    for n in range(2, 14):
        assert fam.evaluate(n) == unroll_recursion(x, y, z, base, 1, n)


def test_recursion_data_reproduces_first_step():
    x, y, z = (fixture(s).family for s in ("X", "Y", "Z"))
    k5 = fixture("K_5").value()
    fam = solve_recursion_family(x, y, z, k5, 5)
    fj = [fixture("J%d" % i).family.evaluate(6) for i in range(1, 11)]
    assert fam.evaluate(6) == five_twist_step(fj, k5)
    assert fam.evaluate(6) == unroll_recursion(x, y, z, k5, 5, 6)
