"""Self-check suites run by ``skeintwist verify``.

Each suite returns a list of :class:`Check` records.  The ``source`` field
names the reference the check compares against: a fixture name, an
independent computation (``engine``), or an arithmetic identity.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from importlib import resources
from typing import Callable, Dict, List, Optional

from .builder import random_braid_closure
from .diagram import Diagram, insert_full_twists, linking_number, parse_pd, split_link
from .families import (
    NEGATIVE_BRANCH,
    POSITIVE_BRANCH,
    SMALL_N,
    anchor,
    f_closed_form,
    f_direct,
    f_inductive,
    family_spec,
    fixture,
)
from .poly import LaurentPoly
from .skein import SkeinEngine, f_from_homfly, f_polynomial, f_split_formula
from .surgery import homology_order, hopf_s3_test, shared_slopes
from .twist import (
    derive_skein_tree,
    five_twist_step,
    four_twist_step,
    three_twist_step,
    two_twist_opposite,
    two_twist_same,
)

__all__ = ["Check", "SUITES", "run_suite", "synthetic_template", "twist_step_value"]

SYNTHETIC = ("synthetic_k2_opposite", "synthetic_k2_parallel", "synthetic_k3", "synthetic_k4", "synthetic_k5")


@dataclass
class Check:
    name: str
    passed: bool
    detail: str
    source: str

    def as_dict(self) -> Dict[str, object]:
        return {"name": self.name, "passed": self.passed, "detail": self.detail, "source": self.source}


def synthetic_template(name: str) -> Diagram:
    """Load one of the bundled synthetic twist templates."""
    path = resources.files(__package__).joinpath("data/templates/%s.pd" % name)
    if not path.is_file():
        raise KeyError("no bundled template named %r" % name)
    return parse_pd(path.read_text())


def twist_step_value(template: Diagram, n: int, engine: SkeinEngine) -> LaurentPoly:
    """``F`` of the ``n``-twisted template through the matching step formula.

    The auxiliary links come from :func:`derive_skein_tree`; the previous
    member of the family is evaluated directly.
    """
    d = insert_full_twists(template, n)
    tree = derive_skein_tree(d)
    f_prev = f_polynomial(tree.reduced, engine)
    f_aux = [f_polynomial(a, engine) for a in tree.aux]
    k = d.region.k
    if k == 5:
        return five_twist_step(f_aux, f_prev)
    if k == 4:
        return four_twist_step(f_aux, f_prev)
    if k == 3:
        return three_twist_step(f_aux[0], f_aux[1], f_aux[2], f_prev)
    f0 = f_polynomial(template, engine)
    if d.region.pattern[0] != d.region.pattern[1]:
        return two_twist_opposite(f_aux[0], f0, n)
    smoothed = tree.aux[0]
    fx, fy = (f_polynomial(p, engine) for p in split_link(smoothed))
    lk = linking_number(smoothed, 0, 1) - (n - 1)
    return two_twist_same(fx, fy, lk, f0, n)


def _eq(name: str, got: LaurentPoly, want: LaurentPoly, source: str) -> Check:
    ok = got == want
    detail = str(got) if ok else "got %s, expected %s" % (got, want)
    return Check(name, ok, detail, source)


def _knot(variant: str, n: int) -> str:
    return ("K_%d" if variant == "B" else "Kp_%d") % n


def suite_table1(engine: SkeinEngine) -> List[Check]:
    checks = []
    for variant in ("B", "G"):
        spec = family_spec(variant)
        for n in SMALL_N:
            name = "F(%s) direct" % _knot(variant, n)
            want = fixture(_knot(variant, n)).value()
            if not spec.has_template:
                checks.append(Check(name, False, "no template bundled for variant %s" % variant, _knot(variant, n)))
                continue
            checks.append(_eq(name, f_direct(spec, n, engine), want, _knot(variant, n)))
        # The J-family recursion must connect the tabulated values.
        for n in SMALL_N[:-1]:
            name = "F(%s) inductive from n=3" % _knot(variant, n)
            got = f_inductive(variant, n, start=3)
            checks.append(_eq(name, got, fixture(_knot(variant, n)).value(), _knot(variant, n)))
    return checks


def suite_theorem(engine: SkeinEngine) -> List[Check]:
    checks = []
    for variant, coef in (("B", lambda n: 2 * n - 2), ("G", lambda n: n - 2)):
        tag = _knot(variant, 5)
        checks.append(_eq("F(%s) inductive" % tag, f_inductive(variant, 5), anchor(variant), tag))
        pos = f_closed_form(variant, POSITIVE_BRANCH)
        for n in (6, 7):
            checks.append(_eq("closed form = inductive at n=%d (%s)" % (n, variant),
                              pos.evaluate(n), f_inductive(variant, n), "recursion"))
        for n in range(6, 13):
            f = pos.evaluate(n)
            rest = f - 1 - LaurentPoly.monomial(6 - 2 * n, coef(n))
            ok = rest.is_zero() or rest.max_degree() < 6 - 2 * n
            checks.append(Check("leading terms at n=%d (%s)" % (n, variant), ok,
                                "coefficient %d at v^%d" % (f.coeff(6 - 2 * n), 6 - 2 * n), "X,Y,Z"))
        neg = f_closed_form(variant, NEGATIVE_BRANCH)
        ncoef = (lambda n: 1) if variant == "B" else (lambda n: n + 2)
        for n in range(-3, -9, -1):
            f = neg.evaluate(n)
            e = -2 * n - 4
            rest = f - 1 - LaurentPoly.monomial(e, ncoef(n))
            ok = rest.is_zero() or rest.min_degree() > e
            checks.append(Check("trailing terms at n=%d (%s)" % (n, variant), ok,
                                "coefficient %d at v^%d" % (f.coeff(e), e), "X,Y,Z mirrored"))
    return checks


def suite_skein(engine: SkeinEngine) -> List[Check]:
    rng = random.Random(20240601)
    checks = []
    for i in range(25):
        d = random_braid_closure(rng, 10, 4)
        ok = f_polynomial(d, engine) == f_from_homfly(d, engine)
        checks.append(Check("F = z^0(H) on braid sample %d" % i, ok, "%d crossings" % d.num_crossings, "engine"))
    count = 0
    while count < 10:
        d = random_braid_closure(rng, 8, 4)
        if d.num_components != 2:
            continue
        count += 1
        parts = [f_polynomial(p, engine) for p in split_link(d)]
        formula = f_split_formula(parts, d.linking_matrix())
        checks.append(_eq("linking formula on sample %d" % count, f_polynomial(d, engine), formula, "engine"))
    return checks


def suite_twist(engine: SkeinEngine) -> List[Check]:
    checks = []
    for name in SYNTHETIC:
        t = synthetic_template(name)
        for n in (1, 2):
            direct = f_polynomial(insert_full_twists(t, n), engine)
            checks.append(_eq("%s n=%d" % (name, n), twist_step_value(t, n, engine), direct, "engine"))
    return checks


def suite_surgery(engine: Optional[SkeinEngine] = None) -> List[Check]:
    checks = []
    for n in range(-5, 6):
        a = shared_slopes(n, -1)
        b = shared_slopes(n, 1)
        ok = a == (n + 1, n + 2, n + 3, 2 * n + 2) and b == (n - 3, n - 2, n - 1, 2 * n - 2)
        ok = ok and a[0] < a[1] < a[2] and b[0] < b[1] < b[2]
        checks.append(Check("slopes n=%d" % n, ok, "%s / %s" % (a, b), "slope formula"))
    agree = 0
    for p in range(-10, 11):
        for r in range(-10, 11):
            if hopf_s3_test(p, 1, r, 1) != (homology_order([[p, 1], [1, r]]) == 1):
                checks.append(Check("Hopf S^3 test (%d, %d)" % (p, r), False, "disagrees with |det|", "determinant"))
            else:
                agree += 1
    checks.append(Check("Hopf S^3 test vs determinant", agree == 21 * 21, "%d integral pairs" % agree, "determinant"))
    return checks


SUITES: Dict[str, Callable[[SkeinEngine], List[Check]]] = {
    "table1": suite_table1,
    "theoremA1": suite_theorem,
    "skein-consistency": suite_skein,
    "twist-lemmas": suite_twist,
    "surgery": suite_surgery,
}


def run_suite(name: str, engine: SkeinEngine) -> List[Check]:
    try:
        suite = SUITES[name]
    except KeyError:
        raise KeyError("unknown suite %r" % name) from None
    return suite(engine)
