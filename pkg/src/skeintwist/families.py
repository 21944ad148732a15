"""The twist families ``K_n`` (variant ``B``) and ``K'_n`` (variant ``G``).

Both families are obtained from a template knot by inserting ``n`` full
twists on five strands, three oriented one way and two the other.  This
module bundles the published degree-zero data for the two families and
offers three routes to ``F(K_n)``:

* ``direct``: build the diagram from a template and run the skein engine;
* ``inductive``: iterate :func:`five_twist_step` over the closed forms of
  the auxiliary links ``J_i``, starting from a directly computed value;
* ``closed-form``: the solved recursion, valid for ``n >= 6`` and, through
  mirroring, for ``n <= -3``.

The fixture table lives in ``data/families.txt``.  Knot templates are read
from ``data/templates/<variant>.pd`` when present.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Dict, List, Mapping, Optional, Tuple

from .diagram import Diagram, RegionError, insert_full_twists, mirror_diagram, parse_pd
from .poly import FamilyPoly, LaurentPoly
from .skein import SkeinEngine, f_polynomial
from .twist import five_twist_step, solve_recursion_family

__all__ = [
    "Fixture",
    "KnotFamilySpec",
    "TemplateUnavailable",
    "VARIANTS",
    "build_family_knot",
    "distinguish",
    "distinguish_detail",
    "f_closed_form",
    "f_direct",
    "f_inductive",
    "family_spec",
    "fixture",
    "fixtures",
    "ji_closed_forms",
    "load_template",
    "recursion_data",
    "table1",
]

VARIANTS = ("B", "G")
SMALL_N = (-2, -1, 0, 1, 2, 3)
POSITIVE_BRANCH = "n>=6"
NEGATIVE_BRANCH = "n<=-3"

# Largest n for which the positive closed form is not asserted, and the
# smallest |n| for the mirrored branch.
_POS_SEED = 5
_NEG_SEED = 2


class TemplateUnavailable(LookupError):
    """No diagram template is bundled for the requested variant."""


@dataclass(frozen=True)
class Fixture:
    name: str
    valid_from: Optional[int]
    valid_to: Optional[int]
    text: str

    @property
    def family(self) -> FamilyPoly:
        return FamilyPoly.parse(self.text).with_validity(self.valid_from, self.valid_to)

    def value(self, n: Optional[int] = None) -> LaurentPoly:
        """Evaluate at ``n``; single-point fixtures may omit it."""
        if n is None:
            if self.valid_from is None or self.valid_from != self.valid_to:
                raise ValueError("fixture %s needs an explicit n" % self.name)
            n = self.valid_from
        return self.family.evaluate(n)


_VALIDITY_RE = re.compile(
    r"^(?:(?P<all>all)|n\s*=\s*(?P<eq>-?\d+)|n\s*>=\s*(?P<ge>-?\d+)|n\s*<=\s*(?P<le>-?\d+)"
    r"|(?P<lo>-?\d+)\s*<=\s*n\s*<=\s*(?P<hi>-?\d+))$"
)


def _parse_validity(text: str) -> Tuple[Optional[int], Optional[int]]:
    m = _VALIDITY_RE.match(text.strip())
    if m is None:
        raise ValueError("bad validity %r" % text)
    if m.group("all"):
        return None, None
    if m.group("eq") is not None:
        k = int(m.group("eq"))
        return k, k
    if m.group("ge") is not None:
        return int(m.group("ge")), None
    if m.group("le") is not None:
        return None, int(m.group("le"))
    return int(m.group("lo")), int(m.group("hi"))


def parse_fixtures(text: str) -> Dict[str, Fixture]:
    """Parse ``name ; validity ; expression`` lines; ``#`` starts a comment."""
    out: Dict[str, Fixture] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = [p.strip() for p in line.split(";")]
        if len(parts) != 3:
            raise ValueError("line %d: expected three ';'-separated fields" % lineno)
        name, validity, expr = parts
        if name in out:
            raise ValueError("line %d: duplicate fixture %s" % (lineno, name))
        lo, hi = _parse_validity(validity)
        FamilyPoly.parse(expr)  # fail early on malformed entries
        out[name] = Fixture(name, lo, hi, expr)
    return out


@lru_cache(maxsize=None)
def fixtures() -> Mapping[str, Fixture]:
    text = resources.files(__package__).joinpath("data/families.txt").read_text()
    return parse_fixtures(text)


def fixture(name: str) -> Fixture:
    try:
        return fixtures()[name]
    except KeyError:
        raise KeyError("no fixture named %r" % name) from None


def _check_variant(variant: str) -> str:
    if variant not in VARIANTS:
        raise ValueError("variant must be 'B' or 'G', not %r" % (variant,))
    return variant


def _suffix(variant: str) -> str:
    return "" if _check_variant(variant) == "B" else "p"


def _knot_name(variant: str, n: int) -> str:
    return ("K_%d" if variant == "B" else "Kp_%d") % n


# ---------------------------------------------------------------------------
# Fixture views
# ---------------------------------------------------------------------------


def table1() -> Dict[int, Tuple[LaurentPoly, LaurentPoly]]:
    """``n -> (F(K_n), F(K'_n))`` for ``-2 <= n <= 3``."""
    return {n: (fixture(_knot_name("B", n)).value(), fixture(_knot_name("G", n)).value()) for n in SMALL_N}


def ji_closed_forms(variant: str) -> List[FamilyPoly]:
    """Closed forms of ``F(J_1) .. F(J_10)`` as families in ``n``."""
    s = _suffix(variant)
    return [fixture("J%d%s" % (i, s)).family for i in range(1, 11)]


def recursion_data(variant: str) -> Tuple[FamilyPoly, FamilyPoly, FamilyPoly]:
    """``(X, Y, Z)`` with ``F(K_n) = X + Y v^-2n + Z v^-4n + v^-4 F(K_{n-1})``."""
    s = _suffix(variant)
    return tuple(fixture(name + s).family for name in ("X", "Y", "Z"))  # type: ignore[return-value]


def anchor(variant: str) -> LaurentPoly:
    """The value of ``F`` at ``n = 5``."""
    return fixture(_knot_name(variant, _POS_SEED)).value()


# ---------------------------------------------------------------------------
# Templates and direct computation
# ---------------------------------------------------------------------------


def load_template(variant: str) -> Diagram:
    """Read the bundled ``n = 0`` template with its five-strand region.

    Raises:
        TemplateUnavailable: if no template file ships with the package.
    """
    path = resources.files(__package__).joinpath("data/templates/%s.pd" % _check_variant(variant))
    if not path.is_file():
        raise TemplateUnavailable("no diagram template is bundled for variant %s" % variant)
    d = parse_pd(path.read_text())
    if d.region is None or d.region.k != 5:
        raise RegionError("template for variant %s lacks a five-strand twist region" % variant)
    return d


@dataclass
class KnotFamilySpec:
    """A variant together with its template (if any) and reference data."""

    variant: str
    template: Optional[Diagram] = None
    data: Mapping[str, Fixture] = field(default_factory=dict)

    def __post_init__(self) -> None:
        _check_variant(self.variant)

    @property
    def has_template(self) -> bool:
        return self.template is not None


def family_spec(variant: str, template: Optional[Diagram] = None) -> KnotFamilySpec:
    """Spec for ``variant``; uses the bundled template when none is given."""
    if template is None:
        try:
            template = load_template(variant)
        except TemplateUnavailable:
            template = None
    s = _suffix(variant)
    data = {k: f for k, f in fixtures().items() if _belongs(k, s)}
    return KnotFamilySpec(variant, template, data)


def _belongs(name: str, suffix: str) -> bool:
    base = name.split("_", 1)[0]
    if suffix:
        return base.endswith("p")
    return not base.endswith("p")


def build_family_knot(spec: KnotFamilySpec, n: int) -> Diagram:
    """The diagram of the family member with ``n`` full twists.

    Negative members are built as the mirror of the ``|n|`` member of the
    mirrored template, so only positive twists are ever inserted.
    """
    if spec.template is None:
        raise TemplateUnavailable("variant %s has no template; supply one" % spec.variant)
    if n >= 0:
        return insert_full_twists(spec.template, n)
    return mirror_diagram(insert_full_twists(mirror_diagram(spec.template), -n))


def f_direct(spec: KnotFamilySpec, n: int, engine: Optional[SkeinEngine] = None) -> LaurentPoly:
    return f_polynomial(build_family_knot(spec, n), engine)


# ---------------------------------------------------------------------------
# Inductive and closed-form routes
# ---------------------------------------------------------------------------


def _step_sum(variant: str, n: int) -> LaurentPoly:
    """``F(K_n) - v^-4 F(K_{n-1})`` from the ``J_i`` closed forms."""
    fj = [f.evaluate(n) for f in ji_closed_forms(variant)]
    return five_twist_step(fj, LaurentPoly())


def f_inductive(variant: str, n: int, start: Optional[int] = None,
                f_start: Optional[LaurentPoly] = None) -> LaurentPoly:
    """Walk the five-strand recursion from a known value to ``n``.

    ``start`` defaults to the nearest small-``n`` value (``3`` upward,
    ``-2`` downward) and ``f_start`` to its tabulated ``F``.  Moving down
    inverts one step: ``F(K_{m-1}) = v^4 (F(K_m) - sum)``.
    """
    _check_variant(variant)
    if start is None:
        start = min(max(n, SMALL_N[0]), SMALL_N[-1])
    if f_start is None:
        f_start = fixture(_knot_name(variant, start)).value()
    f = f_start
    m = start
    while m < n:
        m += 1
        f = _step_sum(variant, m) + f.shift(-4)
    while m > n:
        f = (f - _step_sum(variant, m)).shift(4)
        m -= 1
    return f


@lru_cache(maxsize=None)
def f_closed_form(variant: str, branch: str = POSITIVE_BRANCH) -> FamilyPoly:
    """Solved recursion for ``n >= 6`` or, by mirroring, ``n <= -3``.

    The positive branch is seeded with ``F(K_5)``.  For the negative branch
    put ``H_m = mirror(F(K_-m))``.  Mirroring the recursion gives
    ``H_m = X + Y*(m) v^-2m + Z*(m) v^-4m + v^-4 H_{m-1}`` with
    ``Y*(m) = -v^-2 mirror(Y)(1-m)`` and ``Z*(m) = -mirror(Z)(1-m)``
    (``X`` is fixed by the mirror), seeded with ``H_2 = mirror(F(K_-2))``.
    """
    X, Y, Z = recursion_data(variant)
    if branch == POSITIVE_BRANCH:
        return solve_recursion_family(X, Y, Z, anchor(variant), _POS_SEED)
    if branch != NEGATIVE_BRANCH:
        raise ValueError("branch must be %r or %r" % (POSITIVE_BRANCH, NEGATIVE_BRANCH))
    x_star = -(X.mirror() * LaurentPoly.monomial(-4))
    y_star = -(Y.mirror().substitute(-1, 1) * LaurentPoly.monomial(-2))
    z_star = -Z.mirror().substitute(-1, 1)
    seed = fixture(_knot_name(variant, -_NEG_SEED)).value().mirror()
    h = solve_recursion_family(x_star, y_star, z_star, seed, _NEG_SEED)
    return h.mirror().substitute(-1).with_validity(None, -(_NEG_SEED + 1))


def leading_coefficient(variant: str, n: int) -> Tuple[int, int]:
    """``(exponent, coefficient)`` of the term that separates the families.

    For ``n >= 6`` this is the coefficient of ``v^(6-2n)``; for ``n <= -3``
    that of ``v^(-2n-4)``.
    """
    if n >= 6:
        e = 6 - 2 * n
        return e, f_closed_form(variant, POSITIVE_BRANCH).evaluate(n).coeff(e)
    if n <= -3:
        e = -2 * n - 4
        return e, f_closed_form(variant, NEGATIVE_BRANCH).evaluate(n).coeff(e)
    raise ValueError("the closed forms start at n = 6 and n = -3")


# ---------------------------------------------------------------------------
# Distinctness
# ---------------------------------------------------------------------------

DISTINCT = "distinct"
EQUAL_F = "equal-F"
PROVEN_DISTINCT = "out-of-range-proven-distinct"


def distinguish_detail(n: int, spec_b: Optional[KnotFamilySpec] = None,
                       spec_g: Optional[KnotFamilySpec] = None,
                       engine: Optional[SkeinEngine] = None) -> Dict[str, object]:
    """Decide whether ``F`` separates ``K_n`` from ``K'_n`` and say how.

    Small ``n`` use direct computation when both templates are present and
    the tabulated values otherwise; ``|n| in {4, 5}`` walk the recursion
    from the nearest tabulated value; larger ``|n|`` compare the separating
    coefficient of the closed forms.
    """
    if abs(n) >= 6:
        e, cb = leading_coefficient("B", n)
        _, cg = leading_coefficient("G", n)
        verdict = DISTINCT if cb != cg else EQUAL_F
        return {"n": n, "verdict": verdict, "method": "closed-form", "exponent": e,
                "coefficients": (cb, cg)}
    if n in SMALL_N:
        if spec_b is not None and spec_g is not None and spec_b.has_template and spec_g.has_template:
            fb, fg = f_direct(spec_b, n, engine), f_direct(spec_g, n, engine)
            method = "direct"
        else:
            fb, fg = table1()[n]
            method = "table"
    else:
        fb, fg = f_inductive("B", n), f_inductive("G", n)
        method = "inductive"
    verdict = DISTINCT if fb != fg else EQUAL_F
    return {"n": n, "verdict": verdict, "method": method, "values": (fb, fg)}


def distinguish(n: int) -> str:
    """``"distinct"`` when ``F(K_n) != F(K'_n)`` and ``"equal-F"`` otherwise.

    Values of ``|n|`` beyond the checked range (``|n| > 1000``) are decided
    from the closed-form coefficients alone and reported as
    ``"out-of-range-proven-distinct"``: ``2n - 2`` against ``n - 2`` for
    positive ``n`` and ``1`` against ``n + 2`` for negative ``n``.
    """
    if abs(n) > 1000:
        if n > 0:
            return PROVEN_DISTINCT if 2 * n - 2 != n - 2 else EQUAL_F
        return PROVEN_DISTINCT if n + 2 != 1 else EQUAL_F
    return str(distinguish_detail(n)["verdict"])
