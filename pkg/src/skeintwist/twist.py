"""Twist-family calculus for the degree-zero polynomial ``F``.

When ``K_n`` and ``K_{n-1}`` differ by one full twist on ``k`` strands,
switching the ``k(k-1)/2`` crossings of one half twist turns ``K_n`` into
``K_{n-1}``.  Applying the ``F`` skein relation at each switch in turn
expresses ``F(K_n)`` through ``F(K_{n-1})`` and the ``F`` values of the
links obtained by smoothing those crossings.  This module holds

* the resulting step formulas for the strand counts and orientation
  patterns used in practice (:func:`five_twist_step` and friends) together
  with a generic version driven by a sign sequence;
* :func:`derive_skein_tree`, which produces the smoothed links from a
  diagram with a marked twist region;
* closed forms for the recursion ``F_n = X + Y v^-2n + Z v^-4n + v^-4 F_{n-1}``
  both at a given ``n`` and as a :class:`~skeintwist.poly.FamilyPoly`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd as _gcd
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .diagram import Diagram, RegionError, resolve_crossing, switch_crossings
from .poly import DENOM, FamilyPoly, LaurentPoly, geometric_sum

__all__ = [
    "SkeinTree",
    "skein_tree_coefficients",
    "sequential_step",
    "five_twist_step",
    "four_twist_step",
    "three_twist_step",
    "two_twist_opposite",
    "two_twist_same",
    "solve_recursion",
    "unroll_recursion",
    "solve_recursion_family",
    "derive_skein_tree",
]

_ONE = LaurentPoly.constant(1)
_V2 = LaurentPoly.monomial(2)
_VM2 = LaurentPoly.monomial(-2)
_VM4 = LaurentPoly.monomial(-4)

PolyLike = Union[LaurentPoly, FamilyPoly]


# ---------------------------------------------------------------------------
# Step formulas
# ---------------------------------------------------------------------------


def skein_tree_coefficients(signs: Sequence[int]) -> Tuple[List[LaurentPoly], LaurentPoly]:
    """Coefficients of the sequential skein expansion.

    Switching crossings of signs ``signs[0], signs[1], ...`` one after the
    other gives ``F(K) = sum_i w_i F(J_i) + w F(K')`` where ``J_i`` is the
    smoothing of crossing ``i`` after the earlier ones were switched and
    ``K'`` has all of them switched.  Returns ``([w_1, ...], w)``.
    """
    coefs = []
    acc = _ONE
    for s in signs:
        if s > 0:  # F(L+) = v^2 F(L-) + v^2 F(L0)
            coefs.append(acc * _V2)
            acc = acc * _V2
        elif s < 0:  # F(L-) = v^-2 F(L+) - F(L0)
            coefs.append(-acc)
            acc = acc * _VM2
        else:
            raise ValueError("crossing signs must be +1 or -1")
    return coefs, acc


def sequential_step(signs: Sequence[int], f_aux: Sequence[LaurentPoly], f_prev: LaurentPoly) -> LaurentPoly:
    """Evaluate the expansion of :func:`skein_tree_coefficients`."""
    if len(f_aux) != len(signs):
        raise ValueError("need one smoothed value per crossing: got %d for %d" % (len(f_aux), len(signs)))
    coefs, last = skein_tree_coefficients(signs)
    total = last * f_prev
    for c, f in zip(coefs, f_aux):
        total = total + c * f
    return total


def _check_len(values: Sequence, n: int, what: str) -> None:
    if len(values) != n:
        raise ValueError("%s needs %d values, got %d" % (what, n, len(values)))


def five_twist_step(fJ: Sequence[LaurentPoly], fPrev: LaurentPoly) -> LaurentPoly:
    """``F(K_n)`` for a five-strand twist with three strands up, two down."""
    _check_len(fJ, 10, "five_twist_step")
    j = list(fJ)
    head = (j[0] - j[1] + j[2] - j[3]) * _V2
    middle = -j[4] + j[5] - j[6] + j[7] - j[8]
    return head + middle - _VM2 * j[9] + _VM4 * fPrev


def four_twist_step(fI: Sequence[LaurentPoly], fPrev: LaurentPoly) -> LaurentPoly:
    """``F(K_n)`` for a four-strand twist with two strands each way."""
    _check_len(fI, 6, "four_twist_step")
    i = list(fI)
    return -i[0] + i[1] - i[2] + i[3] - i[4] - _VM2 * i[5] + _VM4 * fPrev


def three_twist_step(fL: LaurentPoly, fU: LaurentPoly, fV: LaurentPoly, fPrev: LaurentPoly) -> LaurentPoly:
    """``F(K_n)`` for a three-strand twist with two strands up, one down."""
    return _V2 * fL - _V2 * fU - fV + _VM2 * fPrev


def two_twist_opposite(fZ: LaurentPoly, f0: LaurentPoly, n: int) -> LaurentPoly:
    """``F(K_n)`` after ``n`` full twists on two oppositely oriented strands.

    ``fZ`` is the value of the smoothing, which does not depend on ``n``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return -fZ * geometric_sum(-2, n) + f0.shift(-2 * n)


def two_twist_same(fX: LaurentPoly, fY: LaurentPoly, lk: int, f0: LaurentPoly, n: int) -> LaurentPoly:
    """``F(K_n)`` after ``n`` full twists on two parallel strands.

    ``fX`` and ``fY`` are the components of a smoothed twist crossing and
    ``lk`` their linking number when a single full twist is present; the
    smoothing taken with ``m`` full twists has linking number ``lk + m - 1``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return DENOM * fX * fY * LaurentPoly.monomial(2 * n + 2 * lk, n) + f0.shift(2 * n)


# ---------------------------------------------------------------------------
# The recursion F_n = X + Y v^-2n + Z v^-4n + v^-4 F_{n-1}
# ---------------------------------------------------------------------------


def solve_recursion(X: LaurentPoly, Y: LaurentPoly, Z: LaurentPoly, fBase: LaurentPoly, n0: int, n: int) -> LaurentPoly:
    """Closed form of the recursion started from ``F_{n0} = fBase``.

    The propagated base term is ``v^(-4(n-n0))`` times ``fBase``: each of
    the ``n - n0`` steps multiplies it by ``v^-4``.
    """
    if n <= n0:
        raise ValueError("need n > n0, got n=%d and n0=%d" % (n, n0))
    steps = n - n0
    x_part = X * geometric_sum(-4, steps)
    y_part = (Y * geometric_sum(-2, steps)).shift(-2 * n)
    z_part = (Z * steps).shift(-4 * n)
    return x_part + y_part + z_part + fBase.shift(-4 * steps)


def _at(p: PolyLike, m: int) -> LaurentPoly:
    return p.evaluate(m, check_range=False) if isinstance(p, FamilyPoly) else p


def unroll_recursion(X: PolyLike, Y: PolyLike, Z: PolyLike, fBase: LaurentPoly, n0: int, n: int) -> LaurentPoly:
    """Apply the recursion step by step; ``X``, ``Y``, ``Z`` may depend on
    the step index through a :class:`FamilyPoly`."""
    if n < n0:
        raise ValueError("need n >= n0")
    f = fBase
    for m in range(n0 + 1, n + 1):
        f = _at(X, m) + _at(Y, m).shift(-2 * m) + _at(Z, m).shift(-4 * m) + f.shift(-4)
    return f


def _as_family(p: PolyLike) -> FamilyPoly:
    if isinstance(p, FamilyPoly):
        if p.denom_power:
            raise ValueError("recursion inputs must not carry a denominator")
        return p
    return FamilyPoly.from_laurent(p)


def _power_sum_coeffs(k: int, t: int) -> List[Tuple[LaurentPoly, int]]:
    """Solve ``R(n) - q^-1 R(n-1) = n^k`` for ``R`` of degree ``k``, where
    ``q = v^(2t)`` and ``t != 0``.

    Returns ``[(N_i, e_i)]`` with ``r_i = N_i / (1 - q^-1)^e_i``; the ``N_i``
    are integer polynomials in ``q^-1``.  Then
    ``sum_{m=a+1}^{n} m^k q^m = q^n R(n) - q^a R(a)``.
    """
    qinv = LaurentPoly.monomial(-2 * t)
    num: List[Optional[LaurentPoly]] = [None] * (k + 1)
    exp = [0] * (k + 1)
    # r_i (1 - q^-1) = [i == k] + q^-1 sum_{j > i} r_j C(j, i) (-1)^(j - i)
    for i in range(k, -1, -1):
        e = k - i + 1
        total = LaurentPoly.constant(1 if i == k else 0)
        base = 1 - qinv
        for j in range(i + 1, k + 1):
            c = comb(j, i) * (-1) ** (j - i)
            # bring r_j = N_j / (1-q^-1)^(k-j+1) to the common power k-i
            total = total + qinv * num[j] * (base ** (j - i - 1)) * c
        num[i] = total
        exp[i] = e
    return list(zip(num, exp))


def _faulhaber(k: int) -> List[Fraction]:
    """Coefficients of ``P`` with ``P(n) - P(n-1) = n^k`` and ``P(0) = 0``."""
    # Unknown P(n) = sum_{i=1}^{k+1} p_i n^i; solve from the top degree down.
    p = [Fraction(0)] * (k + 2)
    for i in range(k, -1, -1):
        # coefficient of n^i in P(n) - P(n-1) is sum_{j>i} p_j C(j,i)(-1)^(j-i+1)
        rest = sum(p[j] * comb(j, i) * (-1) ** (j - i + 1) for j in range(i + 2, k + 2))
        target = Fraction(1 if i == k else 0) - rest
        p[i + 1] = target / (i + 1)  # C(i+1, i) * (-1)^2 = i + 1
    return p


def _unit_factor(t: int) -> Tuple[LaurentPoly, LaurentPoly]:
    """Write ``1 - v^(-2t) = u * g * (v^-2 - 1)`` with ``u`` a signed
    monomial; returns ``(u, g)``."""
    if t > 0:
        g = geometric_sum(-2, t)
        return LaurentPoly.constant(-1), g
    g = geometric_sum(2, -t)
    return LaurentPoly.monomial(2), g


def _sum_term(k: int, vpoly: LaurentPoly, b: int, n0: int) -> FamilyPoly:
    """``v^-4n * sum_{m=n0+1}^{n} m^k * vpoly * v^(b m)`` as a family."""
    beta = b + 4
    if beta == 0:
        p = _faulhaber(k)
        const = sum(p[i] * Fraction(n0) ** i for i in range(len(p)))
        fam = FamilyPoly({(0, -4): tuple(p)}) - FamilyPoly({(0, -4): (const,)})
        return fam * FamilyPoly.from_laurent(vpoly)
    if beta % 2:
        raise ValueError("odd exponent slopes cannot be summed over (v^-2 - 1)")
    t = beta // 2
    u, g = _unit_factor(t)
    out = FamilyPoly()
    for i, (N, e) in enumerate(_power_sum_coeffs(k, t)):
        # r_i = N / (u g D)^e; the g^e factor has to divide the numerator.
        try:
            body = (vpoly * N).divmod_exact(g ** e)
        except ValueError:
            raise ValueError(
                "closed form needs %s to be divisible by %s" % (vpoly, g ** e)
            ) from None
        body = body * (u ** (-e))
        # q^n n^i v^-4n  minus  q^n0 n0^i v^-4n
        moving = FamilyPoly({(0, beta - 4): tuple([0] * i + [1])})
        fixed = FamilyPoly({(beta * n0, -4): (Fraction(n0) ** i,)})
        out = out + ((moving - fixed) * FamilyPoly.from_laurent(body)).over_denom(e)
    return out


def solve_recursion_family(X: PolyLike, Y: PolyLike, Z: PolyLike, fBase: LaurentPoly, n0: int) -> FamilyPoly:
    """Symbolic solution of the recursion for all ``n > n0``.

    ``X``, ``Y`` and ``Z`` may be constant Laurent polynomials or families
    whose parameter is the step index.  Each geometric sum that appears has
    ratio ``v^(2t)``; for ``|t| > 1`` the matching coefficient must be
    divisible by ``(v^(2t) - 1) / (v^2 - 1)``.  For a constant ``X`` this
    means divisibility by ``1 + v^-2``, which holds for ``X = 1 - v^-4``.

    Raises:
        ValueError: when a sum cannot be written over ``(v^-2 - 1)^d``.
    """
    result = FamilyPoly({(4 * n0, -4): (Fraction(1),)}) * FamilyPoly.from_laurent(fBase)
    for poly, shift in ((X, 0), (Y, -2), (Z, -4)):
        # group by slope b and by power of the step index
        groups: Dict[Tuple[int, int], Dict[int, Fraction]] = {}
        for (a, b), c in _as_family(poly).terms.items():
            for k, ck in enumerate(c):
                if ck:
                    groups.setdefault((b + shift, k), {})[a] = ck
        for (b, k), coeffs in sorted(groups.items()):
            scale = 1
            for x in coeffs.values():
                scale = scale * x.denominator // _gcd(scale, x.denominator)
            vpoly = LaurentPoly({a: int(x * scale) for a, x in coeffs.items()})
            part = _sum_term(k, vpoly, b, n0)
            if scale != 1:
                part = part * FamilyPoly({(0, 0): (Fraction(1, scale),)})
            result = result + part
    return result.with_validity(n0 + 1, None)


# ---------------------------------------------------------------------------
# Skein trees on diagrams
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SkeinTree:
    """Links produced by switching a marked half twist.

    Attributes:
        aux: ``aux[i]`` is the diagram with schedule crossings ``0..i-1``
            switched and crossing ``i`` smoothed.
        reduced: All schedule crossings switched; one full twist fewer.
        signs: Signs of the schedule crossings before switching.
        deltas: 0 when the smoothed crossing joined one component.
    """

    aux: Tuple[Diagram, ...]
    reduced: Diagram
    signs: Tuple[int, ...]
    deltas: Tuple[int, ...]

    def coefficients(self) -> Tuple[List[LaurentPoly], LaurentPoly]:
        return skein_tree_coefficients(self.signs)

    def combine(self, f_aux: Sequence[LaurentPoly], f_reduced: LaurentPoly) -> LaurentPoly:
        return sequential_step(self.signs, f_aux, f_reduced)


def derive_skein_tree(d: Diagram) -> SkeinTree:
    """Smooth and switch the schedule of ``d``'s twist region in order.

    For a knot every smoothed diagram must have two components; this is
    checked.

    Raises:
        RegionError: if ``d`` has no twisted region or ``k`` is not 2..5.
    """
    region = d.region
    if region is None or not region.schedule:
        raise RegionError("diagram has no twist region with at least one full twist")
    if not 2 <= region.k <= 5:
        raise RegionError("unsupported strand count %d" % region.k)
    aux = []
    deltas = []
    cur = d
    for c in region.schedule:
        smoothed, delta = resolve_crossing(cur, c)
        if d.num_components == 1 and smoothed.num_components != 2:
            raise AssertionError("smoothing a knot crossing must give two components")
        aux.append(smoothed)
        deltas.append(delta)
        cur = switch_crossings(cur, [c])
    signs = tuple(d.signs[c] for c in region.schedule)
    return SkeinTree(tuple(aux), cur, signs, tuple(deltas))
