"""Exact Laurent polynomials used by the skein engines.

Three value types live here:

* :class:`LaurentPoly` -- one variable ``v`` with integer coefficients,
  the home of the degree-zero part ``F_L``.
* :class:`HomflyPoly` -- two variables ``v`` and ``z``, the home of ``H_L``.
* :class:`FamilyPoly` -- a symbolic family indexed by an integer ``n``:
  a sum of terms ``c(n) * v^(a + b*n)`` over a fixed power of the
  denominator ``(v^-2 - 1)``.

All values are immutable.  Text rendering uses ``v^k`` tokens with explicit
signs and parses back to an identical value.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Optional, Sequence, Tuple, Union

__all__ = [
    "LaurentPoly",
    "HomflyPoly",
    "FamilyPoly",
    "PolyParseError",
    "add",
    "mul",
    "mirror",
    "geometric_sum",
    "family_eval",
    "family_equal",
    "z_degree_zero",
    "DENOM",
]


class PolyParseError(ValueError):
    """Raised when polynomial text cannot be parsed."""


# ---------------------------------------------------------------------------
# One-variable Laurent polynomials
# ---------------------------------------------------------------------------


class LaurentPoly:
    """Sparse Laurent polynomial in ``v`` with unbounded integer coefficients.

    Args:
        terms: Mapping from exponent to coefficient.  Zero coefficients are
            dropped, so two equal polynomials always have equal term maps.

    Examples:
        >>> p = LaurentPoly({2: 1, 0: -1})
        >>> str(p * p)
        'v^4 - 2v^2 + 1'
        >>> LaurentPoly.parse(str(p)) == p
        True
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[int, int]] = None) -> None:
        clean: Dict[int, int] = {}
        if terms:
            for e, c in terms.items():
                if c:
                    clean[int(e)] = int(c)
        self._terms = clean
        self._hash: Optional[int] = None

    @classmethod
    def _raw(cls, terms: Dict[int, int]) -> "LaurentPoly":
        # Trusted constructor: caller guarantees no zero coefficients.
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> Dict[int, int]:
        """A copy of the exponent -> coefficient map."""
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[int, int]]:
        """Terms in display order (decreasing exponent)."""
        for e in sorted(self._terms, reverse=True):
            yield e, self._terms[e]

    def coeff(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def max_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(self._terms)

    def min_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return min(self._terms)

    def exponents(self) -> list:
        return sorted(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: Union["LaurentPoly", int]) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Union["LaurentPoly", int]) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> "LaurentPoly":
        return LaurentPoly.constant(other) - self

    def __mul__(self, other: Union["LaurentPoly", int]) -> "LaurentPoly":
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly._raw({})
            return LaurentPoly._raw({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (eb, cb), = b.items()
            return LaurentPoly._raw({e + eb: c * cb for e, c in a.items()})
        out: Dict[int, int] = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials can be inverted")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("monomial coefficient is not a unit")
            return LaurentPoly({-e * (-k): c ** (-k)})
        result = LaurentPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``v^k``."""
        if k == 0:
            return self
        return LaurentPoly._raw({e + k: c for e, c in self._terms.items()})

    def mirror(self) -> "LaurentPoly":
        """Substitute ``v -> v^-1``."""
        return LaurentPoly._raw({-e: c for e, c in self._terms.items()})

    def evaluate(self, v: Union[int, Fraction]) -> Fraction:
        total = Fraction(0)
        for e, c in self._terms.items():
            total += c * Fraction(v) ** e
        return total

    def divmod_exact(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Exact division; raises ``ValueError`` when a remainder is left."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        lead_e = divisor.max_degree()
        lead_c = divisor._terms[lead_e]
        low_e = divisor.min_degree()
        rem = dict(self._terms)
        quot: Dict[int, int] = {}
        while rem:
            top = max(rem)
            if top - lead_e < min(rem) - low_e:
                break
            q, r = divmod(rem[top], lead_c)
            if r:
                break
            shift = top - lead_e
            quot[shift] = q
            for e, c in divisor._terms.items():
                k = e + shift
                s = rem.get(k, 0) - q * c
                if s:
                    rem[k] = s
                else:
                    rem.pop(k, None)
        if rem:
            raise ValueError("polynomial is not divisible by %s" % divisor)
        return LaurentPoly(quot)

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- text ---------------------------------------------------------------

    def __str__(self) -> str:
        return _render_terms(((c, _v_power(e)) for e, c in self.items()))

    def __repr__(self) -> str:
        return "LaurentPoly(%r)" % str(self)

    def to_latex(self) -> str:
        parts = []
        for e, c in self.items():
            mono = "" if e == 0 else ("v" if e == 1 else "v^{%d}" % e)
            parts.append((c, mono))
        return _render_terms(parts, latex=True)

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Parse text such as ``2v^4 - 6v^2 + 7 - 2v^-2``."""
        h = HomflyPoly.parse(text)
        out: Dict[int, int] = {}
        for (ev, ez), c in h.terms.items():
            if ez != 0:
                raise PolyParseError("unexpected z in one-variable polynomial: %r" % text)
            out[ev] = c
        return cls(out)


def _v_power(e: int, var: str = "v") -> str:
    if e == 0:
        return ""
    if e == 1:
        return var
    return "%s^%d" % (var, e)


def _render_terms(terms: Iterable[Tuple[int, str]], latex: bool = False) -> str:
    out = []
    for c, mono in terms:
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if mono == "":
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = "%d%s" % (a, mono)
        if not out:
            out.append(body if sign == "+" else "-" + body)
        else:
            out.append("%s %s" % (sign, body))
    return " ".join(out) if out else "0"


# ---------------------------------------------------------------------------
# Two-variable polynomials
# ---------------------------------------------------------------------------

_MONO_RE = re.compile(
    r"""
    (?P<sign>[+-])?\s*
    (?P<coef>\d+)?\s*\*?\s*
    (?P<factors>(?:[vz]\s*(?:\^\s*(?:\{\s*-?\d+\s*\}|\(\s*-?\d+\s*\)|-?\d+))?\s*\*?\s*)*)
    """,
    re.VERBOSE,
)
_FACTOR_RE = re.compile(r"([vz])\s*(?:\^\s*(?:\{\s*(-?\d+)\s*\}|\(\s*(-?\d+)\s*\)|(-?\d+)))?")


class HomflyPoly:
    """Sparse Laurent polynomial in ``v`` and ``z``.

    Terms are keyed by ``(power of v, power of z)``.  Display order is by
    decreasing ``v`` exponent, then decreasing ``z`` exponent.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Tuple[int, int], int]] = None) -> None:
        clean: Dict[Tuple[int, int], int] = {}
        if terms:
            for (a, b), c in terms.items():
                if c:
                    clean[(int(a), int(b))] = int(c)
        self._terms = clean
        self._hash: Optional[int] = None

    @classmethod
    def _raw(cls, terms: Dict[Tuple[int, int], int]) -> "HomflyPoly":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, v_exp: int, z_exp: int, coeff: int = 1) -> "HomflyPoly":
        return cls({(v_exp, z_exp): coeff})

    @classmethod
    def constant(cls, c: int) -> "HomflyPoly":
        return cls({(0, 0): c})

    @classmethod
    def from_laurent(cls, p: LaurentPoly, z_exp: int = 0) -> "HomflyPoly":
        return cls({(e, z_exp): c for e, c in p.terms.items()})

    @property
    def terms(self) -> Dict[Tuple[int, int], int]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Tuple[int, int], int]]:
        for k in sorted(self._terms, key=lambda t: (-t[0], -t[1])):
            yield k, self._terms[k]

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other: "HomflyPoly") -> "HomflyPoly":
        if isinstance(other, int):
            other = HomflyPoly.constant(other)
        if not isinstance(other, HomflyPoly):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return HomflyPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "HomflyPoly":
        return HomflyPoly._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "HomflyPoly") -> "HomflyPoly":
        if isinstance(other, int):
            other = HomflyPoly.constant(other)
        return self + (-other)

    def __mul__(self, other: Union["HomflyPoly", int]) -> "HomflyPoly":
        if isinstance(other, int):
            if other == 0:
                return HomflyPoly._raw({})
            return HomflyPoly._raw({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, HomflyPoly):
            return NotImplemented
        out: Dict[Tuple[int, int], int] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                k = (a1 + a2, b1 + b2)
                out[k] = out.get(k, 0) + c1 * c2
        return HomflyPoly._raw({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "HomflyPoly":
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = HomflyPoly.constant(1)
        for _ in range(k):
            result = result * self
        return result

    def shift(self, dv: int, dz: int = 0) -> "HomflyPoly":
        """Multiply by ``v^dv z^dz``."""
        return HomflyPoly._raw({(a + dv, b + dz): c for (a, b), c in self._terms.items()})

    def mirror(self) -> "HomflyPoly":
        """Value of the mirror link: ``v -> v^-1`` and ``z -> -z``."""
        return HomflyPoly._raw(
            {(-a, b): (-c if b % 2 else c) for (a, b), c in self._terms.items()}
        )

    def z_coefficient(self, z_exp: int) -> LaurentPoly:
        return LaurentPoly({a: c for (a, b), c in self._terms.items() if b == z_exp})

    def z_exponents(self) -> list:
        return sorted({b for (_, b) in self._terms})

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self._terms == ({(0, 0): other} if other else {})
        if not isinstance(other, HomflyPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __str__(self) -> str:
        return _render_terms((c, _v_power(a) + _v_power(b, "z")) for (a, b), c in self.items())

    def __repr__(self) -> str:
        return "HomflyPoly(%r)" % str(self)

    def to_latex(self) -> str:
        def mono(a: int, b: int) -> str:
            s = "" if a == 0 else ("v" if a == 1 else "v^{%d}" % a)
            s += "" if b == 0 else ("z" if b == 1 else "z^{%d}" % b)
            return s

        return _render_terms(((c, mono(a, b)) for (a, b), c in self.items()), latex=True)

    @classmethod
    def parse(cls, text: str) -> "HomflyPoly":
        """Parse text such as ``v^-2 - 1 + v^2 - z^2``.

        Accepted monomials are an optional integer coefficient followed by
        ``v`` and ``z`` factors with optional exponents written ``^k``,
        ``^(k)`` or ``^{k}``.  Juxtaposition or ``*`` both mean product.
        """
        s = text.strip()
        if not s:
            raise PolyParseError("empty polynomial text")
        pos = 0
        out: Dict[Tuple[int, int], int] = {}
        first = True
        while pos < len(s):
            while pos < len(s) and s[pos].isspace():
                pos += 1
            if pos >= len(s):
                break
            m = _MONO_RE.match(s, pos)
            if m is None or m.end() == pos:
                raise PolyParseError("cannot parse %r at offset %d" % (text, pos))
            sign, coef, factors = m.group("sign"), m.group("coef"), m.group("factors")
            if not first and sign is None:
                raise PolyParseError("missing sign between terms in %r" % text)
            if coef is None and not factors.strip():
                raise PolyParseError("empty term in %r" % text)
            c = int(coef) if coef is not None else 1
            if sign == "-":
                c = -c
            ev = ez = 0
            consumed = 0
            for f in _FACTOR_RE.finditer(factors):
                var = f.group(1)
                exp_s = f.group(2) or f.group(3) or f.group(4)
                k = int(exp_s) if exp_s is not None else 1
                if var == "v":
                    ev += k
                else:
                    ez += k
                consumed += 1
            if factors.strip() and consumed == 0:
                raise PolyParseError("bad factor in %r" % text)
            key = (ev, ez)
            out[key] = out.get(key, 0) + c
            pos = m.end()
            first = False
        return cls(out)


# ---------------------------------------------------------------------------
# Symbolic families in n
# ---------------------------------------------------------------------------

Coeff = Tuple[Fraction, ...]  # polynomial in n, lowest degree first


def _coeff_trim(c: Sequence[Fraction]) -> Coeff:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(Fraction(x) for x in c)


def _coeff_add(a: Coeff, b: Coeff) -> Coeff:
    n = max(len(a), len(b))
    return _coeff_trim(
        [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]
    )


def _coeff_mul(a: Coeff, b: Coeff) -> Coeff:
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _coeff_trim(out)


def _coeff_eval(a: Coeff, n: int) -> Fraction:
    total = Fraction(0)
    for c in reversed(a):
        total = total * n + c
    return total


def _coeff_str(a: Coeff) -> str:
    parts = []
    for deg in range(len(a) - 1, -1, -1):
        c = a[deg]
        if c == 0:
            continue
        mono = "" if deg == 0 else ("n" if deg == 1 else "n^%d" % deg)
        mag = abs(c)
        if mono and mag == 1:
            body = mono
        elif mag.denominator == 1:
            body = "%d%s" % (mag.numerator, mono)
        else:
            body = "%d%s/%d" % (mag.numerator, mono, mag.denominator)
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"


def _exp_str(a: int, b: int) -> str:
    if b == 0:
        return str(a)
    nb = "n" if b == 1 else ("-n" if b == -1 else "%dn" % b)
    if a == 0:
        return nb
    return "%s%+d" % (nb, a)


DENOM = LaurentPoly({-2: 1, 0: -1})
"""The fixed denominator ``v^-2 - 1``."""


class FamilyPoly:
    """A family ``n -> (sum_t c_t(n) v^(a_t + b_t n)) / (v^-2 - 1)^d``.

    Coefficients ``c_t`` are polynomials in ``n`` with rational coefficients;
    evaluation must produce integers.  Terms are kept in normal form: one
    entry per exponent pair ``(a, b)``, no zero coefficients.

    Args:
        terms: Mapping ``(a, b) -> coefficient polynomial`` where the
            coefficient is a sequence ``(c0, c1, ...)`` meaning
            ``c0 + c1*n + ...``.
        denom_power: Power ``d >= 0`` of the denominator.
        valid_from: Smallest ``n`` for which the family is asserted.
        valid_to: Largest ``n`` for which the family is asserted.
    """

    __slots__ = ("_terms", "denom_power", "valid_from", "valid_to")

    def __init__(
        self,
        terms: Optional[Mapping[Tuple[int, int], Sequence]] = None,
        denom_power: int = 0,
        valid_from: Optional[int] = None,
        valid_to: Optional[int] = None,
    ) -> None:
        if denom_power < 0:
            raise ValueError("denominator power must be nonnegative")
        clean: Dict[Tuple[int, int], Coeff] = {}
        if terms:
            for (a, b), c in terms.items():
                if isinstance(c, (int, Fraction)):
                    c = (c,)
                cc = _coeff_trim(c)
                if cc:
                    key = (int(a), int(b))
                    prev = clean.get(key, ())
                    s = _coeff_add(prev, cc)
                    if s:
                        clean[key] = s
                    else:
                        clean.pop(key, None)
        self._terms = clean
        self.denom_power = denom_power
        self.valid_from = valid_from
        self.valid_to = valid_to

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_laurent(cls, p: LaurentPoly, **kw) -> "FamilyPoly":
        return cls({(e, 0): (c,) for e, c in p.terms.items()}, **kw)

    @classmethod
    def n_power(cls, b: int, a: int = 0) -> "FamilyPoly":
        """The family ``v^(a + b n)``."""
        return cls({(a, b): (1,)})

    @classmethod
    def n(cls) -> "FamilyPoly":
        """The family ``n`` (as a constant in ``v``)."""
        return cls({(0, 0): (0, 1)})

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> Dict[Tuple[int, int], Coeff]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def in_range(self, n: int) -> bool:
        if self.valid_from is not None and n < self.valid_from:
            return False
        if self.valid_to is not None and n > self.valid_to:
            return False
        return True

    def with_validity(self, valid_from: Optional[int], valid_to: Optional[int]) -> "FamilyPoly":
        return FamilyPoly(self._terms, self.denom_power, valid_from, valid_to)

    # -- arithmetic ---------------------------------------------------------

    def _lift(self, other: Union["FamilyPoly", LaurentPoly, int]) -> "FamilyPoly":
        if isinstance(other, FamilyPoly):
            return other
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if isinstance(other, LaurentPoly):
            return FamilyPoly.from_laurent(other)
        raise TypeError("cannot combine FamilyPoly with %r" % type(other))

    def _numerator_times_denom(self, k: int) -> Dict[Tuple[int, int], Coeff]:
        result = FamilyPoly(self._terms)
        dfam = FamilyPoly.from_laurent(DENOM)
        for _ in range(k):
            result = result._mul_numerators(dfam)
        return result._terms

    def _mul_numerators(self, other: "FamilyPoly") -> "FamilyPoly":
        out: Dict[Tuple[int, int], Coeff] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                key = (a1 + a2, b1 + b2)
                out[key] = _coeff_add(out.get(key, ()), _coeff_mul(c1, c2))
        return FamilyPoly({k: c for k, c in out.items() if c})

    def _common(self, other: "FamilyPoly"):
        d = max(self.denom_power, other.denom_power)
        a = self._numerator_times_denom(d - self.denom_power)
        b = other._numerator_times_denom(d - other.denom_power)
        return a, b, d

    def __add__(self, other) -> "FamilyPoly":
        other = self._lift(other)
        a, b, d = self._common(other)
        out = dict(a)
        for k, c in b.items():
            s = _coeff_add(out.get(k, ()), c)
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return FamilyPoly(out, d, *_merge_validity(self, other))

    __radd__ = __add__

    def __neg__(self) -> "FamilyPoly":
        return FamilyPoly(
            {k: tuple(-x for x in c) for k, c in self._terms.items()},
            self.denom_power,
            self.valid_from,
            self.valid_to,
        )

    def __sub__(self, other) -> "FamilyPoly":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "FamilyPoly":
        return self._lift(other) - self

    def __mul__(self, other) -> "FamilyPoly":
        other = self._lift(other)
        prod = self._mul_numerators(other)
        return FamilyPoly(
            prod._terms, self.denom_power + other.denom_power, *_merge_validity(self, other)
        )

    __rmul__ = __mul__

    def over_denom(self, k: int = 1) -> "FamilyPoly":
        """Divide by ``(v^-2 - 1)^k`` symbolically."""
        return FamilyPoly(self._terms, self.denom_power + k, self.valid_from, self.valid_to)

    def substitute(self, scale: int, offset: int = 0) -> "FamilyPoly":
        """The family ``n -> self(scale*n + offset)``."""
        out: Dict[Tuple[int, int], Coeff] = {}
        lin = (Fraction(offset), Fraction(scale))
        for (a, b), c in self._terms.items():
            new_c: Coeff = ()
            power: Coeff = (Fraction(1),)
            for x in c:
                new_c = _coeff_add(new_c, _coeff_mul((x,), power))
                power = _coeff_mul(power, lin)
            key = (a + b * offset, b * scale)
            out[key] = _coeff_add(out.get(key, ()), new_c)
        vf, vt = None, None
        return FamilyPoly({k: c for k, c in out.items() if c}, self.denom_power, vf, vt)

    def mirror(self) -> "FamilyPoly":
        """Substitute ``v -> v^-1``.

        The denominator ``v^-2 - 1`` becomes ``v^2 - 1 = -v^2 (v^-2 - 1)``,
        so each denominator factor contributes ``-v^-2`` to the numerator.
        """
        d = self.denom_power
        sign = -1 if d % 2 else 1
        out = {(-a - 2 * d, -b): tuple(sign * x for x in c) for (a, b), c in self._terms.items()}
        return FamilyPoly(out, d, self.valid_from, self.valid_to)

    # -- evaluation ---------------------------------------------------------

    def numerator_at(self, n: int) -> LaurentPoly:
        acc: Dict[int, Fraction] = {}
        for (a, b), c in self._terms.items():
            e = a + b * n
            acc[e] = acc.get(e, Fraction(0)) + _coeff_eval(c, n)
        out: Dict[int, int] = {}
        for e, x in acc.items():
            if x.denominator != 1:
                raise ValueError("family has non-integral coefficient at n=%d" % n)
            out[e] = x.numerator
        return LaurentPoly(out)

    def evaluate(self, n: int, check_range: bool = True) -> LaurentPoly:
        if check_range and not self.in_range(n):
            raise ValueError("n=%d is outside the family's validity range" % n)
        num = self.numerator_at(n)
        if self.denom_power == 0:
            return num
        try:
            return num.divmod_exact(DENOM ** self.denom_power)
        except ValueError as exc:
            raise ValueError("malformed family: numerator at n=%d is not divisible" % n) from exc

    # -- comparison ---------------------------------------------------------

    def equals(self, other: "FamilyPoly") -> bool:
        a, b, _ = self._common(other)
        return a == b

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FamilyPoly):
            return NotImplemented
        return self.equals(other)

    def __hash__(self) -> int:  # pragma: no cover - families are rarely hashed
        return hash((frozenset(self._terms.items()), self.denom_power))

    # -- text ---------------------------------------------------------------

    def __str__(self) -> str:
        keys = sorted(self._terms, key=lambda k: (-k[1], -k[0]))
        parts = []
        for a, b in keys:
            c = self._terms[(a, b)]
            if b == 0 and a == 0:
                mono = ""
            elif b == 0:
                mono = _v_power(a)
            else:
                mono = "v^(%s)" % _exp_str(a, b)
            if len(c) == 1 and c[0].denominator == 1:
                val = c[0].numerator
                sign = "-" if val < 0 else "+"
                mag = abs(val)
                body = str(mag) if not mono else (mono if mag == 1 else "%d%s" % (mag, mono))
            else:
                sign = "+"
                body = "(%s)%s" % (_coeff_str(c), mono)
            if not parts:
                parts.append(body if sign == "+" else "-" + body)
            else:
                parts.append("%s %s" % (sign, body))
        num = " ".join(parts) if parts else "0"
        if self.denom_power == 0:
            return num
        den = "(v^-2 - 1)" if self.denom_power == 1 else "(v^-2 - 1)^%d" % self.denom_power
        return "(%s) / %s" % (num, den)

    def __repr__(self) -> str:
        return "FamilyPoly(%r)" % str(self)

    @classmethod
    def parse(cls, text: str) -> "FamilyPoly":
        """Parse a family expression.

        The grammar is ordinary arithmetic with ``+``, ``-``, ``*``,
        parentheses, integers, the parameter ``n``, and powers ``v^e`` where
        ``e`` is an integer or an affine expression in ``n`` written in
        parentheses or braces, for example ``v^(-2n+2)``.  A single trailing
        division by ``(v^-2 - 1)`` or a power of it is allowed.
        """
        return _FamilyParser(text).parse()


def _merge_validity(f: FamilyPoly, g: FamilyPoly) -> Tuple[Optional[int], Optional[int]]:
    lo = [x for x in (f.valid_from, g.valid_from) if x is not None]
    hi = [x for x in (f.valid_to, g.valid_to) if x is not None]
    return (max(lo) if lo else None, min(hi) if hi else None)


class _FamilyParser:
    _TOKEN = re.compile(r"\s*(?:(\d+)|(.))")

    def __init__(self, text: str) -> None:
        if not text.strip():
            raise PolyParseError("empty family text")
        self.text = text
        self.toks: list = []
        for m in re.finditer(r"\d+|[A-Za-z]|\S", text):
            self.toks.append(m.group(0))
        self.i = 0

    def peek(self) -> Optional[str]:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, expected: Optional[str] = None) -> str:
        t = self.peek()
        if t is None or (expected is not None and t != expected):
            raise PolyParseError("expected %r in %r" % (expected, self.text))
        self.i += 1
        return t

    def parse(self) -> FamilyPoly:
        value = self.expr()
        if self.peek() == "/":
            self.take("/")
            den = self.factor()
            d = _denominator_power(den)
            value = value.over_denom(d)
        if self.peek() is not None:
            raise PolyParseError("trailing input %r in %r" % (self.peek(), self.text))
        return value

    def expr(self) -> FamilyPoly:
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
        value = self.term()
        if sign < 0:
            value = -value
        while self.peek() in ("+", "-"):
            op = self.take()
            t = self.term()
            value = value + t if op == "+" else value - t
        return value

    def term(self) -> FamilyPoly:
        value = self.factor()
        while True:
            t = self.peek()
            if t == "*":
                self.take()
                value = value * self.factor()
            elif t is not None and (t.isdigit() or t in ("v", "n", "(")):
                value = value * self.factor()
            else:
                return value

    def factor(self) -> FamilyPoly:
        t = self.peek()
        if t is None:
            raise PolyParseError("unexpected end of %r" % self.text)
        if t.isdigit():
            self.take()
            base = FamilyPoly.from_laurent(LaurentPoly.constant(int(t)))
        elif t == "n":
            self.take()
            base = FamilyPoly.n()
        elif t == "v":
            self.take()
            if self.peek() == "^":
                self.take()
                a, b = self.exponent()
            else:
                a, b = 1, 0
            return FamilyPoly.n_power(b, a)
        elif t in ("(", "{", "["):
            close = {"(": ")", "{": "}", "[": "]"}[t]
            self.take()
            base = self.expr()
            self.take(close)
        elif t == "-":
            self.take()
            return -self.factor()
        else:
            raise PolyParseError("unexpected %r in %r" % (t, self.text))
        if self.peek() == "^":
            self.take()
            k = int(self.take())
            result = FamilyPoly.from_laurent(LaurentPoly.constant(1))
            for _ in range(k):
                result = result * base
            return result
        return base

    def exponent(self) -> Tuple[int, int]:
        t = self.peek()
        if t in ("(", "{"):
            close = ")" if t == "(" else "}"
            self.take()
            a, b = self.affine()
            self.take(close)
            return a, b
        sign = 1
        if t == "-":
            self.take()
            sign = -1
        tok = self.take()
        if tok == "n":
            return 0, sign
        if not tok.isdigit():
            raise PolyParseError("bad exponent in %r" % self.text)
        return sign * int(tok), 0

    def affine(self) -> Tuple[int, int]:
        a = b = 0
        sign = 1
        first = True
        while True:
            t = self.peek()
            if t in ("+", "-"):
                self.take()
                sign = -1 if t == "-" else 1
            elif not first:
                return a, b
            t = self.peek()
            if t is None:
                raise PolyParseError("bad exponent in %r" % self.text)
            if t.isdigit():
                k = int(self.take())
                if self.peek() == "*":
                    self.take()
                if self.peek() == "n":
                    self.take()
                    b += sign * k
                else:
                    a += sign * k
            elif t == "n":
                self.take()
                b += sign
            else:
                raise PolyParseError("bad exponent in %r" % self.text)
            first = False
            sign = 1
            if self.peek() not in ("+", "-"):
                return a, b


def _denominator_power(den: FamilyPoly) -> int:
    """Recognise ``(v^-2 - 1)^d`` and return ``d``."""
    target = FamilyPoly.from_laurent(LaurentPoly.constant(1))
    dfam = FamilyPoly.from_laurent(DENOM)
    for d in range(0, 8):
        if den.equals(target):
            return d
        target = target * dfam
    raise PolyParseError("only powers of (v^-2 - 1) may appear as a denominator")


# ---------------------------------------------------------------------------
# Functional interface
# ---------------------------------------------------------------------------


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def mirror(p: LaurentPoly) -> LaurentPoly:
    return p.mirror()


def geometric_sum(step: int, count: int) -> LaurentPoly:
    """Return ``sum_{k=0}^{count-1} v^(step*k)``; zero when ``count == 0``."""
    if count < 0:
        raise ValueError("count must be nonnegative")
    return LaurentPoly({step * k: 1 for k in range(count)}) if step else LaurentPoly.constant(count)


def family_eval(f: FamilyPoly, n: int, reduced: bool = True):
    """Evaluate a family at ``n``.

    With ``reduced=True`` the exact quotient is returned; otherwise the pair
    ``(numerator, denom_power)``.
    """
    if reduced:
        return f.evaluate(n)
    if not f.in_range(n):
        raise ValueError("n=%d is outside the family's validity range" % n)
    return f.numerator_at(n), f.denom_power


def family_equal(f: FamilyPoly, g: FamilyPoly) -> bool:
    return f.equals(g)


def z_degree_zero(h: HomflyPoly, num_components: int) -> LaurentPoly:
    """Return ``F``: the ``z^0`` coefficient of ``(v^-1 z)^(#L - 1) H``.

    Raises:
        ValueError: if odd powers of ``z`` remain after normalization, which
            can only happen when ``h`` is not a HOMFLYPT value of a link with
            ``num_components`` components.
    """
    if num_components < 1:
        raise ValueError("a link has at least one component")
    k = num_components - 1
    normalized = h.shift(-k, k)
    if any(b % 2 for (_, b) in normalized.terms):
        raise ValueError("odd z-power after normalization; inconsistent component count")
    return normalized.z_coefficient(0)
