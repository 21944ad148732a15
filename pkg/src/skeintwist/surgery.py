"""Slope arithmetic for surgeries on the Hopf link and on the twist families.

Surgery on a Hopf link with slopes ``p/q`` and ``r/s`` gives a lens space
whose first homology has order ``|pr - qs|``; it is the 3-sphere exactly
when that number is 1.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence, Tuple

__all__ = ["hopf_s3_test", "hopf_homology_order", "shared_slopes", "homology_order", "SlopeError"]


class SlopeError(ValueError):
    """A slope pair is not a reduced fraction."""


def _check_slope(p: int, q: int) -> None:
    if p == 0 and q == 0:
        raise SlopeError("0/0 is not a slope")
    if gcd(p, q) != 1:
        raise SlopeError("slope %d/%d is not in lowest terms" % (p, q))


def hopf_homology_order(p: int, q: int, r: int, s: int) -> int:
    """``|H_1|`` of ``(p/q, r/s)`` surgery on the Hopf link; 0 means infinite."""
    _check_slope(p, q)
    _check_slope(r, s)
    return abs(p * r - q * s)


def hopf_s3_test(p: int, q: int, r: int, s: int) -> bool:
    """True iff ``(p/q, r/s)`` surgery on the Hopf link is the 3-sphere.

    >>> hopf_s3_test(1, 1, 0, 1)
    True
    >>> hopf_s3_test(2, 1, 2, 1)
    False
    """
    return hopf_homology_order(p, q, r, s) == 1


def shared_slopes(n: int, lk_bg: int) -> Tuple[int, int, int, int]:
    """The four integral slopes on which ``K_n`` and ``K'_n`` share surgeries.

    ``lk_bg`` is the linking number of the blue and green curves; the
    slopes shift by four when the clasp between them changes sign.
    """
    if lk_bg == -1:
        return (n + 1, n + 2, n + 3, 2 * n + 2)
    if lk_bg == 1:
        return (n - 3, n - 2, n - 1, 2 * n - 2)
    raise ValueError("lk_bg must be -1 or +1")


def homology_order(framing_matrix: Sequence[Sequence[int]]) -> int:
    """``|det|`` of an integral linking matrix; 0 encodes infinite homology.

    The determinant is computed exactly by fraction-free elimination.
    """
    m = [list(row) for row in framing_matrix]
    size = len(m)
    if any(len(row) != size for row in m):
        raise ValueError("framing matrix must be square")
    if size == 0:
        return 1
    for row in m:
        for x in row:
            if isinstance(x, bool) or not isinstance(x, int) and not (
                isinstance(x, Fraction) and x.denominator == 1
            ):
                raise ValueError("framing matrix entries must be integers")
    m = [[int(x) for x in row] for row in m]
    return abs(_bareiss(m))


def _bareiss(m):
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]
