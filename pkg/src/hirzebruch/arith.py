"""
Exact integer and rational primitives.

Rationals are :class:`fractions.Fraction` throughout; nothing in the
package touches floating point.  Continued fractions are the negative
(Hirzebruch-Jung) kind::

    n/q = b1 - 1/(b2 - 1/(... - 1/bu)),   every bi >= 2
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence, Tuple

from .errors import DomainError

#: Exact rational type used across the package.
ExactRational = Fraction

#: Terms [b1, ..., bu] of a negative continued fraction.
ContinuedFraction = Tuple[int, ...]


def egcd(a: int, b: int) -> tuple[int, int, int]:
    """
    Extended Euclid.

    Returns ``(g, x, y)`` with ``g = gcd(a, b) >= 1`` and ``a*x + b*y == g``.

    >>> egcd(12, 5)
    (1, -2, 5)
    >>> egcd(7, 0)
    (7, 1, 0)
    """
    if a == 0 and b == 0:
        raise DomainError("egcd(0, 0) is undefined")
    x0, y0, x1, y1 = 1, 0, 0, 1
    r0, r1 = a, b
    while r1:
        t = r0 // r1
        r0, r1 = r1, r0 - t * r1
        x0, x1 = x1, x0 - t * x1
        y0, y1 = y1, y0 - t * y1
    if r0 < 0:
        r0, x0, y0 = -r0, -x0, -y0
    return r0, x0, y0


def mod_inverse_of_negative(c: int, modulus: int) -> int:
    """
    The unique ``beta`` in ``(0, modulus)`` with ``(-c) * beta == 1 (mod modulus)``.

    A modulus of 1 gives 0, which encodes the regular leaf ``(1, 0)``.

    >>> mod_inverse_of_negative(5, 11)
    2
    >>> mod_inverse_of_negative(7, 1)
    0
    """
    if modulus < 1:
        raise DomainError(f"modulus must be >= 1, got {modulus}")
    if gcd(c, modulus) != 1:
        raise DomainError(f"gcd({c}, {modulus}) != 1, no inverse exists")
    if modulus == 1:
        return 0
    g, x, _ = egcd(-c % modulus, modulus)
    return x % modulus


def cf_expand(n: int, q: int) -> ContinuedFraction:
    """
    Negative continued fraction of ``n/q`` for coprime ``1 <= q <= n``.

    ``(1, 1)`` is the only input with ``q == n`` and maps to the empty tuple.

    >>> cf_expand(12, 5)
    (3, 2, 3)
    >>> cf_expand(1, 1)
    ()
    """
    if not (1 <= q <= n):
        raise DomainError(f"need 1 <= q <= n, got n={n}, q={q}")
    if gcd(n, q) != 1:
        raise DomainError(f"gcd({n}, {q}) != 1")
    if n == 1:
        return ()
    terms = []
    while q:
        b = -(-n // q)
        terms.append(b)
        n, q = q, b * q - n
    return tuple(terms)


def cf_eval(cf: Sequence[int]) -> Fraction:
    """
    Evaluate ``[b1, ..., bu]`` back to a fraction; the empty list is 1.

    >>> cf_eval([3, 2, 3])
    Fraction(12, 5)
    """
    if any(b < 2 for b in cf):
        raise DomainError(f"all terms must be >= 2, got {list(cf)}")
    if not cf:
        return Fraction(1)
    value = Fraction(cf[-1])
    for b in reversed(cf[:-1]):
        value = b - 1 / value
    return value
