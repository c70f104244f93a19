"""
Seifert invariants of the boundary L of the Milnor fiber.

The base has genus ``(m-1)(d-1)``, the integral Euler number is ``m`` and
there are ``2m`` possibly exceptional leaves: ``m`` copies of
``(l_bar, beta')`` with ``-k_bar * beta' == 1 (mod l_bar)`` and ``m`` copies
of ``(k_bar, beta'')`` with ``-l_bar * beta'' == 1 (mod k_bar)``.

Besides the closed form this module carries the independent routes used to
cross-check it: the periodic-map-to-Seifert dictionary, the hat-leaf
invariants of the glued pieces and the gluing equation for ``e``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .arith import mod_inverse_of_negative
from .errors import DomainError, InvariantViolation, UnsupportedCaseError
from .germ import Germ
from .lens import LensSpace


@dataclass(frozen=True, order=True)
class SeifertLeaf:
    alpha: int
    beta: int

    def __post_init__(self):
        if self.alpha < 1:
            raise DomainError(f"alpha must be >= 1, got {self.alpha}")
        if self.alpha == 1:
            if self.beta != 0:
                raise DomainError("a regular leaf is normalized as (1, 0)")
        elif not (0 < self.beta < self.alpha) or gcd(self.alpha, self.beta) != 1:
            raise DomainError(f"({self.alpha},{self.beta}) is not a normalized Seifert pair")

    @property
    def is_exceptional(self) -> bool:
        return self.alpha >= 2

    def __str__(self):
        return f"({self.alpha},{self.beta})"


@dataclass(frozen=True)
class SeifertPresentation:
    genus: int
    euler_integral: int
    leaves: tuple[SeifertLeaf, ...]
    trivial_leaf_count: int = 0

    def __post_init__(self):
        if any(not leaf.is_exceptional for leaf in self.leaves):
            raise DomainError("regular leaves belong in trivial_leaf_count")

    def leaf_counts(self) -> Counter:
        return Counter(self.leaves)

    @property
    def rational_euler_number(self) -> Fraction:
        return rational_euler_number(self)


def leaf_xside(g: Germ) -> SeifertLeaf:
    """The leaf family ``(alpha', beta')`` with ``alpha' = l_bar``."""
    dg = g.derived
    return SeifertLeaf(dg.l_bar, mod_inverse_of_negative(dg.k_bar, dg.l_bar))


def leaf_yside(g: Germ) -> SeifertLeaf:
    """The leaf family ``(alpha'', beta'')`` with ``alpha'' = k_bar``."""
    dg = g.derived
    return SeifertLeaf(dg.k_bar, mod_inverse_of_negative(dg.l_bar, dg.k_bar))


def seifert_genus(g: Germ) -> int:
    return (g.m - 1) * (g.derived.d - 1)


def seifert_presentation(g: Germ) -> SeifertPresentation:
    leaves = []
    trivial = 0
    for leaf in (leaf_xside(g), leaf_yside(g)):
        if leaf.is_exceptional:
            leaves.extend([leaf] * g.m)
        else:
            trivial += g.m
    return SeifertPresentation(
        genus=seifert_genus(g),
        euler_integral=g.m,
        leaves=tuple(leaves),
        trivial_leaf_count=trivial,
    )


def rational_euler_number(p: SeifertPresentation) -> Fraction:
    """``e0 = e - sum(beta_i / alpha_i)`` over the exceptional leaves."""
    return p.euler_integral - sum((Fraction(leaf.beta, leaf.alpha) for leaf in p.leaves), Fraction(0))


def rational_euler_closed_form(g: Germ) -> Fraction:
    dg = g.derived
    return Fraction(g.m, dg.k_bar * dg.l_bar)


def lens_space_classification(g: Germ) -> LensSpace | None:
    """
    Which lens space L is, if any.

    ``k = l = 1`` gives ``L(m, m-1)``; ``m = 2`` with ``min(k, l) = 1`` and
    ``max(k, l) >= 2`` gives ``L(2 max(k, l), 1)``.  Everything else has
    positive base genus or more than two exceptional leaves.
    """
    k, l = sorted((g.k, g.l))
    if k == l == 1:
        return LensSpace(g.m, g.m - 1)
    if g.m == 2 and k == 1:
        return LensSpace(2 * l, 1)
    return None


def nielsen_to_seifert(omega: int, lam: int) -> SeifertLeaf:
    """
    Seifert pair of the exceptional leaf in the mapping torus of a periodic
    map that rotates by ``omega / lam`` of a turn around a fixed point.
    """
    if lam < 1:
        raise DomainError(f"period must be >= 1, got {lam}")
    if gcd(omega % lam, lam) != 1:
        raise DomainError(f"rotation {omega}/{lam} is not primitive")
    if lam == 1:
        return SeifertLeaf(1, 0)
    return SeifertLeaf(lam, pow(omega, -1, lam))


def hat_leaf(g: Germ, side: str) -> tuple[int, int]:
    """
    Reduced ``(alpha_hat, beta_hat)`` with ``beta_hat/alpha_hat = -m beta/alpha``.

    This is the invariant of the leaf in the quotient piece after it is
    reglued along the torus; ``side`` is ``"x"`` or ``"y"``.
    """
    if side == "x":
        leaf = leaf_xside(g)
    elif side == "y":
        leaf = leaf_yside(g)
    else:
        raise DomainError(f"side must be 'x' or 'y', got {side!r}")
    ratio = Fraction(-g.m * leaf.beta, leaf.alpha)
    return ratio.denominator, ratio.numerator


def euler_from_gluing(g: Germ) -> int:
    """
    Integral Euler number recomputed from the gluing of M' and M''.

    Solves ``m = l(-m beta'') + k(-m beta') + k l e_bar`` for ``e_bar``;
    both pieces contribute zero, so ``e = e_bar``.  Only the case
    ``d = d_k = d_l = 1`` is handled.
    """
    dg = g.derived
    if not (dg.d == dg.d_k == dg.d_l == 1):
        raise UnsupportedCaseError(
            f"gluing cross-check needs d = d_k = d_l = 1, got d={dg.d}, d_k={dg.d_k}, d_l={dg.d_l}"
        )
    m, k, l = g.m, g.k, g.l
    beta_x = leaf_xside(g).beta
    beta_y = leaf_yside(g).beta
    rhs = m - l * (-m * beta_y) - k * (-m * beta_x)
    e_bar, rem = divmod(rhs, k * l)
    if rem:
        raise InvariantViolation(f"k*l*e_bar = {rhs} is not divisible by k*l = {k * l} for {g}")
    # neither piece M' nor M'' contributes to the integral Euler number
    e_prime = e_second = 0
    return e_prime + e_second + e_bar


def beta_identity(k: int, l: int) -> tuple[int, int, int]:
    """Return ``(beta', beta'', 1 + l beta'' + k beta')`` for coprime ``k, l``."""
    if k < 1 or l < 1 or gcd(k, l) != 1:
        raise DomainError(f"need coprime k, l >= 1, got ({k}, {l})")
    beta_x = mod_inverse_of_negative(k, l)
    beta_y = mod_inverse_of_negative(l, k)
    return beta_x, beta_y, 1 + l * beta_y + k * beta_x
