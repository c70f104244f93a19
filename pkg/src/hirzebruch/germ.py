"""The germ z^m - x^k y^l and the gcd quantities derived from it."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd

from .errors import GermError, IrreducibilityError, NotSingularError, OrderingError


@dataclass(frozen=True)
class DerivedGcds:
    d: int
    k_bar: int
    l_bar: int
    d_k: int
    d_l: int


@dataclass(frozen=True)
class Germ:
    """
    A validated Hirzebruch germ ``z^m - x^k y^l``.

    Construction checks every hypothesis: ``m >= 2``, ``k, l >= 1``,
    ``gcd(m, k, l) == 1`` and ``k <= l`` unless ``allow_unordered`` is set.
    """

    m: int
    k: int
    l: int
    allow_unordered: bool = False

    def __post_init__(self):
        for name in ("m", "k", "l"):
            if not isinstance(getattr(self, name), int) or isinstance(getattr(self, name), bool):
                raise GermError(f"{name} must be an integer")
        if self.k < 1 or self.l < 1:
            raise GermError(f"k and l must be >= 1, got k={self.k}, l={self.l}")
        if self.m < 2:
            raise NotSingularError(f"m must be >= 2 for a genuine singularity, got m={self.m}")
        if gcd(self.m, self.k, self.l) != 1:
            raise IrreducibilityError(
                f"gcd(m,k,l) must be 1 (irreducible germ), got gcd({self.m},{self.k},{self.l})"
                f" = {gcd(self.m, self.k, self.l)}"
            )
        if self.k > self.l and not self.allow_unordered:
            raise OrderingError(
                f"k <= l required, got k={self.k} > l={self.l}; swap k and l"
                " (exchanging x and y) or allow unordered exponents"
            )

    @cached_property
    def derived(self) -> DerivedGcds:
        return derive(self)

    def swapped(self) -> Germ:
        """The same singularity with x and y exchanged."""
        return Germ(self.m, self.l, self.k, allow_unordered=True)

    def ordered(self) -> Germ:
        """The representative with ``k <= l``."""
        if self.k <= self.l:
            return self
        return Germ(self.m, self.l, self.k)

    def __str__(self):
        return f"z^{self.m} - x^{self.k} y^{self.l}"


def make_germ(m: int, k: int, l: int, allow_unordered: bool = False) -> Germ:
    return Germ(m, k, l, allow_unordered)


def derive(g: Germ) -> DerivedGcds:
    d = gcd(g.k, g.l)
    return DerivedGcds(d=d, k_bar=g.k // d, l_bar=g.l // d, d_k=gcd(g.m, g.k), d_l=gcd(g.m, g.l))
