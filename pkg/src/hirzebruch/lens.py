"""Lens spaces and their classification up to homeomorphism."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import DomainError


@dataclass(frozen=True, order=True)
class LensSpace:
    """L(n, q); ``L(1, 1)`` is the 3-sphere."""

    n: int
    q: int

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"lens space order must be >= 1, got {self.n}")
        if self.n == 1:
            if self.q != 1:
                raise DomainError("L(1, q) must be written L(1, 1)")
        elif not (1 <= self.q < self.n) or gcd(self.n, self.q) != 1:
            raise DomainError(f"L({self.n},{self.q}) needs 0 < q < n and gcd(n, q) = 1")

    @property
    def is_sphere(self) -> bool:
        return self.n == 1

    @property
    def fundamental_group_order(self) -> int:
        return self.n

    def __str__(self):
        return f"L({self.n},{self.q})"


S3 = LensSpace(1, 1)



def lens_equivalent(a: LensSpace, b: LensSpace, orientation_preserving: bool = True) -> bool:
    """
    Classical homeomorphism test for lens spaces.

    ``L(n, q)`` and ``L(n, q')`` are orientation-preservingly homeomorphic
    iff ``q' == q^{+-1} (mod n)``; dropping orientation also allows
    ``q' == -q^{+-1}``.
    """
    if a.n != b.n:
        return False
    n = a.n
    if n == 1:
        return True
    signs = (1,) if orientation_preserving else (1, -1)
    for s in signs:
        if (b.q - s * a.q) % n == 0 or (a.q * b.q - s) % n == 0:
            return True
    return False
