"""
Fibers and vertical monodromies of the two pieces M' and M'' of the link.

The x-side fiber G' is the Milnor fiber of the plane curve z^m - y^l and its
vertical monodromy h' is periodic of order l_bar; the y-side is symmetric
with (k, l) exchanged.  Rotation angles are signed fractions of a full turn.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvariantViolation
from .germ import Germ


@dataclass(frozen=True)
class FiberData:
    euler_characteristic: int
    boundary_components: int
    genus: int

    def __post_init__(self):
        if self.euler_characteristic != 2 - 2 * self.genus - self.boundary_components:
            raise InvariantViolation(f"inconsistent fiber data {self}")


@dataclass(frozen=True)
class MonodromyDescriptor:
    order: int
    fixed_points: int
    rotation: Fraction


def _fiber(m: int, e: int, boundary: int) -> FiberData:
    chi = m + e - m * e
    twice_genus = 2 - boundary - chi
    return FiberData(chi, boundary, twice_genus // 2)


def fiber_data_xside(g: Germ) -> FiberData:
    return _fiber(g.m, g.l, g.derived.d_l)


def fiber_data_yside(g: Germ) -> FiberData:
    return _fiber(g.m, g.k, g.derived.d_k)


def _monodromy(m: int, order: int, other: int) -> MonodromyDescriptor:
    # a trivial monodromy has no isolated fixed points to count
    return MonodromyDescriptor(order, m if order >= 2 else 0, Fraction(-other, order))


def vertical_monodromy_xside(g: Germ) -> MonodromyDescriptor:
    dg = g.derived
    return _monodromy(g.m, dg.l_bar, dg.k_bar)


def vertical_monodromy_yside(g: Germ) -> MonodromyDescriptor:
    dg = g.derived
    return _monodromy(g.m, dg.k_bar, dg.l_bar)


def torus_intersection_number(g: Germ) -> int:
    """Intersection number on the common torus of the boundaries of G' and G''."""
    return -g.m


def quotient_euler_characteristic(g: Germ) -> int:
    """Euler characteristic of G'/h' (equal to that of G''/h'')."""
    d = g.derived.d
    return -g.m * d + d + g.m
