"""
Boundary of the normalization of z^m - x^k y^l.

This link is the lens space L(n, q) with ``n = m / (d_k d_l)`` and
``q = lambda_0 / d_k``, where ``lambda_0`` is the least positive solution of
``lambda * l == -k * d_l (mod m)``.  Its plumbing graph is the bamboo of the
continued fraction of n/q, with negated terms as Euler weights.
"""
from __future__ import annotations

from .arith import cf_expand
from .errors import InvariantViolation
from .germ import Germ
from .lens import S3, LensSpace, lens_equivalent  # noqa: F401
from .plumbing import PlumbingGraph, build_bamboo


def smallest_lambda(g: Germ) -> int:
    """Least positive solution of ``lambda * l == -k * d_l (mod m)``, by scan."""
    m = g.m
    target = (-g.k * g.derived.d_l) % m
    for lam in range(1, m + 1):
        if (lam * g.l) % m == target:
            return lam
    raise InvariantViolation(f"no solution of lambda*l == -k*d_l mod m for {g}")


def normalization_boundary(g: Germ) -> LensSpace:
    dg = g.derived
    n = g.m // (dg.d_k * dg.d_l)
    lam0 = smallest_lambda(g)
    if lam0 % dg.d_k:
        raise InvariantViolation(f"lambda_0 = {lam0} not divisible by d_k = {dg.d_k} for {g}")
    if n == 1:
        return S3
    return LensSpace(n, (lam0 // dg.d_k) % n)


def normalization_plumbing(g: Germ) -> PlumbingGraph:
    lens = normalization_boundary(g)
    return lens_bamboo(lens)


def lens_bamboo(lens: LensSpace) -> PlumbingGraph:
    return build_bamboo([-b for b in cf_expand(lens.n, lens.q)])
