"""Exhaustive consistency checks over all small germs."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Callable, Iterator

from .arith import cf_eval
from .germ import Germ
from .monodromy import (
    fiber_data_xside,
    fiber_data_yside,
    quotient_euler_characteristic,
    vertical_monodromy_xside,
    vertical_monodromy_yside,
)
from .normalization import normalization_boundary, normalization_plumbing
from .plumbing import (
    canonical_form,
    graphs_isomorphic,
    intersection_form,
    is_negative_definite,
    milnor_boundary_plumbing,
    plumbing_case,
)
from .seifert import (
    beta_identity,
    euler_from_gluing,
    leaf_xside,
    leaf_yside,
    lens_space_classification,
    nielsen_to_seifert,
    rational_euler_closed_form,
    rational_euler_number,
    seifert_genus,
    seifert_presentation,
)


def iter_germs(bound: int) -> Iterator[Germ]:
    """Every valid germ with ``2 <= m <= bound`` and ``1 <= k <= l <= bound``."""
    for m in range(2, bound + 1):
        for k in range(1, bound + 1):
            for l in range(k, bound + 1):
                if gcd(m, k, l) == 1:
                    yield Germ(m, k, l)


def _check(cond: bool, msg: str):
    if not cond:
        raise AssertionError(msg)


def check_gcds(g: Germ):
    dg = g.derived
    _check(dg.d * dg.k_bar == g.k and dg.d * dg.l_bar == g.l, "d*k_bar = k, d*l_bar = l")
    _check(gcd(dg.k_bar, dg.l_bar) == 1, "gcd(k_bar, l_bar) = 1")
    _check(gcd(dg.k_bar, dg.d_l) == 1 and gcd(dg.l_bar, dg.d_k) == 1, "k_bar prime to d_l, l_bar prime to d_k")


def check_normalization(g: Germ):
    lens = normalization_boundary(g)
    bamboo = normalization_plumbing(g)
    _check(cf_eval([-w for w in bamboo.weights]) == Fraction(lens.n, lens.q), "bamboo evaluates to n/q")
    shifted = Germ(g.m, g.k + g.m, g.l + g.m)
    _check(normalization_boundary(shifted) == lens, "L~ depends on k, l mod m only")


def check_monodromy(g: Germ):
    dg = g.derived
    chi_q = quotient_euler_characteristic(g)
    fx, fy = fiber_data_xside(g), fiber_data_yside(g)
    _check(fx.euler_characteristic == dg.l_bar * chi_q - g.m * (dg.l_bar - 1), "ramified covering, x-side")
    _check(fy.euler_characteristic == dg.k_bar * chi_q - g.m * (dg.k_bar - 1), "ramified covering, y-side")
    _check(2 * chi_q == 2 - 2 * seifert_genus(g), "base genus from quotient Euler characteristic")
    for mono in (vertical_monodromy_xside(g), vertical_monodromy_yside(g)):
        if mono.order >= 2:
            _check(mono.rotation.denominator == mono.order, "rotation denominator = order")
    _check(nielsen_to_seifert(-dg.k_bar, dg.l_bar) == leaf_xside(g), "dictionary reproduces (alpha', beta')")
    _check(nielsen_to_seifert(-dg.l_bar, dg.k_bar) == leaf_yside(g), "dictionary reproduces (alpha'', beta'')")


def check_seifert(g: Germ):
    dg = g.derived
    p = seifert_presentation(g)
    e0 = rational_euler_number(p)
    _check(e0 == rational_euler_closed_form(g) and e0 > 0, "e0 = m/(k_bar l_bar) > 0")
    bx, by, lhs = beta_identity(dg.k_bar, dg.l_bar)
    _check(lhs == dg.k_bar * dg.l_bar, "1 + l_bar beta'' + k_bar beta' = k_bar l_bar")
    if dg.d == dg.d_k == dg.d_l == 1:
        _check(euler_from_gluing(g) == p.euler_integral == g.m, "gluing equation gives e = m")
    lens = lens_space_classification(g)
    expect = (g.k == g.l == 1) or (g.m == 2 and min(g.k, g.l) == 1)
    _check((lens is not None) == expect, "lens space iff k = l = 1 or (m = 2 and k = 1)")


def check_plumbing(g: Germ):
    graph = milnor_boundary_plumbing(g)
    _check(len(graph.edges) == len(graph) - 1, "tree")
    cf = canonical_form(graph)
    case = plumbing_case(g)
    if case == "3c":
        targets = {Fraction(x.alpha, x.alpha - x.beta) for x in (leaf_xside(g), leaf_yside(g))}
        for branch in cf.branches:
            _check(cf_eval([-w for _, w in branch]) in targets, "branch evaluates to alpha/(alpha-beta)")
        _check(len(cf.branches) == len(seifert_presentation(g).leaves), "one branch per exceptional leaf")
    if g.l >= 2:
        _check(not graphs_isomorphic(graph, normalization_plumbing(g)), "L graph differs from L~ graph")
        lens = lens_space_classification(g)
        if lens is not None:
            _check(lens.n != normalization_boundary(g).n, "lens cases differ in fundamental group order")


def check_definiteness(g: Germ):
    nd = is_negative_definite(intersection_form(milnor_boundary_plumbing(g)))
    if plumbing_case(g).startswith("3"):
        _check(not nd, "case-3 graph is not negative definite")
    else:
        _check(nd, "lens-space graph is negative definite")


CHECKS: dict[str, list[Callable[[Germ], None]]] = {
    "identities": [check_gcds, check_normalization, check_monodromy, check_seifert, check_plumbing],
    "definiteness": [check_definiteness],
}


@dataclass
class SweepResult:
    germs: int = 0
    passed: dict[str, int] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def run_sweep(bound: int, check: str = "all") -> SweepResult:
    groups = list(CHECKS) if check == "all" else [check]
    funcs = [f for grp in groups for f in CHECKS[grp]]
    result = SweepResult(passed={f.__name__: 0 for f in funcs})
    for g in iter_germs(bound):
        result.germs += 1
        for f in funcs:
            try:
                f(g)
            except AssertionError as exc:
                result.failures.append(f"{f.__name__} ({g.m},{g.k},{g.l}): {exc}")
            else:
                result.passed[f.__name__] += 1
    return result
