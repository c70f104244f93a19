from math import gcd

import pytest

from hirzebruch.errors import DomainError, IrreducibilityError, NotSingularError, OrderingError
from hirzebruch.germ import Germ, derive, make_germ
from hirzebruch.sweep import iter_germs


def test_valid_examples():
    assert make_germ(12, 5, 11) == Germ(12, 5, 11)
    g = make_germ(12, 17, 11, allow_unordered=True)
    assert (g.m, g.k, g.l) == (12, 17, 11)


@pytest.mark.parametrize(
    "args, exc",
    [
        ((6, 2, 4), IrreducibilityError),
        ((1, 1, 1), NotSingularError),
        ((0, 1, 1), NotSingularError),
        ((3, 0, 2), DomainError),
        ((3, 2, -1), DomainError),
        ((12, 17, 11), OrderingError),
    ],
)
def test_rejections(args, exc):
    with pytest.raises(exc):
        make_germ(*args)


def test_ordering_message_suggests_swap():
    with pytest.raises(OrderingError, match="swap"):
        make_germ(5, 3, 2)


@pytest.mark.parametrize(
    "germ, expected",
    [
        (Germ(12, 5, 11), (1, 5, 11, 1, 1)),
        (Germ(12, 17, 11, True), (1, 17, 11, 1, 1)),
        (Germ(7, 1, 1), (1, 1, 1, 1, 1)),
        (Germ(15, 6, 10), (2, 3, 5, 3, 5)),
    ],
)
def test_derive(germ, expected):
    dg = derive(germ)
    assert (dg.d, dg.k_bar, dg.l_bar, dg.d_k, dg.d_l) == expected


def test_derived_invariants_sweep():
    for g in iter_germs(25):
        dg = g.derived
        assert dg.d * dg.k_bar == g.k and dg.d * dg.l_bar == g.l
        assert gcd(dg.k_bar, dg.l_bar) == 1
        assert gcd(dg.k_bar, dg.d_l) == 1
        assert gcd(dg.l_bar, dg.d_k) == 1


def test_swapped_and_ordered():
    g = Germ(12, 17, 11, allow_unordered=True)
    assert (g.ordered().k, g.ordered().l) == (11, 17)
    assert g.swapped().swapped() == Germ(12, 17, 11, allow_unordered=True)
