import json
import random
from fractions import Fraction

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hirzebruch.arith import cf_eval, cf_expand
from hirzebruch.errors import DomainError, UnsupportedShapeError
from hirzebruch.germ import Germ
from hirzebruch.normalization import normalization_plumbing
from hirzebruch.plumbing import (
    EMPTY,
    PlumbingGraph,
    build_bamboo,
    build_star,
    canonical_form,
    graphs_isomorphic,
    intersection_form,
    is_negative_definite,
    milnor_boundary_plumbing,
    plumbing_case,
    to_dot,
    to_json,
)
from hirzebruch.seifert import leaf_xside, leaf_yside
from hirzebruch.sweep import iter_germs

EX1_STAR = build_star((0, -12), [[-2, -2, -2, -2, -3]] * 12 + [[-5]] * 12)


def _branch_words(p):
    cf = canonical_form(p)
    return sorted(tuple(w for _, w in b) for b in cf.branches)


def test_build_bamboo():
    b = build_bamboo([-3, -2, -3])
    assert len(b) == 3 and len(b.edges) == 2
    assert build_bamboo([]) == EMPTY
    a = build_bamboo([-2] * 6)
    assert a.weights == [-2] * 6 and a.degrees() == [1, 2, 2, 2, 2, 1]


@pytest.mark.parametrize(
    "vertices, edges",
    [
        (((0, -2), (0, -2)), ((0, 0),)),
        (((0, -2), (0, -2)), ((0, 1), (1, 0))),
        (((0, -2), (0, -2)), ()),
        (((0, -2),), ((0, 3),)),
        (((-1, -2),), ()),
    ],
)
def test_graph_validation(vertices, edges):
    with pytest.raises(DomainError):
        PlumbingGraph(vertices, edges)


def test_example_1_graph():
    g = milnor_boundary_plumbing(Germ(12, 5, 11))
    cf = canonical_form(g)
    assert cf.shape == "star" and cf.center == (0, -12)
    assert _branch_words(g) == sorted([(-2, -2, -2, -2, -3)] * 12 + [(-5,)] * 12)
    assert graphs_isomorphic(g, EX1_STAR)


def test_example_2_graph():
    g = milnor_boundary_plumbing(Germ(12, 17, 11, allow_unordered=True))
    assert canonical_form(g).center == (0, -12)
    assert _branch_words(g) == sorted([(-6, -2)] * 12 + [(-2, -2, -2, -2, -3, -2)] * 12)


@pytest.mark.parametrize(
    "germ, case",
    [
        (Germ(5, 1, 1), "1"),
        (Germ(2, 1, 7), "2"),
        (Germ(3, 2, 2), "3a"),
        (Germ(3, 2, 6), "3b"),
        (Germ(3, 1, 4), "3b"),
        (Germ(12, 5, 11), "3c"),
        (Germ(2, 3, 5), "3c"),
        (Germ(12, 17, 11, allow_unordered=True), "3c"),
        (Germ(3, 6, 2, allow_unordered=True), "3b"),
    ],
)
def test_plumbing_case(germ, case):
    assert plumbing_case(germ) == case


def test_case_shapes():
    assert milnor_boundary_plumbing(Germ(5, 1, 1)).weights == [-2] * 4
    assert milnor_boundary_plumbing(Germ(2, 1, 7)).vertices == ((0, -14),)
    assert milnor_boundary_plumbing(Germ(3, 2, 2)).vertices == ((2, 3),)
    star = canonical_form(milnor_boundary_plumbing(Germ(3, 2, 6)))
    assert star.center == (2, 0) and star.branches == (((0, -3),),) * 3


def test_case_3c_branch_fidelity():
    for g in iter_germs(20):
        if plumbing_case(g) != "3c":
            continue
        targets = {Fraction(x.alpha, x.alpha - x.beta) for x in (leaf_xside(g), leaf_yside(g))}
        cf = canonical_form(milnor_boundary_plumbing(g))
        assert len(cf.branches) == 2 * g.m
        assert cf.center == ((g.m - 1) * (g.derived.d - 1), -g.m)
        for branch in cf.branches:
            assert cf_eval([-w for _, w in branch]) in targets


def test_tree_shape():
    for g in iter_germs(15):
        p = milnor_boundary_plumbing(g)
        assert len(p.edges) == len(p) - 1


# -- intersection form -----------------------------------------------------


def test_intersection_form_examples():
    assert intersection_form(build_bamboo([-2, -2])).matrix == [[-2, 1], [1, -2]]
    assert intersection_form(build_bamboo([-10])).matrix == [[-10]]
    f = intersection_form(EX1_STAR)
    mat = np.array(f.matrix)
    assert f.dimension == 1 + 12 * 5 + 12 * 1 == 73
    assert (mat == mat.T).all()


def test_negative_definite_examples():
    assert is_negative_definite([[-2, 1], [1, -2]])
    assert not is_negative_definite(intersection_form(EX1_STAR))
    assert not is_negative_definite([[1]])
    assert is_negative_definite(intersection_form(EMPTY))


def test_negative_definite_rejects_bad_matrices():
    with pytest.raises(DomainError):
        is_negative_definite([[1, 2], [3, 4]])
    with pytest.raises(DomainError):
        is_negative_definite([[1, 2]])


def _eig_oracle(mat):
    eig = np.linalg.eigvalsh(np.array(mat, dtype=float))
    return bool((eig < 0).all()), float(np.abs(eig).min()) if len(eig) else 1.0


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 7).flatmap(lambda n: st.lists(st.integers(-6, 3), min_size=n * n, max_size=n * n)))
def test_negative_definite_matches_eigenvalues(entries):
    n = int(round(len(entries) ** 0.5))
    mat = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            mat[i][j] = mat[j][i] = entries[i * n + j] if i != j else entries[i * n + j] - 4
    expected, margin = _eig_oracle(mat)
    if margin < 1e-9:
        # singular: never negative definite
        assert not is_negative_definite(mat)
    else:
        assert is_negative_definite(mat) == expected


def test_tree_forms_match_eigenvalues():
    rng = random.Random(7)
    for _ in range(200):
        center = (0, rng.randint(-6, 2))
        branches = [[rng.randint(-5, -2) for _ in range(rng.randint(1, 4))] for _ in range(rng.randint(0, 6))]
        p = build_star(center, branches)
        f = intersection_form(p)
        expected, margin = _eig_oracle(f.matrix)
        if margin > 1e-9:
            assert is_negative_definite(f) == expected


def test_star_schur_complement_equals_e0():
    # the center's Schur complement for the Example 1 star is -12 + 12*9/11 + 12*1/5
    assert Fraction(-12) + 12 * Fraction(9, 11) + 12 * Fraction(1, 5) == Fraction(12, 55)


def test_case_3_never_negative_definite():
    for g in iter_germs(20):
        nd = is_negative_definite(intersection_form(milnor_boundary_plumbing(g)))
        assert nd == (not plumbing_case(g).startswith("3"))


# -- isomorphism -----------------------------------------------------------


def test_isomorphism_examples():
    a = build_bamboo([-3, -2, -4])
    assert graphs_isomorphic(a, build_bamboo([-4, -2, -3]))
    ex1_l = milnor_boundary_plumbing(Germ(12, 5, 11))
    assert not graphs_isomorphic(ex1_l, normalization_plumbing(Germ(12, 5, 11)))
    permuted = build_star((0, -12), [[-5]] * 12 + [[-2, -2, -2, -2, -3]] * 12)
    assert graphs_isomorphic(ex1_l, permuted)
    assert not graphs_isomorphic(build_bamboo([-2], genera=[1]), build_bamboo([-2]))
    assert graphs_isomorphic(EMPTY, build_bamboo([]))


def test_isomorphism_unsupported_shape():
    two_hubs = PlumbingGraph(
        tuple((0, -2) for _ in range(8)),
        ((0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (4, 6), (4, 7)),
    )
    with pytest.raises(UnsupportedShapeError):
        canonical_form(two_hubs)
    with pytest.raises(UnsupportedShapeError):
        graphs_isomorphic(two_hubs, two_hubs)


def _nx(p):
    G = nx.Graph()
    for i, v in enumerate(p.vertices):
        G.add_node(i, w=v)
    G.add_edges_from(p.edges)
    return G


def _random_shape(rng):
    if rng.random() < 0.4:
        return build_bamboo([rng.randint(-3, -2) for _ in range(rng.randint(0, 5))])
    center = (rng.randint(0, 1), rng.randint(-3, 0))
    return build_star(center, [[rng.randint(-3, -2) for _ in range(rng.randint(1, 3))] for _ in range(rng.randint(3, 5))])


def _shuffle(p, rng):
    perm = list(range(len(p)))
    rng.shuffle(perm)
    verts = [None] * len(p)
    for old, new in enumerate(perm):
        verts[new] = p.vertices[old]
    return PlumbingGraph(tuple(verts), tuple((perm[i], perm[j]) for i, j in p.edges))


def test_isomorphism_matches_networkx():
    rng = random.Random(11)
    match = nx.algorithms.isomorphism.categorical_node_match("w", None)
    for _ in range(400):
        a = _random_shape(rng)
        b = _shuffle(a, rng) if rng.random() < 0.5 else _random_shape(rng)
        expected = nx.is_isomorphic(_nx(a), _nx(b), node_match=match)
        assert graphs_isomorphic(a, b) == expected


def test_never_isomorphic_to_normalization():
    for g in iter_germs(20):
        if g.l >= 2:
            assert not graphs_isomorphic(milnor_boundary_plumbing(g), normalization_plumbing(g))


# -- export ----------------------------------------------------------------


def test_json_empty():
    assert json.loads(to_json(EMPTY)) == {"vertices": [], "edges": [], "shape": "empty"}


def test_json_single_vertex():
    doc = json.loads(to_json(build_bamboo([-2])))
    assert doc == {"vertices": [{"id": 0, "genus": 0, "euler": -2}], "edges": [], "shape": "vertex"}


def test_json_example_1_is_canonical():
    g = milnor_boundary_plumbing(Germ(12, 5, 11))
    doc = json.loads(to_json(g))
    assert doc["shape"] == "star"
    assert len(doc["vertices"]) == 73 and len(doc["edges"]) == 72
    assert doc["vertices"][0] == {"id": 0, "genus": 0, "euler": -12}
    rng = random.Random(3)
    assert to_json(_shuffle(g, rng)) == to_json(g)


def test_dot_output():
    assert to_dot(EMPTY) == "graph plumbing {\n}\n"
    assert to_dot(build_bamboo([-2])) == 'graph plumbing {\n  v0 [label="g=0 e=-2"];\n}\n'
    text = to_dot(milnor_boundary_plumbing(Germ(12, 5, 11)))
    assert text.count("[label=") == 73
    assert text.count(" -- ") == 72
    assert 'v0 [label="g=0 e=-12"];' in text


def test_bamboo_lens_round_trip():
    for n in range(2, 60):
        for q in range(1, n):
            try:
                terms = cf_expand(n, q)
            except DomainError:
                continue
            b = build_bamboo([-t for t in terms])
            assert cf_eval([-w for w in b.weights]) == Fraction(n, q)
