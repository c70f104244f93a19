"""
Plumbing graphs: construction, canonical forms, intersection forms, export.

Only trees occur here.  Two shapes get canonical forms, bamboos (paths) and
stars (one vertex of degree >= 3 with bamboo branches hanging off it); that
is enough to compare every graph the package produces.
"""
from __future__ import annotations

import heapq
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .arith import cf_expand
from .errors import DomainError, UnsupportedShapeError
from .germ import Germ
from .seifert import leaf_xside, leaf_yside, seifert_genus

Vertex = tuple[int, int]  # (genus, euler weight)


@dataclass(frozen=True)
class PlumbingGraph:
    vertices: tuple[Vertex, ...]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        n = len(self.vertices)
        seen = set()
        for i, j in self.edges:
            if not (0 <= i < n and 0 <= j < n):
                raise DomainError(f"edge ({i},{j}) out of range")
            if i == j:
                raise DomainError(f"self-loop at vertex {i}")
            key = (min(i, j), max(i, j))
            if key in seen:
                raise DomainError(f"multi-edge {key}")
            seen.add(key)
        for genus, _ in self.vertices:
            if genus < 0:
                raise DomainError("genus must be non-negative")
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        if n and not _connected(n, self.edges):
            raise DomainError("plumbing graph must be connected")

    def __len__(self):
        return len(self.vertices)

    def neighbours(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in self.vertices]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        return adj

    def degrees(self) -> list[int]:
        return [len(a) for a in self.neighbours()]

    @property
    def weights(self) -> list[int]:
        return [e for _, e in self.vertices]


def _connected(n: int, edges: Iterable[tuple[int, int]]) -> bool:
    adj: list[list[int]] = [[] for _ in range(n)]
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    seen = {0}
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


EMPTY = PlumbingGraph((), ())


def build_bamboo(weights: Sequence[int], genera: Sequence[int] | None = None) -> PlumbingGraph:
    """Path of rational curves carrying ``weights`` from left to right."""
    genera = genera if genera is not None else [0] * len(weights)
    vertices = tuple(zip(genera, weights))
    return PlumbingGraph(vertices, tuple((i, i + 1) for i in range(len(vertices) - 1)))


def build_star(center: Vertex, branches: Sequence[Sequence[int]]) -> PlumbingGraph:
    """
    Star with the given central vertex and rational bamboo branches.

    Each branch is listed starting from the vertex joined to the center.
    """
    vertices = [tuple(center)]
    edges = []
    for branch in branches:
        prev = 0
        for w in branch:
            vertices.append((0, w))
            edges.append((prev, len(vertices) - 1))
            prev = len(vertices) - 1
    return PlumbingGraph(tuple(vertices), tuple(edges))


def plumbing_case(g: Germ) -> str:
    """
    Which shape the canonical graph of L takes: ``"1"``, ``"2"``,
    ``"3a"``, ``"3b"`` or ``"3c"``.  Exponents are taken in the order
    ``k <= l``.
    """
    k, l = sorted((g.k, g.l))
    if k == l == 1:
        return "1"
    if g.m == 2 and k == 1:
        return "2"
    if k == l:
        return "3a"
    if l % k == 0:
        return "3b"
    return "3c"


def _branch(leaf) -> list[int]:
    if leaf.alpha == 1:
        return []
    return [-b for b in cf_expand(leaf.alpha, leaf.alpha - leaf.beta)]


def milnor_boundary_plumbing(g: Germ) -> PlumbingGraph:
    """
    Canonical plumbing graph of the Milnor-fiber boundary L.

    Unordered germs (``k > l``) are accepted; the star in case 3c is built
    from the leaves of the germ as given, which just swaps the two branch
    families.
    """
    m = g.m
    k, l = sorted((g.k, g.l))
    genus = seifert_genus(g)
    case = plumbing_case(g)
    if case == "1":
        return build_bamboo([-2] * (m - 1))
    if case == "2":
        return build_bamboo([-2 * l])
    if case == "3a":
        return build_bamboo([m], genera=[genus])
    if case == "3b":
        return build_star((genus, 0), [[-(l // k)]] * m)
    branches = []
    for leaf in (leaf_xside(g), leaf_yside(g)):
        branch = _branch(leaf)
        if branch:
            branches.extend([branch] * m)
    return build_star((genus, -m), branches)


# -- canonical forms -------------------------------------------------------


@dataclass(frozen=True)
class CanonicalForm:
    shape: str
    center: Vertex | None
    branches: tuple[tuple[Vertex, ...], ...]


def canonical_form(p: PlumbingGraph) -> CanonicalForm:
    """
    Canonical description of a bamboo or star.

    Bamboos are stored as the lexicographically smaller of the two reading
    directions; stars as the center plus the sorted multiset of branches,
    each read outward from the center.
    """
    n = len(p)
    if n == 0:
        return CanonicalForm("empty", None, ())
    if len(p.edges) != n - 1:
        raise UnsupportedShapeError("plumbing graph is not a tree")
    if n == 1:
        return CanonicalForm("vertex", p.vertices[0], ())
    adj = p.neighbours()
    hubs = [v for v in range(n) if len(adj[v]) >= 3]
    if not hubs:
        start = next(v for v in range(n) if len(adj[v]) == 1)
        seq = tuple(p.vertices[v] for v in _walk(adj, start, None))
        return CanonicalForm("bamboo", None, (min(seq, seq[::-1]),))
    if len(hubs) > 1:
        raise UnsupportedShapeError(f"{len(hubs)} vertices of degree >= 3; not a star")
    c = hubs[0]
    branches = tuple(sorted(tuple(p.vertices[v] for v in _walk(adj, w, c)) for w in adj[c]))
    return CanonicalForm("star", p.vertices[c], branches)


def _walk(adj: list[list[int]], start: int, prev: int | None) -> list[int]:
    path = [start]
    cur = start
    while True:
        nxt = [w for w in adj[cur] if w != prev]
        if not nxt:
            return path
        prev, cur = cur, nxt[0]
        path.append(cur)


def canonicalize(p: PlumbingGraph) -> tuple[str, PlumbingGraph]:
    """Relabel ``p`` in canonical vertex order; returns ``(shape, graph)``."""
    cf = canonical_form(p)
    if cf.shape == "empty":
        return "empty", EMPTY
    if cf.shape == "vertex":
        return "vertex", PlumbingGraph((cf.center,), ())
    if cf.shape == "bamboo":
        seq = cf.branches[0]
        return "bamboo", PlumbingGraph(seq, tuple((i, i + 1) for i in range(len(seq) - 1)))
    vertices = [cf.center]
    edges = []
    for branch in cf.branches:
        prev = 0
        for v in branch:
            vertices.append(v)
            edges.append((prev, len(vertices) - 1))
            prev = len(vertices) - 1
    return "star", PlumbingGraph(tuple(vertices), tuple(edges))


def graphs_isomorphic(a: PlumbingGraph, b: PlumbingGraph) -> bool:
    return canonical_form(a) == canonical_form(b)


# -- intersection form -----------------------------------------------------


@dataclass(frozen=True)
class IntersectionForm:
    """
    Symmetric integer matrix of a plumbing graph, stored sparsely: Euler
    weights on the diagonal and a 1 for every edge.
    """

    diagonal: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    @property
    def dimension(self) -> int:
        return len(self.diagonal)

    @property
    def matrix(self) -> list[list[int]]:
        n = self.dimension
        mat = [[0] * n for _ in range(n)]
        for i, e in enumerate(self.diagonal):
            mat[i][i] = e
        for i, j in self.edges:
            mat[i][j] = mat[j][i] = 1
        return mat


def intersection_form(p: PlumbingGraph) -> IntersectionForm:
    return IntersectionForm(tuple(p.weights), p.edges)


def is_negative_definite(f: IntersectionForm | Sequence[Sequence[int]]) -> bool:
    """
    Exact negative-definiteness test by symmetric Gaussian elimination.

    Vertices are eliminated in minimum-degree order, so a tree costs linear
    time and never fills in.  A symmetric matrix is negative definite iff
    every pivot of such an elimination is negative.  The 0x0 matrix counts
    as negative definite.
    """
    if isinstance(f, IntersectionForm):
        diag: list = list(f.diagonal)
        off: list[dict] = [{} for _ in diag]
        for i, j in f.edges:
            off[i][j] = 1
            off[j][i] = 1
    else:
        n = len(f)
        if any(len(row) != n for row in f):
            raise DomainError("matrix must be square")
        diag = [f[i][i] for i in range(n)]
        off = [{} for _ in range(n)]
        for i in range(n):
            for j in range(n):
                if i != j and f[i][j]:
                    if f[i][j] != f[j][i]:
                        raise DomainError("matrix must be symmetric")
                    off[i][j] = f[i][j]

    alive = [True] * len(diag)
    heap = [(len(off[v]), v) for v in range(len(diag))]
    heapq.heapify(heap)
    while heap:
        deg, v = heapq.heappop(heap)
        if not alive[v] or deg != len(off[v]):
            continue
        pivot = diag[v]
        if pivot >= 0:
            return False
        alive[v] = False
        row = off[v]
        nbrs = list(row)
        for a in nbrs:
            del off[a][v]
        for a in nbrs:
            ra = row[a]
            diag[a] = diag[a] - Fraction(ra * ra) / pivot
            for b in nbrs:
                if b == a:
                    continue
                val = off[a].get(b, 0) - Fraction(ra * row[b]) / pivot
                if val:
                    off[a][b] = val
                else:
                    off[a].pop(b, None)
        for a in nbrs:
            heapq.heappush(heap, (len(off[a]), a))
    return True


# -- export ----------------------------------------------------------------


def to_json(p: PlumbingGraph) -> str:
    shape, c = canonicalize(p)
    doc = {
        "vertices": [{"id": i, "genus": g, "euler": e} for i, (g, e) in enumerate(c.vertices)],
        "edges": [list(e) for e in c.edges],
        "shape": shape,
    }
    return json.dumps(doc, indent=2)


def to_dot(p: PlumbingGraph, name: str = "plumbing") -> str:
    _, c = canonicalize(p)
    lines = [f"graph {name} {{"]
    for i, (g, e) in enumerate(c.vertices):
        lines.append(f'  v{i} [label="g={g} e={e}"];')
    for i, j in c.edges:
        lines.append(f"  v{i} -- v{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
