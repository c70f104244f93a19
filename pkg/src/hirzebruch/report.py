"""Aggregated reports for one germ, in text and JSON form."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .errors import UnsupportedCaseError
from .germ import Germ
from .lens import LensSpace, lens_equivalent
from .monodromy import (
    fiber_data_xside,
    fiber_data_yside,
    torus_intersection_number,
    vertical_monodromy_xside,
    vertical_monodromy_yside,
)
from .normalization import normalization_boundary, normalization_plumbing
from .plumbing import PlumbingGraph, canonical_form, graphs_isomorphic, milnor_boundary_plumbing, plumbing_case
from .seifert import euler_from_gluing, lens_space_classification, rational_euler_number, seifert_presentation

SECTIONS = ("normalization", "seifert", "plumbing", "monodromy", "compare")


@dataclass(frozen=True)
class Verdict:
    milnor_lens: LensSpace | None
    normalization: LensSpace
    same: bool
    witness: str
    e0: Fraction

    @property
    def e0_positive(self) -> bool:
        return self.e0 > 0


def compare_report(g: Germ) -> Verdict:
    """Compare L with the normalization boundary and record why they differ."""
    lens = lens_space_classification(g)
    norm = normalization_boundary(g)
    e0 = rational_euler_number(seifert_presentation(g))
    if lens is not None:
        if lens_equivalent(lens, norm):
            return Verdict(lens, norm, True, f"both are {lens}", e0)
        if lens.n != norm.n:
            witness = f"fundamental group orders {lens.n} vs {norm.n}"
        else:
            witness = f"{lens} and {norm} are not homeomorphic"
        return Verdict(lens, norm, False, witness, e0)
    gl = milnor_boundary_plumbing(g)
    gn = normalization_plumbing(g)
    if graphs_isomorphic(gl, gn):
        return Verdict(None, norm, True, "canonical plumbing graphs coincide", e0)
    witness = (
        f"L is not a lens space; its canonical graph ({canonical_form(gl).shape}, "
        f"{len(gl)} vertices) is not isomorphic to the bamboo of {norm}"
    )
    return Verdict(None, norm, False, witness, e0)


def _fmt_seq(ws) -> str:
    return "(" + ", ".join(str(w) for w in ws) + ")"


def _graph_lines(p: PlumbingGraph) -> list[str]:
    cf = canonical_form(p)
    if cf.shape == "empty":
        return ["empty graph"]
    if cf.shape == "vertex":
        g, e = cf.center
        return [f"one vertex with g = {g}, e = {e}"]
    if cf.shape == "bamboo":
        seq = cf.branches[0]
        if all(g == 0 for g, _ in seq):
            return [f"bamboo of {len(seq)} rational curves, Euler numbers {_fmt_seq(e for _, e in seq)}"]
        return ["bamboo " + ", ".join(f"(g={g}, e={e})" for g, e in seq)]
    g, e = cf.center
    lines = [f"star-shaped with {len(cf.branches)} branches", f"central vertex: g = {g}, e = {e}"]
    counts = Counter(tuple(w for _, w in b) for b in cf.branches)
    for branch, n in sorted(counts.items(), key=lambda kv: (-len(kv[0]), kv[0])):
        lines.append(f"{n} branches {_fmt_seq(branch)}")
    return lines


def section_data(g: Germ, section: str) -> dict[str, Any]:
    """JSON-ready content of one report section, recomputed from scratch."""
    if section == "normalization":
        lens = normalization_boundary(g)
        graph = normalization_plumbing(g)
        return {"lens_space": [lens.n, lens.q], "bamboo": graph.weights}
    if section == "seifert":
        p = seifert_presentation(g)
        lens = lens_space_classification(g)
        try:
            gluing = euler_from_gluing(g)
        except UnsupportedCaseError:
            gluing = None
        counts = p.leaf_counts()
        return {
            "genus": p.genus,
            "euler_integral": p.euler_integral,
            "leaves": [
                {"alpha": leaf.alpha, "beta": leaf.beta, "count": counts[leaf]}
                for leaf in sorted(counts, key=lambda x: (-x.alpha, x.beta))
            ],
            "trivial_leaf_count": p.trivial_leaf_count,
            "e0": str(rational_euler_number(p)),
            "lens_space": None if lens is None else [lens.n, lens.q],
            "euler_from_gluing": gluing,
        }
    if section == "plumbing":
        graph = milnor_boundary_plumbing(g)
        cf = canonical_form(graph)
        data = {
            "case": plumbing_case(g),
            "shape": cf.shape,
            "vertex_count": len(graph),
            "edge_count": len(graph.edges),
            "center": None if cf.center is None else {"genus": cf.center[0], "euler": cf.center[1]},
            "branches": [[e for _, e in b] for b in cf.branches] if cf.shape == "star" else [],
        }
        if cf.shape == "bamboo":
            data["bamboo"] = [list(v) for v in cf.branches[0]]
        return data
    if section == "monodromy":
        out = {}
        for side, fib, mono in (
            ("x", fiber_data_xside(g), vertical_monodromy_xside(g)),
            ("y", fiber_data_yside(g), vertical_monodromy_yside(g)),
        ):
            out[side] = {
                "fiber": {
                    "euler_characteristic": fib.euler_characteristic,
                    "boundary_components": fib.boundary_components,
                    "genus": fib.genus,
                },
                "order": mono.order,
                "fixed_points": mono.fixed_points,
                "rotation": str(mono.rotation),
            }
        out["torus_intersection_number"] = torus_intersection_number(g)
        return out
    if section == "compare":
        v = compare_report(g)
        return {
            "milnor_boundary_lens_space": None if v.milnor_lens is None else [v.milnor_lens.n, v.milnor_lens.q],
            "normalization_lens_space": [v.normalization.n, v.normalization.q],
            "same": v.same,
            "witness": v.witness,
            "e0": str(v.e0),
            "e0_positive": v.e0_positive,
        }
    raise ValueError(f"unknown section {section!r}")


def report_json(g: Germ, sections=SECTIONS) -> dict[str, Any]:
    dg = g.derived
    doc: dict[str, Any] = {
        "germ": {"m": g.m, "k": g.k, "l": g.l},
        "derived": {"d": dg.d, "k_bar": dg.k_bar, "l_bar": dg.l_bar, "d_k": dg.d_k, "d_l": dg.d_l},
    }
    for s in sections:
        doc[s] = section_data(g, s)
    return doc


def report_text(g: Germ, sections=SECTIONS) -> str:
    dg = g.derived
    out = [
        f"Hirzebruch singularity {g} = 0",
        f"  d = {dg.d}, k_bar = {dg.k_bar}, l_bar = {dg.l_bar}, d_k = {dg.d_k}, d_l = {dg.d_l}",
    ]
    if "normalization" in sections:
        lens = normalization_boundary(g)
        name = f"{lens} = S^3" if lens.is_sphere else str(lens)
        out += ["", f"Boundary of the normalization: {name}"]
        out += ["  plumbing graph: " + line for line in _graph_lines(normalization_plumbing(g))]
    if "seifert" in sections:
        d = section_data(g, "seifert")
        out += ["", "Seifert structure of the Milnor-fiber boundary L:", f"  g = {d['genus']}, e = {d['euler_integral']}"]
        n_exc = sum(x["count"] for x in d["leaves"])
        if n_exc:
            fam = ", ".join(f"{x['count']} x (alpha={x['alpha']}, beta={x['beta']})" for x in d["leaves"])
            out.append(f"  {n_exc} exceptional leaves: {fam}")
        else:
            out.append("  no exceptional leaves")
        out.append(f"  rational Euler number e0 = {d['e0']}")
        lens = d["lens_space"]
        out.append(f"  L is the lens space L({lens[0]},{lens[1]})" if lens else "  L is not a lens space")
        if d["euler_from_gluing"] is None:
            out.append("  gluing cross-check: not applicable (needs d = d_k = d_l = 1)")
        else:
            agree = "agrees" if d["euler_from_gluing"] == d["euler_integral"] else "DISAGREES"
            out.append(f"  gluing cross-check: e = {d['euler_from_gluing']} ({agree})")
    if "plumbing" in sections:
        case = plumbing_case(g)
        out += ["", f"Plumbing graph of L (case {case}):"]
        out += ["  " + line for line in _graph_lines(milnor_boundary_plumbing(g))]
        if case == "3b":
            out.append("  note: central weight 0 as listed for this case (the general star uses -m)")
    if "monodromy" in sections:
        out += ["", "Vertical monodromies:"]
        for label, fib, mono in (
            ("h'", fiber_data_xside(g), vertical_monodromy_xside(g)),
            ("h''", fiber_data_yside(g), vertical_monodromy_yside(g)),
        ):
            out.append(
                f"  {label}: order {mono.order}, {mono.fixed_points} fixed points, rotation {mono.rotation} turn;"
                f" fiber chi = {fib.euler_characteristic}, genus {fib.genus},"
                f" {fib.boundary_components} boundary component(s)"
            )
        out.append(f"  intersection number of the fiber boundaries on T: {torus_intersection_number(g)}")
    if "compare" in sections:
        v = compare_report(g)
        verdict = "identical" if v.same else "distinct"
        out += ["", f"L versus the normalization boundary: {verdict} ({v.witness})"]
        sign = "positive" if v.e0_positive else "not positive"
        out.append(f"  e0 = {v.e0} is {sign}")
    return "\n".join(out) + "\n"
