"""Graph constructions with predicted invariants, and the named example catalog.

Vertex ``x_i`` of a catalog graph is vertex ``i - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import (
    MAX_VERTICES,
    Graph,
    GraphError,
    complete_graph,
    delete_vertices,
    has_edges,
    path_graph,
    star_graph,
    to_mask,
)
from .invariants import hilbert_series, v_number


@dataclass(frozen=True)
class ConstructionPart:
    graph: Graph
    attach_set: int

    def __post_init__(self) -> None:
        if self.attach_set & ~self.graph.full:
            raise GraphError("attach set is not a subset of the part's vertices")


@dataclass(frozen=True)
class PredictedInvariants:
    dim: int | None = None
    deg_h: int | None = None
    v: int | None = None

    def to_json(self) -> dict:
        return {"dim": self.dim, "deg_h": self.deg_h, "v": self.v}


@dataclass(frozen=True)
class _PartStats:
    alpha: int
    alpha_rest: int
    deg: int
    deg_rest: int
    lead: int
    lead_rest: int


def _rest(part: ConstructionPart) -> Graph | None:
    """G_i minus A_i, or None when A_i is every vertex."""
    if part.attach_set == part.graph.full:
        return None
    return delete_vertices(part.graph, part.attach_set)


def _stats(part: ConstructionPart) -> _PartStats:
    g = part.graph
    hs = hilbert_series(g)
    rest = _rest(part)
    if rest is None:
        # The empty graph: alpha 0, h = 1.
        alpha_rest, deg_rest, lead_rest = 0, 0, 1
    else:
        hr = hilbert_series(rest)
        alpha_rest, deg_rest, lead_rest = hr.pole_order, hr.numerator.degree, hr.numerator.leading_coefficient
    return _PartStats(
        alpha=hs.pole_order,
        alpha_rest=alpha_rest,
        deg=hs.numerator.degree,
        deg_rest=deg_rest,
        lead=hs.numerator.leading_coefficient,
        lead_rest=lead_rest,
    )


def build_hn(parts: Sequence[ConstructionPart]) -> Graph:
    """Disjoint union of the parts plus a clique y_1..y_n, y_i joined to A_i.

    Part blocks keep their order and internal labels; the y vertices come last.
    """
    if not parts:
        raise GraphError("build_hn needs at least one part")
    total = sum(p.graph.n for p in parts) + len(parts)
    if total > MAX_VERTICES:
        raise GraphError(f"construction would have {total} > {MAX_VERTICES} vertices")
    edges = []
    offset = 0
    offsets = []
    for p in parts:
        offsets.append(offset)
        edges.extend((u + offset, v + offset) for u, v in p.graph.edges())
        offset += p.graph.n
    ys = [offset + i for i in range(len(parts))]
    for p, off, y in zip(parts, offsets, ys):
        edges.extend((y, x + off) for x in range(p.graph.n) if p.attach_set >> x & 1)
    edges.extend((ys[i], ys[j]) for i in range(len(ys)) for j in range(i + 1, len(ys)))
    return Graph.from_edges(total, edges)


def check_construction1(parts: Sequence[ConstructionPart]) -> bool:
    """Preconditions for the dimension/degree formulas of H_n."""
    if not parts:
        return False
    leads = []
    for p in parts:
        s = _stats(p)
        t = s.alpha - s.alpha_rest
        if t < 1 or t % 2 == 0:
            return False
        if s.deg - s.deg_rest != t - 1:
            return False
        leads.extend((s.lead, s.lead_rest))
    return all(c > 0 for c in leads) or all(c < 0 for c in leads)


def predict_deg(parts: Sequence[ConstructionPart]) -> PredictedInvariants:
    """dim = sum alpha(G_i), deg h = 1 + sum deg h(G_i), if the checks pass."""
    if not check_construction1(parts):
        return PredictedInvariants()
    stats = [_stats(p) for p in parts]
    return PredictedInvariants(
        dim=sum(s.alpha for s in stats),
        deg_h=1 + sum(s.deg for s in stats),
    )


def check_construction2(parts: Sequence[ConstructionPart]) -> bool:
    """Each G_i has an edge and v(G_i) >= 1 + v(G_i minus A_i)."""
    if not parts:
        return False
    for p in parts:
        if not has_edges(p.graph):
            return False
        rest = _rest(p)
        v_rest = 0 if rest is None else v_number(rest)
        if v_number(p.graph) < 1 + v_rest:
            return False
    return True


def predict_v(parts: Sequence[ConstructionPart]) -> PredictedInvariants:
    """v(I(H_n)) = min_i (1 + v(G_i - A_i) + sum_{j != i} v(G_j)), n >= 2."""
    if len(parts) < 2:
        raise ValueError("the v-number formula needs at least two parts; compute n = 1 directly")
    if not check_construction2(parts):
        return PredictedInvariants()
    vs = [v_number(p.graph) for p in parts]
    rests = []
    for p in parts:
        rest = _rest(p)
        rests.append(0 if rest is None else v_number(rest))
    total = sum(vs)
    return PredictedInvariants(v=min(1 + rests[i] + total - vs[i] for i in range(len(parts))))


def predict(parts: Sequence[ConstructionPart]) -> PredictedInvariants:
    """All predictions whose preconditions hold."""
    deg = predict_deg(parts)
    v = predict_v(parts).v if len(parts) >= 2 else None
    return PredictedInvariants(dim=deg.dim, deg_h=deg.deg_h, v=v)


def build_hvd(v: int, d: int) -> Graph:
    """H(v, d): v triangles x_i y_i w_i, x_1 joined to x_2..x_v, d - v leaves on w_1.

    Labels: x_i -> i-1, y_i -> v+i-1, w_i -> 2v+i-1, z_j -> 3v+j-1.
    """
    if not 1 <= v <= d:
        raise GraphError(f"H(v, d) needs 1 <= v <= d, got v={v}, d={d}")
    n = 3 * v + (d - v)
    if n > MAX_VERTICES:
        raise GraphError(f"H({v}, {d}) would have {n} > {MAX_VERTICES} vertices")
    x = lambda i: i - 1  # noqa: E731
    y = lambda i: v + i - 1  # noqa: E731
    w = lambda i: 2 * v + i - 1  # noqa: E731
    edges = []
    for i in range(1, v + 1):
        edges += [(x(i), y(i)), (y(i), w(i)), (w(i), x(i))]
    edges += [(x(1), x(i)) for i in range(2, v + 1)]
    edges += [(w(1), 3 * v + j) for j in range(d - v)]
    return Graph.from_edges(n, edges)


# -- catalog -------------------------------------------------------------


def _from_one_based(n: int, edges: list[tuple[int, int]]) -> Graph:
    return Graph.from_edges(n, [(a - 1, b - 1) for a, b in edges])


FIG1_EDGES = [
    (1, 2), (1, 6), (1, 7), (1, 5), (2, 8), (2, 10), (2, 9), (2, 5), (3, 5), (3, 4),
    (3, 10), (3, 11), (4, 5), (4, 6), (4, 8), (4, 9), (6, 7), (6, 8), (6, 10), (7, 9),
    (7, 11), (8, 9), (8, 10), (9, 11), (10, 11),
]

FIG2_EDGES = [
    (1, 4), (1, 5), (2, 5), (2, 6), (3, 6), (3, 7), (4, 7), (1, 8), (2, 8), (4, 8),
    (6, 8), (1, 9), (3, 9), (5, 9), (6, 9), (2, 10), (3, 10), (5, 10), (7, 10), (2, 11),
    (4, 11), (5, 11), (6, 11), (7, 11), (9, 11),
]

# Triangle x1 x2 x3 with x4 x5 hanging as a second triangle on x3.
_BOWTIE = [(1, 2), (1, 3), (2, 3), (4, 5), (3, 4), (3, 5)]


def fig1() -> Graph:
    return _from_one_based(11, FIG1_EDGES)


def fig2() -> Graph:
    return _from_one_based(11, FIG2_EDGES)


def fig5() -> Graph:
    """Example 5.3: bowtie plus edge x6x7, all joined to the triangle x8 x9 x10."""
    edges = _BOWTIE + [(6, 7), (8, 9), (8, 10), (9, 10)]
    edges += [(c, i) for c in (8, 9, 10) for i in range(1, 8)]
    return _from_one_based(10, edges)


def fig7() -> Graph:
    """Example 5.5: bowtie plus edge x6x7, all joined to x8."""
    return _from_one_based(8, _BOWTIE + [(6, 7)] + [(8, i) for i in range(1, 8)])


def fig8() -> Graph:
    """Example 5.6: bowtie joined to x6."""
    return _from_one_based(6, _BOWTIE + [(6, i) for i in range(1, 6)])


def fig10() -> Graph:
    """Bowtie on z1..z5 with y4, y5 joined to every z (z_i -> i-1, y4 -> 5, y5 -> 6)."""
    return _from_one_based(7, _BOWTIE + [(y, i) for y in (6, 7) for i in range(1, 6)])


def ex5_8() -> Graph:
    """Fig. 1 plus a vertex y joined to x1..x4."""
    return _from_one_based(12, FIG1_EDGES + [(12, i) for i in range(1, 5)])


def ex5_9() -> Graph:
    """Fig. 1 plus y1, y2 each joined to x1..x4."""
    return _from_one_based(13, FIG1_EDGES + [(y, i) for y in (12, 13) for i in range(1, 5)])


def thm35_parts(n: int) -> list[ConstructionPart]:
    return [ConstructionPart(fig1(), to_mask(range(5))) for _ in range(n)]


def ex510_parts(n: int) -> list[ConstructionPart]:
    g = fig1()
    return [ConstructionPart(g, g.full) for _ in range(n)]


def hn_thm35(n: int) -> Graph:
    return build_hn(thm35_parts(n))


def hn_ex510(n: int) -> Graph:
    return build_hn(ex510_parts(n))


def ex5_11() -> Graph:
    """H_3 of the Fig. 1 family, plus Fig. 10's graph, plus K_5 on y_1..y_5."""
    h3 = hn_thm35(3)
    g = fig10()
    off = h3.n
    edges = h3.edges() + [(u + off, v + off) for u, v in g.edges()]
    ys = [33, 34, 35, off + 5, off + 6]
    edges += [(ys[i], ys[j]) for i in range(5) for j in range(i + 1, 5)]
    return Graph.from_edges(h3.n + g.n, list(set(edges)))


_FIXED = {
    "fig1": fig1,
    "fig2": fig2,
    "fig3": lambda: star_graph(3),
    "fig4": lambda: build_hvd(4, 7),
    "fig5": fig5,
    "fig6": lambda: path_graph(5),
    "fig7": fig7,
    "fig8": fig8,
    "fig9": lambda: complete_graph(2),
    "fig10": fig10,
    "ex5_1": lambda: complete_graph(2),
    "ex5_2": lambda: star_graph(3),
    "ex5_3": fig5,
    "ex5_4": lambda: path_graph(5),
    "ex5_5": fig7,
    "ex5_6": fig8,
    "ex5_7": fig1,
    "ex5_8": ex5_8,
    "ex5_9": ex5_9,
    "ex5_11": ex5_11,
}

_PARAMETRIC = {
    "hvd": (("v", "d"), build_hvd),
    "hn_thm35": (("n",), hn_thm35),
    "hn_ex510": (("n",), hn_ex510),
}

CATALOG = tuple(sorted(_FIXED)) + tuple(sorted(_PARAMETRIC))


def paper_graph(name: str, **params: int) -> Graph:
    """Look up a named example; parametric names take keyword parameters."""
    if name in _FIXED:
        return _FIXED[name]()
    if name in _PARAMETRIC:
        keys, builder = _PARAMETRIC[name]
        missing = [k for k in keys if params.get(k) is None]
        if missing:
            raise KeyError(f"{name} needs parameter(s) {', '.join(missing)}")
        return builder(*(params[k] for k in keys))
    raise KeyError(f"unknown catalog graph {name!r}")


def family_parts(name: str, n: int) -> list[ConstructionPart]:
    if name == "thm35":
        return thm35_parts(n)
    if name == "ex510":
        return ex510_parts(n)
    raise KeyError(f"unknown construction family {name!r}")


def paper_predictions(name: str, **params: int) -> PredictedInvariants:
    """Predicted invariants for a catalog entry, where a formula applies."""
    if name == "hvd":
        return PredictedInvariants(v=params["v"], deg_h=params["d"])
    if name in ("hn_thm35", "hn_ex510"):
        return predict(family_parts(name[3:], params["n"]))
    return PredictedInvariants()
