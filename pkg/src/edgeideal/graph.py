"""Bitset simple graphs, graph6 I/O and basic graph-theoretic quantities.

Vertex sets are plain ``int`` bitmasks: bit ``i`` set means vertex ``i`` is in
the set.  A :class:`Graph` stores one neighbourhood mask per vertex.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

MAX_VERTICES = 64


class GraphError(ValueError):
    """Invalid graph data or an operation that would produce one."""


class Graph6Error(ValueError):
    """Base class for graph6 parse errors."""


class Graph6HeaderError(Graph6Error):
    pass


class Graph6SizeError(Graph6Error):
    pass


class Graph6ByteError(Graph6Error):
    pass


class Graph6LengthError(Graph6Error):
    pass


class Graph6PaddingError(Graph6Error):
    pass


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def popcount(mask: int) -> int:
    return mask.bit_count()


@dataclass(frozen=True)
class Graph:
    """A simple graph on vertices ``0..n-1``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count must be in 1..{MAX_VERTICES}, got {self.n}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for i, nb in enumerate(self.adj):
            if nb & ~full:
                raise GraphError(f"vertex {i} has a neighbour outside 0..{self.n - 1}")
            if nb >> i & 1:
                raise GraphError(f"loop at vertex {i}")
            for j in bits(nb):
                if not self.adj[j] >> i & 1:
                    raise GraphError(f"asymmetric adjacency between {i} and {j}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(popcount(a) for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in bits(self.adj[i] >> (i + 1) << (i + 1))]

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


# -- named graphs --------------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << i) for i in range(n)))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the centre at vertex 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


# -- graph6 --------------------------------------------------------------


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))


def write_graph6(g: Graph) -> str:
    """Encode ``g`` in graph6 without relabelling."""
    out = [_encode_n(g.n)]
    acc = 0
    k = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            k += 1
            if k == 6:
                out.append(chr(acc + 63))
                acc = k = 0
    if k:
        out.append(chr((acc << (6 - k)) + 63))
    return "".join(out)


def parse_graph6(code: str) -> Graph:
    """Decode one graph6 string (an optional ``>>graph6<<`` prefix is allowed)."""
    text = code.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    if not text:
        raise Graph6HeaderError("empty graph6 string")
    data = [ord(c) for c in text]
    for pos, b in enumerate(data):
        if not 63 <= b <= 126:
            raise Graph6ByteError(f"byte {b!r} at position {pos} is outside 63..126")

    if data[0] != 126:
        n, body = data[0] - 63, data[1:]
    else:
        if len(data) >= 2 and data[1] == 126:
            raise Graph6SizeError("8-byte size header implies n > 258047")
        if len(data) < 4:
            raise Graph6HeaderError("truncated long-form size header")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
        if n < 63:
            raise Graph6HeaderError(f"long-form header used for n={n}")
    if n == 0:
        raise Graph6HeaderError("graph6 encodes a 0-vertex graph")
    if n > MAX_VERTICES:
        raise Graph6SizeError(f"n={n} exceeds the {MAX_VERTICES}-vertex cap")

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) < need:
        raise Graph6LengthError(f"body has {len(body)} bytes, expected {need}")
    if len(body) > need:
        raise Graph6LengthError(f"body has {len(body)} bytes, expected {need}")

    adj = [0] * n
    pos = 0
    total = 0
    for b in body:
        total = (total << 6) | (b - 63)
    pad = need * 6 - nbits
    if total & ((1 << pad) - 1):
        raise Graph6PaddingError("non-zero padding bits")
    total >>= pad
    for j in range(1, n):
        for i in range(j):
            if total >> (nbits - 1 - pos) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            pos += 1
    return Graph(n, tuple(adj))


def iter_graph6_lines(lines: Iterable[str]) -> Iterator[str]:
    """Yield graph6 codes from file lines, skipping blanks and ``>>`` headers."""
    for line in lines:
        line = line.strip()
        if not line:
            continue
        if line.startswith(">>graph6<<"):
            line = line[len(">>graph6<<"):]
        elif line.startswith(">>"):
            continue
        if line:
            yield line


def read_graph6_file(path) -> Iterator[Graph]:
    with open(path, encoding="ascii") as fh:
        for code in iter_graph6_lines(fh):
            yield parse_graph6(code)


# -- subgraphs and set predicates ----------------------------------------


def induced_subgraph(g: Graph, w: int) -> Graph:
    """Induced subgraph on ``w``, relabelled 0..|w|-1 in increasing order."""
    if w & ~g.full:
        raise GraphError("vertex set has bits outside the graph")
    if not w:
        raise GraphError("induced subgraph on the empty set")
    keep = list(bits(w))
    index = {v: k for k, v in enumerate(keep)}
    adj = []
    for v in keep:
        row = 0
        for u in bits(g.adj[v] & w):
            row |= 1 << index[u]
        adj.append(row)
    return Graph(len(keep), tuple(adj))


def delete_vertices(g: Graph, a: int) -> Graph:
    """G \\ A, the induced subgraph on the complement of ``a``."""
    return induced_subgraph(g, g.full & ~a)


def neighborhood(g: Graph, a: int) -> int:
    out = 0
    for v in bits(a):
        out |= g.adj[v]
    return out


def closed_neighborhood(g: Graph, a: int) -> int:
    return neighborhood(g, a) | a


def is_independent(g: Graph, a: int) -> bool:
    for v in bits(a):
        if g.adj[v] & a:
            return False
    return True


def is_vertex_cover(g: Graph, c: int) -> bool:
    # C covers every edge iff the complement is independent.
    return is_independent(g, g.full & ~c)


def is_minimal_vertex_cover(g: Graph, c: int) -> bool:
    if not is_vertex_cover(g, c):
        return False
    return not any(is_vertex_cover(g, c & ~(1 << v)) for v in bits(c))


def has_edges(g: Graph, w: int | None = None) -> bool:
    """True when the induced subgraph on ``w`` (default: all of G) has an edge."""
    return not is_independent(g, g.full if w is None else w)


# -- independence number -------------------------------------------------


def _alpha(adj: tuple[int, ...], mask: int, best: int, size: int) -> int:
    # Returns max(best, size + alpha(mask)) with pruning against best.
    while True:
        if size + popcount(mask) <= best:
            return best
        if not mask:
            return size
        pivot = -1
        pivot_deg = -1
        forced = -1
        for v in bits(mask):
            d = popcount(adj[v] & mask)
            if d <= 1:
                forced = v
                break
            if d > pivot_deg:
                pivot, pivot_deg = v, d
        if forced < 0:
            break
        # A vertex of degree <= 1 is always in some maximum independent set.
        size += 1
        mask &= ~(adj[forced] | (1 << forced))
    best = _alpha(adj, mask & ~(adj[pivot] | (1 << pivot)), best, size + 1)
    return _alpha(adj, mask & ~(1 << pivot), best, size)


def independence_number(g: Graph, w: int | None = None) -> int:
    """alpha(G), or alpha(G_W) when ``w`` is given."""
    mask = g.full if w is None else w
    return _alpha(g.adj, mask, 0, 0)


def vertex_cover_number(g: Graph) -> int:
    return g.n - independence_number(g)


# -- induced matchings ---------------------------------------------------


def induced_matching_number(g: Graph) -> int:
    """Size of a largest induced matching."""
    edges = g.edges()
    adj = g.adj
    best = 0

    def grow(start: int, blocked: int, size: int) -> None:
        nonlocal best
        best = max(best, size)
        remaining = len(edges) - start
        if size + remaining <= best:
            return
        for k in range(start, len(edges)):
            u, v = edges[k]
            if blocked >> u & 1 or blocked >> v & 1:
                continue
            # Endpoints of later edges must avoid N[u] and N[v].
            grow(k + 1, blocked | adj[u] | adj[v] | (1 << u) | (1 << v), size + 1)

    grow(0, 0, 0)
    return best


# -- chordality ----------------------------------------------------------


def lex_bfs(g: Graph) -> list[int]:
    """Lexicographic BFS order; ties broken by smallest vertex index."""
    labels: list[list[int]] = [[] for _ in range(g.n)]
    visited = 0
    order = []
    for step in range(g.n, 0, -1):
        best = None
        for v in range(g.n):
            if visited >> v & 1:
                continue
            if best is None or labels[v] > labels[best]:
                best = v
        order.append(best)
        visited |= 1 << best
        for u in bits(g.adj[best] & ~visited):
            labels[u].append(step)
    return order


def is_chordal(g: Graph) -> bool:
    """Perfect-elimination check on the reverse Lex-BFS order."""
    order = lex_bfs(g)
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        # Earlier-visited neighbours of v must form a clique; it suffices to
        # check they are all adjacent to the latest of them.
        earlier = [u for u in bits(g.adj[v]) if pos[u] < pos[v]]
        if len(earlier) < 2:
            continue
        parent = max(earlier, key=pos.__getitem__)
        rest = to_mask(earlier) & ~(1 << parent)
        if rest & ~g.adj[parent]:
            return False
    return True


# -- connectivity --------------------------------------------------------


def components(g: Graph) -> list[int]:
    """Vertex masks of the connected components, ordered by smallest vertex."""
    seen = 0
    out = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = neighborhood(g, frontier) & ~comp
            comp |= nxt
            frontier = nxt
        seen |= comp
        out.append(comp)
    return out


def is_connected(g: Graph) -> bool:
    reached = 1
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for u in bits(g.adj[v] & ~reached):
            reached |= 1 << u
            queue.append(u)
    return reached == g.full


def has_isolated_vertex(g: Graph) -> bool:
    return any(a == 0 for a in g.adj)


def is_disjoint_union_of_stars(g: Graph) -> bool:
    """Every component is K_{1,k} with k >= 1; isolated vertices are rejected."""
    for comp in components(g):
        size = popcount(comp)
        if size == 1:
            return False
        # A star on s vertices is a tree with a vertex adjacent to all others.
        edges = sum(popcount(g.adj[v]) for v in bits(comp)) // 2
        if edges != size - 1:
            return False
        if not any(popcount(g.adj[v]) == size - 1 for v in bits(comp)):
            return False
    return True


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    n = g1.n + g2.n
    if n > MAX_VERTICES:
        raise GraphError(f"disjoint union would have {n} > {MAX_VERTICES} vertices")
    return Graph(n, g1.adj + tuple(a << g1.n for a in g2.adj))


@lru_cache(maxsize=None)
def _complement_adj(n: int, adj: tuple[int, ...]) -> tuple[int, ...]:
    full = (1 << n) - 1
    return tuple(full & ~a & ~(1 << i) for i, a in enumerate(adj))


def complement(g: Graph) -> Graph:
    return Graph(g.n, _complement_adj(g.n, g.adj))
