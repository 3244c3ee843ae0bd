"""Slow, obviously-correct reference implementations used as test oracles."""

from itertools import combinations, combinations_with_replacement, permutations

from edgeideal.graph import Graph


def adjacent(g: Graph, u: int, v: int) -> bool:
    return bool(g.adj[u] >> v & 1)


def independent(g: Graph, verts) -> bool:
    return not any(adjacent(g, u, v) for u, v in combinations(verts, 2))


def independent_sets(g: Graph):
    for k in range(g.n + 1):
        for s in combinations(range(g.n), k):
            if independent(g, s):
                yield s


def alpha(g: Graph) -> int:
    return max(len(s) for s in independent_sets(g))


def beta(g: Graph) -> int:
    return min(
        k for k in range(g.n + 1)
        for c in combinations(range(g.n), k)
        if all(u in c or v in c for u, v in g.edges())
    )


def neighbours(g: Graph, verts) -> set[int]:
    return {u for v in verts for u in range(g.n) if adjacent(g, u, v)}


def v_sets(g: Graph):
    """All independent A with N(A) a vertex cover, by increasing size."""
    for k in range(1, g.n + 1):
        for a in combinations(range(g.n), k):
            if not independent(g, a):
                continue
            na = neighbours(g, a)
            if all(u in na or v in na for u, v in g.edges()):
                yield a


def v_number(g: Graph) -> int:
    return len(next(v_sets(g)))


def v_witness(g: Graph) -> tuple[int, ...]:
    k = v_number(g)
    return min(a for a in v_sets(g) if len(a) == k)


def monomial_count(g: Graph, degree: int) -> int:
    """Standard monomials of R/I(G) in a given degree, by direct enumeration."""
    return sum(
        1 for mono in combinations_with_replacement(range(g.n), degree)
        if independent(g, set(mono))
    )


def is_chordal(g: Graph) -> bool:
    """No induced cycle of length >= 4."""
    for k in range(4, g.n + 1):
        for w in combinations(range(g.n), k):
            degs = [sum(adjacent(g, u, v) for v in w if v != u) for u in w]
            if all(d == 2 for d in degs) and _connected(g, w):
                return False
    return True


def _connected(g: Graph, w) -> bool:
    w = set(w)
    seen = {next(iter(w))}
    stack = list(seen)
    while stack:
        u = stack.pop()
        for v in w:
            if v not in seen and adjacent(g, u, v):
                seen.add(v)
                stack.append(v)
    return seen == w


def induced_matching_number(g: Graph) -> int:
    edges = g.edges()
    best = 0
    for k in range(1, len(edges) + 1):
        found = False
        for ms in combinations(edges, k):
            verts = [x for e in ms for x in e]
            if len(set(verts)) != 2 * k:
                continue
            induced = sum(adjacent(g, u, v) for u, v in combinations(verts, 2))
            if induced == k:
                found = True
                break
        if not found:
            break
        best = k
    return best


def canonical_code(g: Graph) -> tuple[int, ...]:
    """Least graph6 bit sequence over all n! relabelings."""
    best = None
    for perm in permutations(range(g.n)):
        code = tuple(
            int(adjacent(g, perm[i], perm[j])) for j in range(1, g.n) for i in range(j)
        )
        if best is None or code < best:
            best = code
    return best


def all_labeled_graphs(n: int):
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [p for k, p in enumerate(pairs) if mask >> k & 1])
