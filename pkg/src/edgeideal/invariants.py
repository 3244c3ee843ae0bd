"""Hilbert series, h-polynomial and v-number of edge ideals.

The Hilbert series of R/I(G) is computed from the f-vector of the
independence complex::

    H(t) = sum_i f_{i-1} t^i / (1 - t)^i

brought over the common denominator (1 - t)^alpha.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import comb

from .graph import Graph, GraphError, bits, popcount
from .poly import IntPolynomial

log = logging.getLogger(__name__)


# -- f-vector ------------------------------------------------------------


@dataclass(frozen=True)
class FVector:
    """``counts[i]`` is the number of independent sets of size ``i``."""

    counts: tuple[int, ...]

    @property
    def alpha(self) -> int:
        return len(self.counts) - 1

    def total(self) -> int:
        return sum(self.counts)


def _component_of(adj: tuple[int, ...], mask: int) -> int:
    low = mask & -mask
    comp = low
    frontier = low
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        nxt &= mask & ~comp
        comp |= nxt
        frontier = nxt
    return comp


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_add_shifted(a: list[int], b: list[int]) -> list[int]:
    """a + t*b."""
    out = list(a) + [0] * max(0, len(b) + 1 - len(a))
    for i, y in enumerate(b):
        out[i + 1] += y
    return out


def _independence_poly(adj: tuple[int, ...], mask: int, memo: dict[int, list[int]]) -> list[int]:
    if mask in memo:
        return memo[mask]
    degrees = {v: popcount(adj[v] & mask) for v in bits(mask)}
    if not any(degrees.values()):
        k = popcount(mask)
        result = [comb(k, i) for i in range(k + 1)]
    else:
        comp = _component_of(adj, mask)
        if comp != mask:
            result = _poly_mul(
                _independence_poly(adj, comp, memo),
                _independence_poly(adj, mask & ~comp, memo),
            )
        else:
            v = max(degrees, key=lambda u: (degrees[u], -u))
            without = _independence_poly(adj, mask & ~(1 << v), memo)
            with_v = _independence_poly(adj, mask & ~(adj[v] | (1 << v)), memo)
            result = _poly_add_shifted(without, with_v)
    memo[mask] = result
    return result


def f_vector(g: Graph, w: int | None = None) -> FVector:
    """Independent-set counts by size, for G or its induced subgraph on ``w``."""
    mask = g.full if w is None else w
    counts = _independence_poly(g.adj, mask, {}) if mask else [1]
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return FVector(tuple(counts))


# -- Hilbert series ------------------------------------------------------


@dataclass(frozen=True)
class HilbertSeries:
    """``numerator(t) / (1 - t)**pole_order``."""

    numerator: IntPolynomial
    pole_order: int

    def to_text(self) -> str:
        return f"({self.numerator})/(1-t)^{self.pole_order}"

    def to_json(self) -> dict:
        return {
            "numerator": [str(c) for c in self.numerator.coeffs],
            "pole_order": self.pole_order,
        }

    @classmethod
    def from_json(cls, data: dict) -> HilbertSeries:
        return cls(IntPolynomial(tuple(int(c) for c in data["numerator"])), int(data["pole_order"]))

    def __mul__(self, other: HilbertSeries) -> HilbertSeries:
        return HilbertSeries(self.numerator * other.numerator, self.pole_order + other.pole_order)


def series_from_f_vector(f: FVector) -> HilbertSeries:
    alpha = f.alpha
    num = IntPolynomial()
    for i, count in enumerate(f.counts):
        term = IntPolynomial((count,)).shift(i) * IntPolynomial.one_minus_t_power(alpha - i)
        num = num + term
    pole = alpha
    while pole > 0 and num(1) == 0:
        # Unreachable for edge ideals: num(1) = f_{alpha-1} > 0.
        log.warning("reducing Hilbert numerator by (1 - t) at pole order %d", pole)
        num = num.divide_one_minus_t()
        pole -= 1
    assert num(1) != 0, "reduced Hilbert numerator vanishes at t = 1"
    return HilbertSeries(num, pole)


def hilbert_series(g: Graph) -> HilbertSeries:
    """Reduced Hilbert series of K[V(G)]/I(G)."""
    return series_from_f_vector(f_vector(g))


def h_polynomial(g: Graph) -> IntPolynomial:
    return hilbert_series(g).numerator


def deg_h(g: Graph) -> int:
    """Degree of the h-polynomial (0 for an edgeless graph, where h = 1)."""
    return h_polynomial(g).degree


def leading_coefficient(g: Graph) -> int:
    return h_polynomial(g).leading_coefficient


def series_coefficients(s: HilbertSeries, upto: int) -> list[int]:
    """First ``upto + 1`` Taylor coefficients of the series."""
    if upto < 0:
        raise ValueError("upto must be non-negative")
    k = s.pole_order
    if k == 0:
        pole = [1] + [0] * upto
    else:
        pole = [comb(d + k - 1, k - 1) for d in range(upto + 1)]
    num = s.numerator.coeffs
    return [
        sum(num[i] * pole[d - i] for i in range(min(d, len(num) - 1) + 1))
        for d in range(upto + 1)
    ]


# -- v-number ------------------------------------------------------------
#
# v(I(G)) is the least |A| over independent sets A whose neighbourhood is a
# vertex cover.  N(A) covers the edge uw iff A meets N(u) | N(w), so the
# search picks an uncovered edge and branches on the vertices that could
# cover it.


def _uncovered_candidates(adj, edges, na: int, blocked: int) -> list[int] | None:
    """Candidate masks for each edge not yet covered by N(A).

    Returns None when some uncovered edge has no candidate left.
    """
    out = []
    for u, w in edges:
        if (na >> u | na >> w) & 1:
            continue
        cand = (adj[u] | adj[w]) & ~blocked
        if not cand:
            return None
        out.append(cand)
    return out


def _disjoint_lower_bound(cands: list[int]) -> int:
    used = 0
    lb = 0
    for c in sorted(cands, key=popcount):
        if not c & used:
            used |= c
            lb += 1
    return lb


def _feasible(adj, edges, a: int, na: int, excluded: int, budget: int) -> bool:
    cands = _uncovered_candidates(adj, edges, na, a | na | excluded)
    if cands is None:
        return False
    if not cands:
        return True
    if budget == 0 or _disjoint_lower_bound(cands) > budget:
        return False
    branch = min(cands, key=popcount)
    for c in bits(branch):
        if _feasible(adj, edges, a | 1 << c, na | adj[c], excluded, budget - 1):
            return True
        excluded |= 1 << c
    return False


def v_number(g: Graph) -> int:
    """v-number of I(G); 0 for an edgeless graph."""
    edges = g.edges()
    if not edges:
        return 0
    cands = _uncovered_candidates(g.adj, edges, 0, 0)
    k = max(1, _disjoint_lower_bound(cands))
    while not _feasible(g.adj, edges, 0, 0, 0, k):
        k += 1
    return k


def _lex_search(adj, edges, full: int, a: int, na: int, last: int, need: int) -> int | None:
    done = (1 << (last + 1)) - 1  # vertices <= last are no longer allowed
    cands = _uncovered_candidates(adj, edges, na, a | na | done)
    if cands is None:
        return None
    if not cands:
        return a
    if need == 0 or _disjoint_lower_bound(cands) > need:
        return None
    # Every uncovered edge needs a later vertex, so the next pick cannot
    # exceed the smallest of the per-edge maxima.
    cap = min(c.bit_length() - 1 for c in cands)
    allowed = full & ~(a | na | done) & ((1 << (cap + 1)) - 1)
    for c in bits(allowed):
        found = _lex_search(adj, edges, full, a | 1 << c, na | adj[c], c, need - 1)
        if found is not None:
            return found
    return None


def v_witness(g: Graph) -> int:
    """Lexicographically least minimum-size A with N(A) a minimal vertex cover."""
    edges = g.edges()
    if not edges:
        raise GraphError("v-witness is undefined for an edgeless graph")
    k = v_number(g)
    found = _lex_search(g.adj, edges, g.full, 0, 0, -1, k)
    assert found is not None and popcount(found) == k
    return found
