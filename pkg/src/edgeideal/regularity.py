"""Castelnuovo-Mumford regularity of R/I(G) via reduced homology.

By Hochster's formula the graded Betti numbers of R/I(G) are sums of reduced
Betti numbers of induced subcomplexes Ind(G_W), so

    reg(R/I(G)) = max{ j + 1 : W subset of V(G), H~_j(Ind(G_W); k) != 0 }.

Homology is computed from boundary-matrix ranks: exact fraction-free
(Bareiss) elimination over the rationals, dense elimination mod p otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, GraphError, bits, induced_matching_number, is_chordal, popcount

DEFAULT_MAX_VERTICES = 13
DEFAULT_MAX_FACES = 2_000_000

# When set, every boundary pair built is checked for d o d == 0.
CHECK_BOUNDARIES = False


class ResourceLimitError(RuntimeError):
    """A configured size cap would be exceeded."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: ``characteristic == 0`` means the rationals."""

    characteristic: int = 0

    def __post_init__(self) -> None:
        if self.characteristic != 0 and not _is_prime(self.characteristic):
            raise ValueError(f"{self.characteristic} is not prime")

    @classmethod
    def rationals(cls) -> FieldSpec:
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> FieldSpec:
        return cls(p)

    @classmethod
    def parse(cls, name: str) -> FieldSpec:
        """Accepts ``q``/``qq``/``rationals`` or ``f<p>``/``gf<p>``/``<p>``."""
        key = name.strip().lower()
        if key in ("q", "qq", "rationals", "0"):
            return cls(0)
        for prefix in ("gf", "f", "z"):
            if key.startswith(prefix) and key[len(prefix):].isdigit():
                return cls(int(key[len(prefix):]))
        if key.isdigit():
            return cls(int(key))
        raise ValueError(f"unknown field {name!r}")

    @property
    def label(self) -> str:
        return "q" if self.characteristic == 0 else f"f{self.characteristic}"


RATIONALS = FieldSpec(0)
GF2 = FieldSpec(2)


# -- complexes -----------------------------------------------------------


@dataclass(frozen=True)
class SimplicialComplex:
    """Faces grouped by size; ``faces[k]`` holds the (k-1)-dimensional faces.

    ``faces[0] == (0,)`` is the empty face.  Within a dimension faces are
    sorted by their bitmask value.
    """

    faces: tuple[tuple[int, ...], ...]
    _index: list = field(default_factory=list, repr=False, compare=False)

    @property
    def dim(self) -> int:
        return len(self.faces) - 2

    def faces_of_dim(self, d: int) -> tuple[int, ...]:
        k = d + 1
        return self.faces[k] if 0 <= k < len(self.faces) else ()

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(f) for f in self.faces)

    def index(self, d: int) -> dict[int, int]:
        if not self._index:
            self._index.extend({face: i for i, face in enumerate(fs)} for fs in self.faces)
        return self._index[d + 1]


def independence_complex(
    g: Graph, w: int | None = None, max_faces: int = DEFAULT_MAX_FACES
) -> SimplicialComplex:
    """Ind(G) (or Ind(G_W)) with faces labelled by original vertex indices."""
    mask = g.full if w is None else w
    adj = g.adj
    by_size: list[list[int]] = [[0]]
    count = 1
    # Extend each face only by larger vertices so every face is built once.
    stack = [(0, mask)]
    while stack:
        face, allowed = stack.pop()
        for v in bits(allowed):
            new = face | 1 << v
            size = popcount(new)
            if size == len(by_size):
                by_size.append([])
            by_size[size].append(new)
            count += 1
            if count > max_faces:
                raise ResourceLimitError(f"independence complex exceeds {max_faces} faces")
            rest = allowed & ~adj[v] & ~((1 << (v + 1)) - 1)
            if rest:
                stack.append((new, rest))
    return SimplicialComplex(tuple(tuple(sorted(fs)) for fs in by_size))


def boundary_columns(c: SimplicialComplex, d: int) -> list[list[tuple[int, int]]]:
    """Sparse columns of the boundary map from d-faces to (d-1)-faces.

    Column j lists ``(row, sign)`` for the j-th d-face; removing the vertex in
    sorted position ``i`` contributes sign ``(-1)**i``.
    """
    faces = c.faces_of_dim(d)
    if not faces:
        return []
    rows = c.index(d - 1)
    cols = []
    for face in faces:
        col = []
        for pos, v in enumerate(bits(face)):
            col.append((rows[face & ~(1 << v)], -1 if pos & 1 else 1))
        cols.append(col)
    return cols


def boundary_matrix(c: SimplicialComplex, d: int) -> list[list[int]]:
    """Dense boundary matrix, rows = (d-1)-faces, columns = d-faces."""
    nrows = len(c.faces_of_dim(d - 1))
    cols = boundary_columns(c, d)
    mat = [[0] * len(cols) for _ in range(nrows)]
    for j, col in enumerate(cols):
        for i, s in col:
            mat[i][j] = s
    return mat


def check_boundary_pair(c: SimplicialComplex, d: int) -> None:
    """Raise AssertionError unless boundary(d) o boundary(d+1) == 0."""
    lower = boundary_columns(c, d)
    upper = boundary_columns(c, d + 1)
    for col in upper:
        acc: dict[int, int] = {}
        for mid, s in col:
            for row, t in lower[mid]:
                acc[row] = acc.get(row, 0) + s * t
        if any(acc.values()):
            raise AssertionError(f"boundary composite nonzero at dimension {d}")


# -- ranks ---------------------------------------------------------------


def rank_bareiss(matrix: list[list[int]]) -> int:
    """Exact rank over Q by fraction-free Gaussian elimination."""
    a = [list(row) for row in matrix if any(row)]
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if a[r][col]), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        p = a[rank][col]
        for r in range(rank + 1, nrows):
            x = a[r][col]
            row_r = a[r]
            row_p = a[rank]
            for k in range(col + 1, ncols):
                row_r[k] = (p * row_r[k] - x * row_p[k]) // prev
            row_r[col] = 0
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def rank_gf2(columns: list[list[tuple[int, int]]]) -> int:
    """Rank over GF(2) with each column packed into an int."""
    basis: dict[int, int] = {}
    rank = 0
    for col in columns:
        v = 0
        for i, _ in col:
            v ^= 1 << i
        while v:
            top = v.bit_length() - 1
            if top in basis:
                v ^= basis[top]
            else:
                basis[top] = v
                rank += 1
                break
    return rank


def rank_mod_p(matrix: list[list[int]], p: int) -> int:
    a = [[x % p for x in row] for row in matrix]
    a = [row for row in a if any(row)]
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if a[r][col]), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        inv = pow(a[rank][col], p - 2, p)
        row_p = [x * inv % p for x in a[rank]]
        a[rank] = row_p
        for r in range(rank + 1, nrows):
            x = a[r][col]
            if x:
                a[r] = [(y - x * z) % p for y, z in zip(a[r], row_p)]
        rank += 1
        if rank == nrows:
            break
    return rank


def boundary_rank(c: SimplicialComplex, d: int, k: FieldSpec) -> int:
    if d < 0 or not c.faces_of_dim(d):
        return 0
    if k.characteristic == 2:
        return rank_gf2(boundary_columns(c, d))
    mat = boundary_matrix(c, d)
    if k.characteristic == 0:
        return rank_bareiss(mat)
    return rank_mod_p(mat, k.characteristic)


def reduced_betti(c: SimplicialComplex, k: FieldSpec = RATIONALS) -> list[int]:
    """Reduced Betti numbers for dimensions -1..dim(c)."""
    if CHECK_BOUNDARIES:
        for d in range(0, c.dim):
            check_boundary_pair(c, d)
    ranks = [boundary_rank(c, d, k) for d in range(-1, c.dim + 2)]
    # ranks[j + 1] is the rank of the boundary map out of dimension j.
    return [
        len(c.faces_of_dim(j)) - ranks[j + 1] - ranks[j + 2]
        for j in range(-1, c.dim + 1)
    ]


def _top_nonzero_homology(c: SimplicialComplex, k: FieldSpec, floor: int) -> int:
    """Largest j > floor with nonzero reduced homology, or ``floor``."""
    if CHECK_BOUNDARIES:
        for d in range(0, c.dim):
            check_boundary_pair(c, d)
    upper = boundary_rank(c, c.dim + 1, k)
    for j in range(c.dim, floor, -1):
        lower = boundary_rank(c, j, k)
        if len(c.faces_of_dim(j)) - lower - upper:
            return j
        upper = lower
    return floor


# -- regularity ----------------------------------------------------------


def _fold(adj: tuple[int, ...], w: int) -> int:
    """Shrink ``w`` by deleting vertices whose neighbourhood contains another's.

    If N(u) is a subset of N(x) within G_W (u != x), Ind(G_W) and
    Ind(G_W - x) are homotopy equivalent, so homology is unchanged.
    """
    changed = True
    while changed:
        changed = False
        verts = list(bits(w))
        nbrs = {v: adj[v] & w for v in verts}
        for u in verts:
            nu = nbrs[u]
            for x in verts:
                if x != u and nu & ~nbrs[x] == 0:
                    w &= ~(1 << x)
                    changed = True
                    break
            if changed:
                break
    return w


def regularity(
    g: Graph,
    k: FieldSpec = RATIONALS,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    fold: bool = True,
) -> int:
    """reg(R/I(G)) over the field ``k`` by a scan of all induced subgraphs.

    With ``fold`` the induced subgraphs are first reduced by neighbourhood
    domination, which preserves the homotopy type of the independence
    complex; ``fold=False`` takes homology of Ind(G_W) as is.
    """
    if not any(g.adj):
        raise GraphError("regularity is only computed for graphs with an edge")
    if g.n > max_vertices:
        raise ResourceLimitError(
            f"homology scan over 2^{g.n} subsets exceeds the {max_vertices}-vertex cap"
        )
    adj = g.adj
    best = 0  # a single edge already gives H~_0 != 0, i.e. reg >= 1
    seen: dict[int, int] = {}
    for w in range(1, 1 << g.n):
        # An isolated vertex makes Ind(G_W) a cone, hence acyclic.
        if any(adj[v] & w == 0 for v in bits(w)):
            continue
        reduced = _fold(adj, w) if fold else w
        if reduced != w and any(adj[v] & reduced == 0 for v in bits(reduced)):
            continue
        # Cached tops were computed against an older (lower) floor; a value at
        # or below that floor only says the true top cannot beat ``best``.
        if reduced not in seen:
            c = independence_complex(g, reduced)
            seen[reduced] = _top_nonzero_homology(c, k, best - 1)
        best = max(best, seen[reduced] + 1)
    return best


def regularity_chordal(g: Graph) -> int:
    """reg(R/I(G)) = induced matching number, valid for chordal G."""
    if not is_chordal(g):
        raise GraphError("regularity_chordal requires a chordal graph")
    return induced_matching_number(g)
