"""Isomorph-free enumeration, parallel invariant scans and theorem checks."""

from __future__ import annotations

import csv
import hashlib
import io
import json
import os
from collections import Counter, deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from itertools import islice
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .graph import (
    Graph,
    bits,
    has_isolated_vertex,
    independence_number,
    is_connected,
    is_disjoint_union_of_stars,
    iter_graph6_lines,
    parse_graph6,
    write_graph6,
)
from .invariants import hilbert_series, v_number
from .regularity import DEFAULT_MAX_VERTICES, GF2, RATIONALS, FieldSpec, ResourceLimitError, regularity

MAX_BUILTIN_N = 7
DEFAULT_CHUNK = 4096

CSV_COLUMNS = (
    "graph6", "n", "m", "connected", "alpha", "beta", "v",
    "deg_h", "lead_coeff", "reg_q", "reg_f2", "error",
)

# (v, deg h) pairs realised by connected graphs on n vertices.
APPENDIX_A_PANELS: dict[int, frozenset[tuple[int, int]]] = {
    2: frozenset({(1, 1)}),
    3: frozenset({(1, 1), (1, 2)}),
    4: frozenset({(1, 1), (1, 2), (1, 3)}),
    5: frozenset({(1, 1), (1, 2), (1, 3), (1, 4), (2, 2)}),
    6: frozenset({(1, d) for d in range(1, 6)} | {(2, 2), (2, 3)}),
    7: frozenset({(1, d) for d in range(1, 7)} | {(2, 2), (2, 3), (2, 4)}),
    8: frozenset({(1, d) for d in range(1, 8)} | {(2, d) for d in range(2, 6)} | {(3, 3)}),
    9: frozenset({(1, d) for d in range(1, 9)} | {(2, d) for d in range(2, 7)} | {(3, 3), (3, 4), (3, 5)}),
    10: frozenset({(1, d) for d in range(1, 10)} | {(2, d) for d in range(2, 8)} | {(3, 3), (3, 4), (3, 5)}),
}


class InvariantViolation(AssertionError):
    """A computed record contradicts a proven inequality."""

    def __init__(self, graph6: str, message: str):
        super().__init__(f"{message} for graph {graph6}")
        self.graph6 = graph6


class CheckpointError(RuntimeError):
    pass


# -- canonical form ------------------------------------------------------


def _refine(g: Graph) -> list[list[int]]:
    """Equitable colour refinement started from degrees; cells in colour order."""
    colors = [g.degree(v) for v in range(g.n)]
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in bits(g.adj[v])))) for v in range(g.n)]
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if len(ranking) == len(set(colors)):
            colors = new
            break
        colors = new
    cells: dict[int, list[int]] = {}
    for v in range(g.n):
        cells.setdefault(colors[v], []).append(v)
    return [cells[c] for c in sorted(cells)]


def canonical_labeling(g: Graph) -> list[int]:
    """Vertex order giving the lexicographically least graph6 bit string.

    Only orders respecting the refined colour cells are searched, which keeps
    the result an isomorphism invariant.  Position ``p`` gets vertex ``order[p]``.
    """
    cells = _refine(g)
    slots: list[list[int]] = []
    for cell in cells:
        slots.extend([cell] * len(cell))
    n = g.n
    adj = g.adj
    best_cols: list[int] | None = None
    best_order: list[int] = []
    order: list[int] = []
    cols: list[int] = []

    def column(j: int, v: int) -> int:
        # Bits for pairs (0, j), (1, j), ..., (j - 1, j), first pair most significant.
        c = 0
        row = adj[v]
        for u in order:
            c = (c << 1) | (row >> u & 1)
        return c

    def dfs(used: int) -> None:
        nonlocal best_cols, best_order
        j = len(order)
        if j == n:
            if best_cols is None or cols < best_cols:
                best_cols = list(cols)
                best_order = list(order)
            return
        for v in slots[j]:
            if used >> v & 1:
                continue
            c = column(j, v)
            cols.append(c)
            # Prune once the partial bit string exceeds the best one found.
            if best_cols is not None and cols > best_cols[: j + 1]:
                cols.pop()
                continue
            order.append(v)
            dfs(used | 1 << v)
            order.pop()
            cols.pop()

    dfs(0)
    return best_order


def relabel(g: Graph, order: Sequence[int]) -> Graph:
    pos = {v: i for i, v in enumerate(order)}
    return Graph.from_edges(g.n, [(pos[u], pos[v]) for u, v in g.edges()])


def canonical_form(g: Graph) -> Graph:
    return relabel(g, canonical_labeling(g))


def canonical_graph6(g: Graph) -> str:
    return write_graph6(canonical_form(g))


# -- enumeration ---------------------------------------------------------


@lru_cache(maxsize=None)
def _all_graphs(n: int) -> tuple[str, ...]:
    if n == 1:
        return (write_graph6(Graph(1, (0,))),)
    found = set()
    for code in _all_graphs(n - 1):
        g = parse_graph6(code)
        for nbrs in range(1 << (n - 1)):
            adj = [a | ((nbrs >> i & 1) << (n - 1)) for i, a in enumerate(g.adj)]
            adj.append(nbrs)
            found.add(canonical_graph6(Graph(n, tuple(adj))))
    return tuple(sorted(found))


def enumerate_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """One graph per isomorphism class on ``n`` vertices (1 <= n <= 7)."""
    if not 1 <= n <= MAX_BUILTIN_N:
        raise ValueError(
            f"built-in enumeration stops at n={MAX_BUILTIN_N}; "
            "supply a graph6 file (e.g. from nauty geng) for larger n"
        )
    for code in _all_graphs(n):
        g = parse_graph6(code)
        if not connected_only or is_connected(g):
            yield g


# -- records -------------------------------------------------------------


@dataclass
class InvariantRecord:
    graph6: str
    n: int
    m: int
    connected: bool
    alpha: int | None = None
    beta: int | None = None
    v: int | None = None
    deg_h: int | None = None
    lead_coeff: int | None = None
    reg_q: int | None = None
    reg_f2: int | None = None
    error: str | None = None

    def check(self) -> None:
        """Raise InvariantViolation if a proven inequality fails."""
        if self.error is not None:
            return
        if self.alpha + self.beta != self.n:
            raise InvariantViolation(self.graph6, "alpha + beta != n")
        if self.v > self.beta:
            raise InvariantViolation(self.graph6, "v > beta")
        if self.v + self.deg_h > self.n:
            raise InvariantViolation(self.graph6, "v + deg h > n")
        if self.deg_h > self.alpha:
            raise InvariantViolation(self.graph6, "deg h > alpha")

    def csv_row(self) -> list[str]:
        out = []
        for key in CSV_COLUMNS:
            value = getattr(self, key)
            if value is None:
                out.append("")
            elif isinstance(value, bool):
                out.append("1" if value else "0")
            else:
                out.append(str(value))
        return out

    def to_json(self) -> dict:
        data = asdict(self)
        if self.lead_coeff is not None:
            data["lead_coeff"] = str(self.lead_coeff)
        return data

    @classmethod
    def from_csv_row(cls, row: dict[str, str]) -> InvariantRecord:
        def opt(key):
            return int(row[key]) if row.get(key) not in (None, "") else None

        return cls(
            graph6=row["graph6"], n=int(row["n"]), m=int(row["m"]),
            connected=row["connected"] == "1", alpha=opt("alpha"), beta=opt("beta"),
            v=opt("v"), deg_h=opt("deg_h"), lead_coeff=opt("lead_coeff"),
            reg_q=opt("reg_q"), reg_f2=opt("reg_f2"), error=row.get("error") or None,
        )


@dataclass(frozen=True)
class ScanOptions:
    fields: tuple[FieldSpec, ...] = ()
    reg_cap: int = DEFAULT_MAX_VERTICES
    workers: int = 1
    chunk_size: int = DEFAULT_CHUNK
    check_invariants: bool = True


def compute_record(g: Graph, fields: Sequence[FieldSpec] = (), reg_cap: int = DEFAULT_MAX_VERTICES) -> InvariantRecord:
    """All invariants of one graph; regularity of an edgeless graph is 0."""
    rec = InvariantRecord(write_graph6(g), g.n, g.m, is_connected(g))
    try:
        hs = hilbert_series(g)
        rec.alpha = independence_number(g)
        rec.beta = g.n - rec.alpha
        rec.v = v_number(g)
        rec.deg_h = hs.numerator.degree
        rec.lead_coeff = hs.numerator.leading_coefficient
        for k in fields:
            if g.n > reg_cap:
                continue
            r = regularity(g, k, max_vertices=reg_cap) if g.m else 0
            if k == RATIONALS:
                rec.reg_q = r
            elif k == GF2:
                rec.reg_f2 = r
    except (ResourceLimitError, OverflowError, MemoryError) as exc:
        rec.error = f"{type(exc).__name__}: {exc}"
    return rec


def _compute_chunk(args: tuple[list[str], tuple[int, ...], int]) -> list[InvariantRecord]:
    codes, chars, cap = args
    fields = [FieldSpec(c) for c in chars]
    return [compute_record(parse_graph6(c), fields, cap) for c in codes]


def _chunks(source: Iterable[Graph | str], size: int) -> Iterator[list[str]]:
    it = iter(source)
    while True:
        block = list(islice(it, size))
        if not block:
            return
        yield [g if isinstance(g, str) else write_graph6(g) for g in block]


def scan(source: Iterable[Graph | str], opts: ScanOptions = ScanOptions()) -> Iterator[InvariantRecord]:
    """Invariant records in input order; graphs may be Graph objects or graph6 codes."""
    chars = tuple(k.characteristic for k in opts.fields)
    jobs = ((block, chars, opts.reg_cap) for block in _chunks(source, opts.chunk_size))
    if opts.workers <= 1:
        results: Iterator[list[InvariantRecord]] = map(_compute_chunk, jobs)
    else:
        results = _parallel_map(jobs, opts.workers)
    for block in results:
        for rec in block:
            if opts.check_invariants:
                rec.check()
            yield rec


def _parallel_map(jobs, workers: int) -> Iterator[list[InvariantRecord]]:
    # A bounded window of in-flight chunks keeps memory flat on huge inputs;
    # results are yielded in submission order.
    with ProcessPoolExecutor(max_workers=workers) as pool:
        pending: deque = deque()
        for job in jobs:
            pending.append(pool.submit(_compute_chunk, job))
            if len(pending) >= 2 * workers:
                yield pending.popleft().result()
        while pending:
            yield pending.popleft().result()


def default_workers() -> int:
    env = os.environ.get("EIL_WORKERS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


# -- streaming file scans with checkpoints -------------------------------


def _checkpoint_path(input_path: Path) -> Path:
    return Path(str(input_path) + ".ckpt")


def _read_checkpoint(path: Path) -> tuple[int, str]:
    values = dict(line.split("=", 1) for line in path.read_text().split() if "=" in line)
    return int(values["lines"]), values["digest"]


def _file_digest(path: Path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for block in iter(lambda: fh.read(1 << 20), b""):
            h.update(block)
    return h.hexdigest()


def format_records(records: Iterable[InvariantRecord], fmt: str) -> str:
    buf = io.StringIO()
    if fmt == "csv":
        writer = csv.writer(buf, lineterminator="\n")
        for rec in records:
            writer.writerow(rec.csv_row())
    else:
        for rec in records:
            buf.write(json.dumps(rec.to_json(), sort_keys=True) + "\n")
    return buf.getvalue()


def csv_header() -> str:
    return ",".join(CSV_COLUMNS) + "\n"


def scan_file(
    input_path,
    output_path,
    opts: ScanOptions = ScanOptions(),
    fmt: str = "csv",
    checkpoint: bool = False,
    limit: int | None = None,
) -> int:
    """Scan a .g6 file into CSV or JSON lines; returns the records written.

    With ``checkpoint`` a sidecar ``<input>.ckpt`` records the number of input
    lines consumed and the SHA-256 of the output so far, and an existing
    sidecar resumes the scan after verifying that digest.  ``limit`` stops
    after that many records (at a chunk boundary when checkpointing).
    """
    input_path, output_path = Path(input_path), Path(output_path)
    ckpt = _checkpoint_path(input_path)
    done_lines = 0
    if checkpoint and ckpt.exists() and output_path.exists():
        done_lines, digest = _read_checkpoint(ckpt)
        if _file_digest(output_path) != digest:
            raise CheckpointError(f"{output_path} does not match the digest in {ckpt}")
        mode = "a"
    else:
        mode = "w"

    with open(input_path, encoding="ascii") as src:
        raw = list(islice(src, done_lines)) if done_lines else []
        assert len(raw) == done_lines
        written = 0
        with open(output_path, mode, encoding="utf-8", newline="") as out:
            if mode == "w":
                if fmt == "csv":
                    out.write(csv_header())
                out.flush()
                if checkpoint:
                    ckpt.write_text(f"lines=0\ndigest={_file_digest(output_path)}\n")
            line_no = done_lines
            while limit is None or written < limit:
                size = opts.chunk_size if limit is None else min(opts.chunk_size, limit - written)
                lines = list(islice(src, size))
                if not lines:
                    break
                codes = list(iter_graph6_lines(lines))
                records = list(scan(codes, ScanOptions(
                    opts.fields, opts.reg_cap, opts.workers,
                    max(1, -(-len(codes) // max(1, opts.workers))), opts.check_invariants,
                ))) if codes else []
                out.write(format_records(records, fmt))
                out.flush()
                written += len(records)
                line_no += len(lines)
                if checkpoint:
                    ckpt.write_text(f"lines={line_no}\ndigest={_file_digest(output_path)}\n")
    return written


# -- analyses ------------------------------------------------------------


def find_v_gt_deg(source: Iterable[Graph | str], opts: ScanOptions = ScanOptions()) -> list[InvariantRecord]:
    """Records whose v-number exceeds the degree of the h-polynomial."""
    return [r for r in scan(source, opts) if r.error is None and r.v > r.deg_h]


@dataclass
class ScatterTable:
    n: int
    counts: Counter = field(default_factory=Counter)

    @property
    def pairs(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.counts)

    def rows(self) -> list[tuple[int, int, int, int]]:
        return [(self.n, v, d, c) for (v, d), c in sorted(self.counts.items())]

    def to_csv(self, header: bool = True) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        if header:
            writer.writerow(["n", "v", "deg_h", "count"])
        writer.writerows(self.rows())
        return buf.getvalue()


def scatter(n: int, source: Iterable[Graph | str] | None = None, opts: ScanOptions = ScanOptions()) -> ScatterTable:
    """(v, deg h) pairs with multiplicities over the connected graphs on n vertices."""
    if source is None:
        source = enumerate_graphs(n, connected_only=True)
    table = ScatterTable(n)
    for rec in scan(source, opts):
        if rec.n != n or not rec.connected:
            raise ValueError(f"scatter source for n={n} contains {rec.graph6}")
        table.counts[(rec.v, rec.deg_h)] += 1
    for v, d in table.counts:
        if v + d > n:
            raise InvariantViolation("", f"scatter pair ({v}, {d}) breaks v + d <= {n}")
    return table


@dataclass
class CheckResult:
    name: str
    status: str = "theorem"
    checked: int = 0
    passed: int = 0
    violations: list[str] = field(default_factory=list)

    def record(self, ok: bool, graph6: str) -> None:
        self.checked += 1
        if ok:
            self.passed += 1
        else:
            self.violations.append(graph6)

    def to_json(self) -> dict:
        return {
            "name": self.name, "status": self.status, "checked": self.checked,
            "passed": self.passed, "failed": len(self.violations), "violations": self.violations,
        }


@dataclass
class VerificationReport:
    checks: dict[str, CheckResult]
    equality_graphs: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(not c.violations for c in self.checks.values() if c.status == "theorem")

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "checks": {k: c.to_json() for k, c in self.checks.items()},
            "thm42_equality_graphs": self.equality_graphs,
        }


@lru_cache(maxsize=None)
def _exceptional_thm31() -> frozenset[str]:
    from .constructions import fig1, fig2

    return frozenset({canonical_graph6(fig1()), canonical_graph6(fig2())})


def thm31_claims(g: Graph) -> bool:
    """Whether the minimality theorem asserts v <= deg h for this graph."""
    if g.n <= 10:
        return True
    if g.n == 11 and g.m <= 24:
        return True
    if g.n == 11 and g.m == 25:
        return canonical_graph6(g) not in _exceptional_thm31()
    return False


def verify_theorems(source: Iterable[Graph | str], opts: ScanOptions = ScanOptions()) -> VerificationReport:
    """Check the v-number inequalities on every graph from ``source``.

    Equality characterisations are tested on graphs without isolated
    vertices for v = beta (an isolated vertex keeps v = beta but is not a
    star) and on all graphs for v + deg h = n.  The 2v + deg h <= n + 1
    observation concerns connected graphs (both sides are additive over
    components, so 2K_2 already breaks it) and is reported, not asserted.
    """
    checks = {
        "thm31": CheckResult("v <= deg h (where the minimality theorem applies)"),
        "thm41": CheckResult("v <= beta"),
        "thm41_equality": CheckResult("v == beta iff disjoint union of stars"),
        "thm42": CheckResult("v + deg h <= n"),
        "thm42_equality": CheckResult("v + deg h == n iff disjoint union of stars"),
        "conjecture_2vd": CheckResult("2v + deg h <= n + 1", status="conjecture"),
    }
    report = VerificationReport(checks)
    for rec in scan(source, ScanOptions(opts.fields, opts.reg_cap, opts.workers, opts.chunk_size, False)):
        if rec.error is not None:
            continue
        g = parse_graph6(rec.graph6)
        stars = is_disjoint_union_of_stars(g)
        if thm31_claims(g):
            checks["thm31"].record(rec.v <= rec.deg_h, rec.graph6)
        checks["thm41"].record(rec.v <= rec.beta, rec.graph6)
        if not has_isolated_vertex(g):
            checks["thm41_equality"].record((rec.v == rec.beta) == stars, rec.graph6)
        checks["thm42"].record(rec.v + rec.deg_h <= rec.n, rec.graph6)
        equal = rec.v + rec.deg_h == rec.n
        checks["thm42_equality"].record(equal == stars, rec.graph6)
        if equal:
            report.equality_graphs.append(rec.graph6)
        if rec.connected:
            checks["conjecture_2vd"].record(2 * rec.v + rec.deg_h <= rec.n + 1, rec.graph6)
    return report


def all_graphs_upto(n_max: int, connected_only: bool = False, n_min: int = 1) -> Iterator[Graph]:
    for n in range(n_min, n_max + 1):
        yield from enumerate_graphs(n, connected_only)


def read_codes(path) -> Iterator[str]:
    with open(path, encoding="ascii") as fh:
        yield from iter_graph6_lines(fh)
