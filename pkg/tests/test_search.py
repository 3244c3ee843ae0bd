import csv
import json

import pytest

import oracles
from conftest import random_graph
from edgeideal.constructions import fig1, fig2
from edgeideal.graph import complete_graph, cycle_graph, star_graph, write_graph6
from edgeideal.regularity import GF2, RATIONALS
from edgeideal.search import (
    APPENDIX_A_PANELS,
    CSV_COLUMNS,
    CheckpointError,
    InvariantRecord,
    InvariantViolation,
    ScanOptions,
    all_graphs_upto,
    canonical_form,
    canonical_graph6,
    compute_record,
    enumerate_graphs,
    find_v_gt_deg,
    relabel,
    scan,
    scan_file,
    scatter,
    thm31_claims,
    verify_theorems,
)

KNOWN_COUNTS = {1: (1, 1), 2: (2, 1), 3: (4, 2), 4: (11, 6), 5: (34, 21), 6: (156, 112), 7: (1044, 853)}


def test_canonical_form_is_invariant(rng):
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 8), rng.random())
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert canonical_graph6(g) == canonical_graph6(relabel(g, perm))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_canonical_form_separates_exactly_the_isomorphism_classes(n):
    # Same canonical form <=> same minimum over all n! relabelings.
    pairs = {(canonical_graph6(g), oracles.canonical_code(g)) for g in oracles.all_labeled_graphs(n)}
    ours = {a for a, _ in pairs}
    brute = {b for _, b in pairs}
    assert len(pairs) == len(ours) == len(brute)


def test_canonical_form_is_isomorphic_copy(rng):
    for _ in range(30):
        g = random_graph(rng, rng.randint(1, 6), rng.random())
        assert oracles.canonical_code(canonical_form(g)) == oracles.canonical_code(g)


@pytest.mark.parametrize("n", sorted(KNOWN_COUNTS))
def test_enumeration_counts(n):
    total, connected = KNOWN_COUNTS[n]
    graphs = list(enumerate_graphs(n))
    assert len(graphs) == total
    assert len(list(enumerate_graphs(n, connected_only=True))) == connected
    assert len({canonical_graph6(g) for g in graphs}) == total


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_enumeration_against_naive_filter(n):
    classes = {oracles.canonical_code(g) for g in oracles.all_labeled_graphs(n)}
    assert len(classes) == KNOWN_COUNTS[n][0]


def test_enumeration_cap():
    with pytest.raises(ValueError, match="graph6 file"):
        list(enumerate_graphs(8))


def test_compute_record_examples():
    r = compute_record(fig1(), [RATIONALS, GF2])
    assert (r.v, r.deg_h, r.reg_q, r.reg_f2, r.lead_coeff) == (3, 2, 2, 3, 11)
    r = compute_record(star_graph(3))
    assert (r.v, r.deg_h, r.alpha, r.beta) == (1, 3, 3, 1)
    r = compute_record(complete_graph(2), [RATIONALS])
    assert (r.v, r.deg_h, r.reg_q) == (1, 1, 1)


def test_compute_record_caps_become_skips_or_errors():
    r = compute_record(cycle_graph(14), [RATIONALS], reg_cap=13)
    assert r.reg_q is None and r.error is None
    r = compute_record(cycle_graph(10), [RATIONALS], reg_cap=20)
    assert r.reg_q == 3


def test_record_invariant_violation_aborts():
    bad = InvariantRecord("A_", 2, 1, True, alpha=1, beta=1, v=2, deg_h=1, lead_coeff=1)
    with pytest.raises(InvariantViolation) as exc:
        bad.check()
    assert exc.value.graph6 == "A_"


def test_record_serialisation():
    r = compute_record(fig1())
    row = dict(zip(CSV_COLUMNS, r.csv_row()))
    assert InvariantRecord.from_csv_row(row) == r
    data = r.to_json()
    assert data["lead_coeff"] == "11" and set(data) == set(CSV_COLUMNS)


def test_scan_parallel_preserves_order():
    graphs = list(all_graphs_upto(6))
    serial = list(scan(graphs, ScanOptions(chunk_size=50)))
    parallel = list(scan(graphs, ScanOptions(workers=3, chunk_size=17)))
    assert serial == parallel
    assert [r.graph6 for r in serial] == [write_graph6(g) for g in graphs]


def test_find_v_gt_deg():
    assert find_v_gt_deg(enumerate_graphs(7, connected_only=True)) == []
    found = find_v_gt_deg([star_graph(3), fig1(), cycle_graph(5), fig2()])
    assert [r.graph6 for r in found] == [write_graph6(fig1()), write_graph6(fig2())]
    assert find_v_gt_deg(star_graph(k) for k in range(1, 10)) == []


def test_thm31_scope():
    assert thm31_claims(cycle_graph(10))
    assert not thm31_claims(fig1())
    assert not thm31_claims(fig2())
    assert thm31_claims(cycle_graph(11))  # 11 edges
    assert not thm31_claims(cycle_graph(12))


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7])
def test_scatter_panels(n):
    table = scatter(n)
    assert table.pairs == APPENDIX_A_PANELS[n]
    assert sum(table.counts.values()) == KNOWN_COUNTS[n][1]


def test_scatter_csv():
    text = scatter(4).to_csv()
    rows = list(csv.reader(text.splitlines()))
    assert rows[0] == ["n", "v", "deg_h", "count"]
    assert rows[1:] == [["4", "1", "1", "2"], ["4", "1", "2", "3"], ["4", "1", "3", "1"]]


def test_scatter_rejects_wrong_source():
    with pytest.raises(ValueError):
        scatter(4, [cycle_graph(5)])


def test_verify_theorems_exhaustive():
    report = verify_theorems(all_graphs_upto(7))
    assert report.ok
    for key, check in report.checks.items():
        assert check.violations == [], key
    assert report.checks["conjecture_2vd"].status == "conjecture"


def test_verify_theorems_stars_are_equality_cases():
    stars = [star_graph(k) for k in range(1, 8)]
    report = verify_theorems(stars)
    assert len(report.equality_graphs) == len(stars)


def test_conjecture_is_reported_not_asserted():
    from edgeideal.graph import disjoint_union

    g = disjoint_union(complete_graph(2), complete_graph(2))
    report = verify_theorems([g])
    assert report.ok
    assert report.checks["conjecture_2vd"].checked == 0  # disconnected


def _write_g6(path, graphs):
    path.write_text(">>graph6<<" + "\n".join(write_graph6(g) for g in graphs) + "\n\n")


def test_scan_file_csv_and_json(tmp_path):
    src = tmp_path / "in.g6"
    _write_g6(src, all_graphs_upto(4))
    out = tmp_path / "out.csv"
    assert scan_file(src, out, ScanOptions(fields=(RATIONALS,))) == 18
    rows = list(csv.DictReader(out.open()))
    assert list(rows[0]) == list(CSV_COLUMNS)
    assert len(rows) == 18
    jout = tmp_path / "out.jsonl"
    scan_file(src, jout, ScanOptions(), fmt="json")
    lines = [json.loads(x) for x in jout.read_text().splitlines()]
    assert [x["graph6"] for x in lines] == [r["graph6"] for r in rows]


def test_checkpoint_resume_is_byte_identical(tmp_path):
    src = tmp_path / "in.g6"
    _write_g6(src, all_graphs_upto(6))
    full = tmp_path / "full.csv"
    scan_file(src, full, ScanOptions(chunk_size=40))
    part = tmp_path / "part.csv"
    opts = ScanOptions(chunk_size=40, workers=2)
    scan_file(src, part, opts, checkpoint=True, limit=120)  # simulated interruption
    assert part.read_bytes() != full.read_bytes()
    ckpt = tmp_path / "in.g6.ckpt"
    assert "lines=120" in ckpt.read_text()
    scan_file(src, part, opts, checkpoint=True)
    assert part.read_bytes() == full.read_bytes()


def test_checkpoint_digest_mismatch(tmp_path):
    src = tmp_path / "in.g6"
    _write_g6(src, all_graphs_upto(5))
    out = tmp_path / "out.csv"
    scan_file(src, out, ScanOptions(chunk_size=10), checkpoint=True, limit=10)
    with out.open("a") as fh:
        fh.write("tampered\n")
    with pytest.raises(CheckpointError):
        scan_file(src, out, ScanOptions(chunk_size=10), checkpoint=True)
