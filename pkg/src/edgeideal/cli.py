"""Command-line interface: ``eil compute|construct|verify|scan|scatter``.

Exit codes: 0 success, 1 violations found, 2 usage or parse error,
3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from pathlib import Path

from . import __version__
from .constructions import (
    CATALOG,
    check_construction1,
    check_construction2,
    build_hvd,
    family_parts,
    paper_graph,
    paper_predictions,
    predict_deg,
    predict_v,
)
from .graph import Graph, Graph6Error, GraphError, independence_number, parse_graph6, write_graph6
from .invariants import hilbert_series, v_number, v_witness
from .regularity import DEFAULT_MAX_VERTICES, FieldSpec, ResourceLimitError, regularity
from .search import (
    APPENDIX_A_PANELS,
    MAX_BUILTIN_N,
    CheckpointError,
    InvariantViolation,
    ScanOptions,
    all_graphs_upto,
    default_workers,
    format_records,
    csv_header,
    read_codes,
    scan,
    scan_file,
    scatter,
    verify_theorems,
)

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3

SUITES = ("thm31", "thm41", "thm42", "lemma32", "lemma34", "thm36", "appendixA", "conjecture2vd")


class UsageError(Exception):
    pass


# -- helpers -------------------------------------------------------------


def _digest(*parts: str | bytes) -> str:
    h = hashlib.sha256()
    for part in parts:
        h.update(part.encode() if isinstance(part, str) else part)
        h.update(b"\0")
    return h.hexdigest()


def _file_digest(paths) -> list[bytes]:
    return [Path(p).read_bytes() for p in paths or ()]


def _envelope(command: str, digest: str, body: dict) -> dict:
    return {"tool": "edgeideal", "version": __version__, "command": command, "input_digest": digest, **body}


def _emit_json(data: dict) -> None:
    print(json.dumps(data, indent=2, sort_keys=True))


def _fields(spec: str | None) -> tuple[FieldSpec, ...]:
    if not spec:
        return ()
    try:
        return tuple(FieldSpec.parse(x) for x in spec.split(",") if x.strip())
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _workers(value: int | None) -> int:
    try:
        workers = value if value is not None else default_workers()
    except ValueError as exc:
        raise UsageError(f"bad EIL_WORKERS value: {exc}") from exc
    if workers < 1:
        raise UsageError("worker count must be >= 1")
    return workers


def _params(args) -> dict[str, int]:
    return {k: getattr(args, k) for k in ("v", "d", "n") if getattr(args, k, None) is not None}


def _named_graph(args) -> Graph:
    try:
        return paper_graph(args.name, **_params(args))
    except KeyError as exc:
        raise UsageError(f"{exc.args[0]}; known names: {', '.join(CATALOG)}") from exc


def _file_graphs(paths) -> list[str]:
    codes = []
    for p in paths or ():
        if not Path(p).exists():
            raise UsageError(f"input file {p} not found")
        codes.extend(read_codes(p))
    return codes


# -- compute -------------------------------------------------------------


def _report(g: Graph, fields, reg_cap: int) -> dict:
    hs = hilbert_series(g)
    alpha = independence_number(g)
    witness = v_witness(g) if g.m else 0
    out = {
        "graph6": write_graph6(g),
        "n": g.n,
        "m": g.m,
        "alpha": alpha,
        "beta": g.n - alpha,
        "v": v_number(g),
        "v_witness": [i for i in range(g.n) if witness >> i & 1],
        "hilbert_series": hs.to_json(),
        "hilbert_series_text": hs.to_text(),
        "deg_h": hs.numerator.degree,
        "lead_coeff": str(hs.numerator.leading_coefficient),
    }
    for k in fields:
        out[f"reg_{k.label}"] = regularity(g, k, max_vertices=reg_cap) if g.m else 0
    return out


def cmd_compute(args) -> int:
    fields = _fields(args.reg)
    sources = [x is not None and x != [] for x in (args.g6, args.name, args.file)]
    if sum(sources) != 1:
        raise UsageError("compute needs exactly one of --g6, --name, --file")
    if args.g6 is not None:
        graphs = [parse_graph6(args.g6)]
        digest = _digest(args.g6)
    elif args.name is not None:
        graphs = [_named_graph(args)]
        digest = _digest(args.name, json.dumps(_params(args), sort_keys=True))
    else:
        graphs = [parse_graph6(c) for c in _file_graphs(args.file)]
        digest = _digest(*_file_digest(args.file))
    reports = [_report(g, fields, args.reg_cap) for g in graphs]
    if args.format == "json":
        _emit_json(_envelope("compute", digest, {"graphs": reports}))
    else:
        for i, r in enumerate(reports):
            if i:
                print()
            for key in ("graph6", "n", "m", "alpha", "beta", "v", "v_witness"):
                print(f"{key} = {r[key]}")
            print(f"hilbert_series = {r['hilbert_series_text']}")
            print(f"deg_h = {r['deg_h']}")
            print(f"lead_coeff = {r['lead_coeff']}")
            for k in fields:
                print(f"reg_{k.label} = {r[f'reg_{k.label}']}")
    return EXIT_OK


# -- construct -----------------------------------------------------------


def cmd_construct(args) -> int:
    if args.family:
        name = f"hn_{args.family}"
        if args.n is None:
            raise UsageError("--family needs --n")
        params = {"n": args.n}
    elif args.name:
        name, params = args.name, _params(args)
    else:
        raise UsageError("construct needs --name or --family")
    try:
        g = paper_graph(name, **params)
        predicted = paper_predictions(name, **params)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from exc
    code = write_graph6(g)
    sidecar = _envelope("construct", _digest(name, json.dumps(params, sort_keys=True)), {
        "name": name, "params": params, "graph6": code, "n": g.n, "m": g.m,
        "predicted": predicted.to_json(),
    })
    if args.out:
        Path(args.out).write_text(code + "\n", encoding="utf-8")
        Path(args.out + ".json").write_text(json.dumps(sidecar, indent=2, sort_keys=True) + "\n", encoding="utf-8")
        print(code)
    else:
        print(code)
        print(json.dumps(sidecar, sort_keys=True))
    return EXIT_OK


# -- verify --------------------------------------------------------------


def _suite_source(args, connected_only: bool) -> list:
    nmax = args.nmax
    if nmax is None:
        raise UsageError(f"verify {args.suite} needs --nmax")
    if nmax > MAX_BUILTIN_N and not args.file:
        raise UsageError(f"--nmax {nmax} exceeds the built-in enumerator; supply --file with graph6 input")
    source: list = list(all_graphs_upto(min(nmax, MAX_BUILTIN_N), connected_only))
    for code in _file_graphs(args.file):
        g = parse_graph6(code)
        if MAX_BUILTIN_N < g.n <= nmax:
            source.append(g)
    return source


def _construction_check(args, lemma: str) -> dict:
    if not args.family or args.n is None:
        raise UsageError(f"verify {lemma} needs --family and --n")
    try:
        parts = family_parts(args.family, args.n)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from exc
    g = paper_graph(f"hn_{args.family}", n=args.n)
    if lemma == "lemma32":
        if not check_construction1(parts):
            return {"precondition": False, "violations": 1}
        p = predict_deg(parts)
        hs = hilbert_series(g)
        computed = {"dim": hs.pole_order, "deg_h": hs.numerator.degree}
        predicted = {"dim": p.dim, "deg_h": p.deg_h}
    else:
        if not check_construction2(parts):
            return {"precondition": False, "violations": 1}
        try:
            p = predict_v(parts)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        computed = {"v": v_number(g)}
        predicted = {"v": p.v}
    return {
        "precondition": True, "family": args.family, "n": args.n,
        "predicted": predicted, "computed": computed,
        "violations": int(predicted != computed),
    }


def _thm36(args) -> dict:
    try:
        lo, hi = (int(x) for x in (args.range or "1:6").split(":"))
    except ValueError as exc:
        raise UsageError("--range must look like LO:HI") from exc
    if lo < 1 or hi < lo:
        raise UsageError("--range needs 1 <= LO <= HI")
    pairs, bad = [], []
    for v in range(lo, hi + 1):
        for d in range(v, hi + 1):
            g = build_hvd(v, d)
            got = (v_number(g), hilbert_series(g).numerator.degree)
            pairs.append({"v": v, "d": d, "computed": list(got)})
            if got != (v, d):
                bad.append([v, d])
    return {"checked": len(pairs), "pairs": pairs, "violations": len(bad), "failed_pairs": bad}


def _appendix_a(args, opts) -> dict:
    nmax = args.nmax or MAX_BUILTIN_N
    if nmax > max(APPENDIX_A_PANELS):
        raise UsageError(f"Appendix panels stop at n={max(APPENDIX_A_PANELS)}")
    if nmax > MAX_BUILTIN_N and not args.file:
        raise UsageError(f"--nmax {nmax} exceeds the built-in enumerator; supply --file with graph6 input")
    extra: dict[int, list[str]] = {}
    for code in _file_graphs(args.file):
        extra.setdefault(parse_graph6(code).n, []).append(code)
    panels, bad = {}, 0
    for n in range(2, nmax + 1):
        if n <= MAX_BUILTIN_N:
            table = scatter(n, opts=opts)
        elif n in extra:
            table = scatter(n, extra[n], opts)
        else:
            raise UsageError(f"no graphs with n={n} in the supplied files")
        match = table.pairs == APPENDIX_A_PANELS[n]
        bad += not match
        panels[str(n)] = {
            "match": match,
            "pairs": [[v, d, c] for (v, d), c in sorted(table.counts.items())],
            "expected": sorted(map(list, APPENDIX_A_PANELS[n])),
        }
    return {"panels": panels, "violations": bad}


def cmd_verify(args) -> int:
    opts = ScanOptions(workers=_workers(args.workers))
    suite = args.suite
    inputs = [suite, json.dumps({k: getattr(args, k) for k in ("nmax", "family", "n", "range")}, sort_keys=True)]
    inputs += _file_digest(args.file) if args.file and all(Path(p).exists() for p in args.file) else []
    digest = _digest(*inputs)

    if suite in ("lemma32", "lemma34"):
        body = _construction_check(args, suite)
    elif suite == "thm36":
        body = _thm36(args)
    elif suite == "appendixA":
        body = _appendix_a(args, opts)
    else:
        connected = suite in ("thm31", "conjecture2vd")
        report = verify_theorems(_suite_source(args, connected), opts)
        keys = {
            "thm31": ["thm31"],
            "thm41": ["thm41", "thm41_equality"],
            "thm42": ["thm42", "thm42_equality"],
            "conjecture2vd": ["conjecture_2vd"],
        }[suite]
        body = {"checks": {k: report.checks[k].to_json() for k in keys}}
        body["violations"] = sum(len(report.checks[k].violations) for k in keys)
        if suite == "thm42":
            body["equality_graphs"] = report.equality_graphs

    body["suite"] = suite
    if args.format == "json":
        _emit_json(_envelope("verify", digest, body))
    else:
        _print_verify(body)
    return EXIT_OK if body["violations"] == 0 else EXIT_VIOLATION


def _print_verify(body: dict) -> None:
    suite = body["suite"]
    if "checks" in body:
        for key, c in body["checks"].items():
            print(f"{key} [{c['status']}]: {c['name']}: checked {c['checked']}, violations {c['failed']}")
            for code in c["violations"]:
                print(f"  violation: {code}")
        if "equality_graphs" in body:
            print(f"equality class ({len(body['equality_graphs'])} graphs): {' '.join(body['equality_graphs'])}")
    elif suite == "thm36":
        print(f"H(v,d) checked for {body['checked']} pairs, violations {body['violations']}")
        for v, d in body["failed_pairs"]:
            print(f"  mismatch at (v, d) = ({v}, {d})")
    elif suite == "appendixA":
        for n, p in body["panels"].items():
            pairs = " ".join(f"({v},{d})x{c}" for v, d, c in p["pairs"])
            print(f"n={n}: {'match' if p['match'] else 'MISMATCH'}: {pairs}")
    else:
        if not body["precondition"]:
            print(f"{suite}: construction precondition fails")
        else:
            print(f"{suite} family={body['family']} n={body['n']}: predicted {body['predicted']}, computed {body['computed']}")
    print(f"{suite}: {'ok' if body['violations'] == 0 else 'VIOLATIONS FOUND'}")


# -- scan / scatter ------------------------------------------------------


def cmd_scan(args) -> int:
    if not args.file or len(args.file) != 1:
        raise UsageError("scan needs exactly one --file")
    path = args.file[0]
    if not Path(path).exists():
        raise UsageError(f"input file {path} not found")
    fmt = "json" if args.format == "json" else "csv"
    opts = ScanOptions(fields=_fields(args.reg), reg_cap=args.reg_cap, workers=_workers(args.workers))
    if args.out:
        scan_file(path, args.out, opts, fmt, checkpoint=args.checkpoint)
        return EXIT_OK
    if args.checkpoint:
        raise UsageError("--checkpoint needs --out")
    if fmt == "csv":
        sys.stdout.write(csv_header())
    for rec in scan(read_codes(path), opts):
        sys.stdout.write(format_records([rec], fmt))
    return EXIT_OK


def cmd_scatter(args) -> int:
    opts = ScanOptions(workers=_workers(args.workers))
    if args.n is not None:
        ns = [args.n]
    elif args.nmax is not None:
        ns = list(range(2, args.nmax + 1))
    else:
        raise UsageError("scatter needs --n or --nmax")
    extra: dict[int, list[str]] = {}
    for code in _file_graphs(args.file):
        extra.setdefault(parse_graph6(code).n, []).append(code)
    chunks = []
    for i, n in enumerate(ns):
        if n in extra:
            table = scatter(n, extra[n], opts)
        elif n <= MAX_BUILTIN_N:
            table = scatter(n, opts=opts)
        else:
            raise UsageError(f"n={n} needs a --file of connected graphs")
        chunks.append(table.to_csv(header=i == 0))
    text = "".join(chunks)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


# -- entry point ---------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="eil", description="Exact invariants of graph edge ideals.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, graph_input=True):
        if graph_input:
            p.add_argument("--g6", help="graph in graph6 format")
            p.add_argument("--name", help=f"catalog graph ({', '.join(CATALOG)})")
        p.add_argument("--file", action="append", help="graph6 file (repeatable)")
        p.add_argument("--v", type=int, help="v parameter for hvd")
        p.add_argument("--d", type=int, help="d parameter for hvd")
        p.add_argument("--n", type=int, help="n parameter for hn_* families or scatter")
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        p.add_argument("--workers", type=int, help="worker processes (env EIL_WORKERS; default: CPU count)")
        p.add_argument("--out", help="output path")

    p = sub.add_parser("compute", help="invariants of one graph")
    common(p)
    p.add_argument("--reg", help="fields for regularity, e.g. q,f2")
    p.add_argument("--reg-cap", type=int, default=DEFAULT_MAX_VERTICES, help="vertex cap for regularity")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("construct", help="emit a catalog or family graph with predictions")
    common(p)
    p.add_argument("--family", choices=("thm35", "ex510"))
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a theorem on a graph range")
    p.add_argument("suite", choices=SUITES)
    common(p, graph_input=False)
    p.add_argument("--nmax", type=int)
    p.add_argument("--family", choices=("thm35", "ex510"))
    p.add_argument("--range", help="LO:HI for thm36")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="invariant records for every graph in a file")
    common(p, graph_input=False)
    p.add_argument("--reg", help="fields for regularity, e.g. q,f2")
    p.add_argument("--reg-cap", type=int, default=DEFAULT_MAX_VERTICES)
    p.add_argument("--checkpoint", action="store_true", help="resumable scan via <input>.ckpt")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("scatter", help="(v, deg h) counts over connected graphs")
    common(p, graph_input=False)
    p.add_argument("--nmax", type=int)
    p.set_defaults(func=cmd_scatter)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, Graph6Error, GraphError, CheckpointError) as exc:
        print(f"eil: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"eil: resource cap: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except InvariantViolation as exc:
        print(f"eil: invariant violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except BrokenPipeError:
        # Output consumer went away (e.g. ``| head``); stop quietly.
        sys.stdout = open(os.devnull, "w")
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
