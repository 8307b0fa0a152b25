"""Command-line interface.

Exit codes: 0 ok, 1 usage, 2 parse error, 3 partial result (budget or size
cap), 4 invalid certificate, 5 claim violation or engine disagreement.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence, TextIO

from . import __version__

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_PARTIAL, EXIT_CERT, EXIT_VIOLATION = 0, 1, 2, 3, 4, 5


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with 2, which is reserved for parse errors
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="ascii", errors="replace") as fh:
        return fh.read()


# ---------------------------------------------------------------------------
# invariants


def _report_job(args):
    from .formats import parse_graph6
    from .report import build_report, cache_from_env, ResultCache

    g6, fields, only, cache_dir, paranoid = args
    cache = ResultCache(cache_dir) if cache_dir else cache_from_env()
    return build_report(parse_graph6(g6), fields, only, cache, paranoid)


def _print_text(rep: dict, out: TextIO) -> None:
    out.write(f"graph6: {rep['input']['graph6']}\n")
    out.write(f"canonical_hash: {rep['input']['canonical_hash']}\n")
    out.write(f"n: {rep['n']}\nm: {rep['m']}\ngirth: {rep['girth']}\n")
    for k, v in rep["invariants"].items():
        if isinstance(v, dict):
            for tag, x in v.items():
                out.write(f"{k}[{tag}]: {_fmt(x)}\n")
        else:
            out.write(f"{k}: {_fmt(v)}\n")
    for k, why in rep["refused"].items():
        out.write(f"refused {k}: {why}\n")
    out.write("\n")


def _fmt(x) -> str:
    if x is None:
        return "refused"
    if isinstance(x, bool):
        return "true" if x else "false"
    return str(x)


def cmd_invariants(a) -> int:
    from .formats import ParseError, emit_graph6, parse_edgelist, read_graphs
    from .report import INVARIANTS

    fields = ["gf2", "q"] if a.field == "both" else [a.field]
    only = None
    if a.only:
        only = [s.strip() for s in a.only.split(",") if s.strip()]
        bad = [s for s in only if s not in INVARIANTS]
        if bad:
            raise UsageError(f"unknown invariant(s) {', '.join(bad)}; known: {', '.join(INVARIANTS)}")
    text = _read_text(a.input)
    status = EXIT_OK
    jobs: list[tuple[int, str | ParseError]] = []
    if a.format == "edgelist":
        try:
            jobs.append((1, emit_graph6(parse_edgelist(text))))
        except ParseError as exc:
            jobs.append((exc.line or 1, exc))
    else:
        for line, item in read_graphs(text):
            jobs.append((line, item if isinstance(item, ParseError) else emit_graph6(item)))
    good = [(i, g6) for i, (_l, g6) in enumerate(jobs) if isinstance(g6, str)]
    payload = [(g6, fields, only, a.cache, a.paranoid) for _i, g6 in good]
    if a.threads > 1 and len(payload) > 1:
        with ProcessPoolExecutor(a.threads) as pool:
            reports = list(pool.map(_report_job, payload))
    else:
        reports = [_report_job(p) for p in payload]
    by_index = dict(zip((i for i, _ in good), reports))
    for i, (line, item) in enumerate(jobs):
        if isinstance(item, ParseError):
            print(f"line {line}: parse error: {item}", file=sys.stderr)
            status = max(status, EXIT_PARSE)
            continue
        rep = by_index[i]
        if rep["refused"] and status == EXIT_OK:
            status = EXIT_PARTIAL
        if a.json:
            sys.stdout.write(json.dumps(rep, sort_keys=True) + "\n")
        else:
            _print_text(rep, sys.stdout)
    return status


# ---------------------------------------------------------------------------
# check / search


def _budget(a):
    from .verification import Budget

    return Budget(a.max_graphs, a.max_seconds)


def _emit_verdict(rep, as_json: bool) -> None:
    if as_json:
        sys.stdout.write(rep.dumps() + "\n")
        return
    print(f"claim: {rep.claim}")
    print(f"universe: {json.dumps(rep.universe, sort_keys=True)}")
    print(f"scanned: {rep.scanned}  tested: {rep.tested}  skipped: {rep.skipped}")
    if rep.frontier is not None:
        print(f"frontier: every candidate up to n={rep.frontier} examined")
    print(f"verdict: {rep.verdict}")
    if rep.stop_reason:
        print(f"stopped: {rep.stop_reason}")
    for v in rep.details:
        print(f"violation {v.graph6}: {'; '.join(v.messages)}")
    for v in rep.suspected_bugs:
        print(f"suspected implementation bug {v.graph6}: {'; '.join(v.messages)}")
    print(f"wall time: {rep.wall_time}s")


def cmd_check(a) -> int:
    from .verification import ClaimId, check_claim

    try:
        cid = ClaimId.parse(a.claim)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rep = check_claim(cid, a.max_n, slow=a.slow, budget=_budget(a), workers=a.threads, seed=a.seed)
    _emit_verdict(rep, a.json)
    if not rep.consistent:
        return EXIT_VIOLATION
    return EXIT_OK if rep.complete else EXIT_PARTIAL


def cmd_search(a) -> int:
    from .formats import read_graphs
    from .verification import Problem, search_counterexample

    try:
        prob = Problem.parse(a.problem)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    status = EXIT_OK
    stream = None
    if a.input:
        graphs = []
        for line, item in read_graphs(_read_text(a.input)):
            if isinstance(item, Exception):
                print(f"line {line}: parse error: {item}", file=sys.stderr)
                status = EXIT_PARSE
            else:
                graphs.append(item)
        stream = iter(graphs)
    witness, rep = search_counterexample(prob, a.max_n, budget=_budget(a), graphs=stream)
    _emit_verdict(rep, a.json)
    if rep.suspected_bugs:
        return EXIT_VIOLATION
    if not rep.complete:
        return max(status, EXIT_PARTIAL)
    return status


# ---------------------------------------------------------------------------
# make


def _ints(params: Sequence[str], count: int, family: str) -> list[int]:
    if len(params) != count:
        raise UsageError(f"{family} takes {count} integer parameter(s)")
    try:
        return [int(p) for p in params]
    except ValueError:
        raise UsageError(f"{family} parameters must be integers") from None


def _parse_partition(text: str) -> list[list[int]]:
    try:
        return [[int(v) for v in cls.split(",")] for cls in text.split(";") if cls.strip()]
    except ValueError:
        raise UsageError("partition must look like '0,1,2;2,3'") from None


def cmd_make(a) -> int:
    from .constructions import (
        NAMED_FAMILIES,
        EdgeCliquePartition,
        clique_whisker,
        common_enemy,
        gn_family,
        named_graph,
        orphan,
        upper_bound_graph,
    )
    from .formats import emit_graph6, parse_digraph, parse_graph_line, parse_poset
    from .graph import GraphError

    fam, params = a.family, a.params
    try:
        if fam in NAMED_FAMILIES:
            need = 2 if fam == "doublestar" else 1
            G = named_graph(fam, *_ints(params, need, fam))
        elif fam == "gn":
            G = gn_family(*_ints(params, 1, fam))
        elif fam == "orphan":
            if len(params) != 1:
                raise UsageError("orphan takes one name")
            G = orphan(params[0])
        elif fam == "whisker":
            if len(params) == 2 and params[0] in NAMED_FAMILIES:
                host = named_graph(params[0], int(params[1]))
            elif len(params) == 1:
                host = parse_graph_line(params[0])
            else:
                raise UsageError("whisker takes a graph6 string or '<family> <n>'")
            classes = _parse_partition(a.partition) if a.partition else [list(e) for e in host.edges]
            G = clique_whisker(host, EdgeCliquePartition(tuple(tuple(c) for c in classes)))
        elif fam == "common-enemy":
            if len(params) != 1:
                raise UsageError("common-enemy takes a digraph file (or -)")
            G = common_enemy(parse_digraph(_read_text(params[0])))
        elif fam == "upper-bound":
            if len(params) != 1:
                raise UsageError("upper-bound takes a poset file (or -)")
            G = upper_bound_graph(parse_poset(_read_text(params[0])))
        else:
            raise UsageError(f"unknown family {fam!r}")
    except (GraphError, ValueError) as exc:
        from .formats import ParseError

        if isinstance(exc, ParseError):
            print(f"parse error: {exc}", file=sys.stderr)
            return EXIT_PARSE
        raise UsageError(str(exc)) from None
    print(emit_graph6(G))
    return EXIT_OK


# ---------------------------------------------------------------------------
# cert verify


def cmd_cert_verify(a) -> int:
    from .report import verify_report

    text = _read_text(a.report)
    try:
        stripped = text.strip()
        if stripped.startswith("["):
            reports = json.loads(stripped)
        else:
            reports = [json.loads(line) for line in stripped.splitlines() if line.strip()]
    except json.JSONDecodeError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    status = EXIT_OK
    for i, rep in enumerate(reports, 1):
        problems = verify_report(rep) if isinstance(rep, dict) else ["report is not a JSON object"]
        label = rep.get("input", {}).get("graph6", "?") if isinstance(rep, dict) else "?"
        if problems:
            status = EXIT_CERT
            for p in problems:
                print(f"report {i} ({label}): {p}")
        else:
            print(f"report {i} ({label}): ok")
    return status


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    from .constructions import NAMED_FAMILIES

    p = _Parser(prog="codis", description="Exact invariants of graphs and their independence complexes.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    threads_default = int(os.environ.get("CODIS_THREADS", "1"))

    inv = sub.add_parser("invariants", help="report invariants of each input graph")
    inv.add_argument("input", help="file of graph6/sparse6 lines, or - for standard input")
    inv.add_argument("--field", choices=("gf2", "q", "both"), default="gf2")
    inv.add_argument("--only", help="comma-separated invariant names")
    inv.add_argument("--json", action="store_true", help="one JSON report per line")
    inv.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    inv.add_argument("--cache", metavar="DIR", help="result cache directory (default: $CODIS_CACHE_DIR)")
    inv.add_argument("--paranoid", action="store_true", help="replay certificates of cache hits")
    inv.add_argument("--threads", type=int, default=threads_default)
    inv.set_defaults(func=cmd_invariants)

    def budget_args(sp):
        sp.add_argument("--max-graphs", type=int)
        sp.add_argument("--max-seconds", type=float)
        sp.add_argument("--json", action="store_true")

    chk = sub.add_parser("check", help="check one claim over a graph universe")
    chk.add_argument("claim")
    chk.add_argument("--max-n", type=int)
    chk.add_argument("--slow", action="store_true", help="use the larger default universe")
    chk.add_argument("--seed", type=int, help="seed for random universes")
    chk.add_argument("--threads", type=int, default=threads_default)
    budget_args(chk)
    chk.set_defaults(func=cmd_check)

    se = sub.add_parser("search", help="exhaustive counterexample search for an open problem")
    se.add_argument("problem")
    se.add_argument("--max-n", type=int, required=True)
    se.add_argument("--input", help="graph6 stream replacing built-in generation")
    budget_args(se)
    se.set_defaults(func=cmd_search)

    mk = sub.add_parser("make", help="print a graph of a named family as graph6")
    families = sorted(NAMED_FAMILIES) + ["gn", "whisker", "orphan", "common-enemy", "upper-bound"]
    mk.add_argument("family", choices=families, metavar="family", help=", ".join(families))
    mk.add_argument("params", nargs="*")
    mk.add_argument("--partition", help="edge-clique partition for whisker, e.g. '0,1,2;2,3'")
    mk.set_defaults(func=cmd_make)

    cert = sub.add_parser("cert", help="certificate tools")
    csub = cert.add_subparsers(dest="cert_command", required=True, parser_class=_Parser)
    ver = csub.add_parser("verify", help="replay every certificate in a report file")
    ver.add_argument("report", help="JSON report(s): one object, an array, or JSON lines; - for stdin")
    ver.set_defaults(func=cmd_cert_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:  # --help, --version and usage errors
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        if getattr(a, "threads", 1) < 1:
            raise UsageError("--threads must be at least 1")
        return a.func(a)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"codis: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"codis: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
