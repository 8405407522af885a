"""Command-line interface.

Every verb prints one result line per input graph on stdout and keeps
diagnostics on stderr.  Exit codes: 0 success, 1 a legitimate negative
result (no cycle, failed verification, disagreement), 2 usage or parse
errors.
"""

from __future__ import annotations

import argparse
import csv
import statistics
import sys
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator

from . import formats
from .formats import GraphFormatError
from .generators import (
    ENUMERATE_MAX_N,
    GenSpec,
    enumerate_labeled_graphs,
    gen_random_min_degree,
    labeled_graph_count,
)
from .graph import Graph
from .hamiltonian import (
    BigIndependentComponent,
    CutVertex,
    Disconnected,
    RotationExhausted,
    SolveOutcome,
    cycle_violation,
    find_hamiltonian,
    verify_cycle,
)
from .oracle import ORACLE_MAX_N, is_family_a, is_family_b, oracle_hamiltonian

EXIT_OK, EXIT_NONE, EXIT_USAGE = 0, 1, 2

_STATUS = {
    CutVertex: "NONE_CUT_VERTEX",
    BigIndependentComponent: "NONE_INDEPENDENT_SET",
    RotationExhausted: "NONE_ROTATION_EXHAUSTED",
    Disconnected: "NONE_DISCONNECTED",
}


@dataclass
class CliResult:
    status: str
    payload: tuple[int, ...] = ()
    stats: dict = field(default_factory=dict)

    @classmethod
    def from_outcome(cls, outcome: SolveOutcome, **stats) -> CliResult:
        if outcome.cycle is not None:
            return cls("HAMILTONIAN", outcome.cycle, stats)
        cert = outcome.certificate
        if isinstance(cert, CutVertex):
            payload = (cert.vertex,)
        elif isinstance(cert, BigIndependentComponent):
            payload = tuple(sorted(cert.vertices))
        elif isinstance(cert, Disconnected):
            payload = tuple(sorted(cert.component))
        else:
            payload = ()
        return cls(_STATUS[type(cert)], payload, stats)

    @property
    def exit_code(self) -> int:
        if self.status == "HAMILTONIAN":
            return EXIT_OK
        return EXIT_USAGE if self.status == "ERROR" else EXIT_NONE

    def line(self) -> str:
        words = self.status.split("_", 1) if self.status.startswith("NONE_") else [self.status]
        words += [str(v) for v in self.payload]
        return " ".join(words)


# input ----------------------------------------------------------------------

def _read(source: str | None) -> bytes:
    if source is None or source == "-":
        return sys.stdin.buffer.read()
    return Path(source).read_bytes()


def _resolve_format(flag: str | None, source: str | None, data: bytes) -> str:
    if flag:
        return formats.canonical_format(flag)
    if source and source != "-":
        guessed = formats.format_for_path(source)
        if guessed:
            return guessed
    return formats.sniff_format(data)


def _graphs(data: bytes, fmt: str) -> Iterator[Graph | GraphFormatError]:
    """One entry per input graph; parse failures are yielded, not raised."""
    if fmt == "graph6":
        for number, line in formats.iter_graph6_lines(data):
            try:
                yield formats.decode_graph6(line)
            except GraphFormatError as exc:
                exc.line = number
                yield GraphFormatError(f"{exc}, line {number}", line=number)
        return
    try:
        yield formats.decode(data, fmt)
    except GraphFormatError as exc:
        yield exc


def _error(message: str) -> None:
    print(f"error: {message}", file=sys.stderr)


def _load_single(source: str | None, flag: str | None) -> Graph:
    data = _read(source)
    fmt = _resolve_format(flag, source, data)
    items = list(_graphs(data, fmt))
    if len(items) != 1:
        raise GraphFormatError(f"expected exactly one graph, found {len(items)}")
    if isinstance(items[0], Exception):
        raise items[0]
    return items[0]


# verbs ----------------------------------------------------------------------

def _run_each(args, solve) -> int:
    try:
        data = _read(args.input)
        fmt = _resolve_format(args.format, args.input, data)
    except (OSError, ValueError) as exc:
        _error(str(exc))
        return EXIT_USAGE
    code = None
    for item in _graphs(data, fmt):
        if isinstance(item, Exception):
            result = CliResult("ERROR")
            _error(str(item))
        elif item.n < 3:
            result = CliResult("ERROR")
            _error(f"need at least 3 vertices, got {item.n}")
        else:
            try:
                result = solve(item)
            except ValueError as exc:
                result = CliResult("ERROR")
                _error(str(exc))
        print(result.line())
        if getattr(args, "stats", False) and result.stats:
            print(" ".join(f"{k}={v}" for k, v in result.stats.items()), file=sys.stderr)
        code = result.exit_code if code is None else max(code, result.exit_code)
    if code is None:
        _error("no graph in input")
        return EXIT_USAGE
    return code


def cmd_solve(args) -> int:
    def solve(G: Graph) -> CliResult:
        start = time.perf_counter()
        outcome = find_hamiltonian(G)
        ms = (time.perf_counter() - start) * 1000
        return CliResult.from_outcome(outcome, n=G.n, edges=G.edge_count, ms=f"{ms:.3f}")

    return _run_each(args, solve)


def cmd_oracle(args) -> int:
    def solve(G: Graph) -> CliResult:
        cycle = oracle_hamiltonian(G)
        return CliResult("HAMILTONIAN", cycle) if cycle is not None else CliResult("NONE")

    return _run_each(args, solve)


def cmd_verify(args) -> int:
    try:
        G = _load_single(args.graph, args.format)
    except (OSError, ValueError) as exc:
        _error(str(exc))
        return EXIT_USAGE
    try:
        cycle = [int(tok) for tok in sys.stdin.read().split()]
    except ValueError as exc:
        _error(f"cycle must be whitespace-separated integers: {exc}")
        return EXIT_USAGE
    problem = cycle_violation(G, cycle)
    if problem is None:
        print("VALID")
        return EXIT_OK
    print(f"INVALID {problem}")
    return EXIT_NONE


def cmd_generate(args) -> int:
    try:
        spec = GenSpec(args.family, r=args.r, n=args.n, inner_p=args.inner_p, seed=args.seed)
        G = spec.build()
        data = formats.encode(G, args.format)
    except ValueError as exc:
        _error(str(exc))
        return EXIT_USAGE
    if args.output_dir:
        ext = {"graph6": ".g6", "dimacs": ".col", "edgelist": ".el"}[formats.canonical_format(args.format)]
        target = Path(args.output_dir) / (spec.stem + ext)
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_bytes(data)
        print(target)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    return EXIT_OK


# exhaustive check -----------------------------------------------------------

CHECK_KEYS = (
    "graphs",
    "agree_hamiltonian",
    "agree_none",
    "disagree",
    "none_cut_vertex",
    "none_independent_set",
    "none_other",
    "bad_cycle",
    "bad_certificate",
    "family_mismatch",
)


def check_graph(G: Graph) -> tuple[Counter, bool]:
    """Compare solver and oracle on one graph; the flag marks any failure."""
    tally = Counter(graphs=1)
    outcome = find_hamiltonian(G)
    truth = oracle_hamiltonian(G) is not None
    failed = False
    if outcome.is_hamiltonian != truth:
        tally["disagree"] += 1
        failed = True
    elif truth:
        tally["agree_hamiltonian"] += 1
    else:
        tally["agree_none"] += 1
    if outcome.is_hamiltonian:
        if not verify_cycle(G, outcome.cycle):
            tally["bad_cycle"] += 1
            failed = True
    else:
        cert = outcome.certificate
        key = {CutVertex: "none_cut_vertex", BigIndependentComponent: "none_independent_set"}
        tally[key.get(type(cert), "none_other")] += 1
        if not cert.holds(G):
            tally["bad_certificate"] += 1
            failed = True
    if (not outcome.is_hamiltonian) != (is_family_a(G) or is_family_b(G)):
        tally["family_mismatch"] += 1
        failed = True
    return tally, failed


def _check_range(n: int, start: int, stop: int) -> tuple[Counter, list[bytes]]:
    tally = Counter()
    offending = []
    for G in enumerate_labeled_graphs(n, n // 2, start=start, stop=stop):
        one, failed = check_graph(G)
        tally += one
        if failed:
            offending.append(formats.encode_graph6(G))
    return tally, offending


def run_check(n_min: int, n_max: int, jobs: int = 1, pieces: int = 16) -> Iterator[tuple[int, Counter, list[bytes]]]:
    """Exhaustive comparison for each n, partitioning the stream into ``pieces`` ranges."""
    for n in range(n_min, n_max + 1):
        total = labeled_graph_count(n)
        step = max(1, -(-total // pieces))
        ranges = [(n, lo, min(lo + step, total)) for lo in range(0, total, step)]
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                parts = list(pool.map(_check_range, *zip(*ranges)))
        else:
            parts = [_check_range(*r) for r in ranges]
        tally = Counter()
        offending = []
        for part_tally, part_bad in parts:
            tally += part_tally
            offending.extend(part_bad)
        yield n, tally, offending


def _report(label: str, tally: Counter) -> str:
    return " ".join([label] + [f"{k}={tally[k]}" for k in CHECK_KEYS])


def cmd_check(args) -> int:
    if not 3 <= args.n_min <= args.n_max <= ENUMERATE_MAX_N:
        _error(f"need 3 <= --n-min <= --n-max <= {ENUMERATE_MAX_N}")
        return EXIT_USAGE
    grand = Counter()
    failures = 0
    for n, tally, offending in run_check(args.n_min, args.n_max, args.jobs):
        for g6 in offending:
            print(f"DISAGREE {g6.decode('ascii')}")
        print(_report(f"n={n}", tally), flush=True)
        grand += tally
        failures += len(offending)
    print(_report("total", grand))
    return EXIT_OK if failures == 0 else EXIT_NONE


# benchmark ------------------------------------------------------------------

BENCH_HEADER = ("n", "seed", "edges", "outcome", "wall_ms")


def bench_rows(sizes: list[int], seeds_per_size: int) -> Iterator[tuple[int, int, int, str, float | None]]:
    """Solve seeded random instances; ``wall_ms`` is None when the result does not validate.

    Tiny sizes can draw an exceptional graph (n = 3 gives a path half the
    time); a NONE row whose certificate holds counts as a correct answer.
    """
    for n in sizes:
        for seed in range(seeds_per_size):
            G = gen_random_min_degree(n, seed)
            start = time.perf_counter()
            outcome = find_hamiltonian(G)
            ms = (time.perf_counter() - start) * 1000
            status = CliResult.from_outcome(outcome).status
            ok = outcome.validate(G)
            yield n, seed, G.edge_count, status, ms if ok else None


def _sizes(text: str) -> list[int]:
    try:
        sizes = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"sizes must be comma-separated integers, got {text!r}") from None
    if not sizes or min(sizes) < 3:
        raise argparse.ArgumentTypeError("every size must be at least 3")
    return sizes


def cmd_bench(args) -> int:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(BENCH_HEADER)
    failed = 0
    medians = {}
    for n, seed, edges, status, ms in bench_rows(args.sizes, args.seeds_per_size):
        if ms is None:
            failed += 1
            _error(f"n={n} seed={seed} produced an invalid {status} result")
            writer.writerow((n, seed, edges, status, ""))
        else:
            medians.setdefault(n, []).append(ms)
            writer.writerow((n, seed, edges, status, f"{ms:.3f}"))
        sys.stdout.flush()
    for n, times in medians.items():
        print(f"n={n} median_ms={statistics.median(times):.3f}", file=sys.stderr)
    return EXIT_OK if failed == 0 else EXIT_NONE


# parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diracham",
        description="Hamiltonian cycles for graphs with minimum degree at least floor(n/2).",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    fmt_help = "input format: g6, dimacs or edgelist (default: from extension, else sniffed)"

    p = sub.add_parser("solve", help="find a Hamiltonian cycle or a certificate that none exists")
    p.add_argument("input", nargs="?", help="graph file, '-' or omitted for stdin")
    p.add_argument("--format", help=fmt_help)
    p.add_argument("--stats", action="store_true", help="print n, edge count and time to stderr")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("oracle", help=f"brute-force Hamiltonicity (n <= {ORACLE_MAX_N})")
    p.add_argument("input", nargs="?")
    p.add_argument("--format", help=fmt_help)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="check a cycle read from stdin against a graph")
    p.add_argument("graph")
    p.add_argument("--format", help=fmt_help)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", help="emit a generated graph")
    p.add_argument("--family", required=True, choices=("a", "b", "random"))
    p.add_argument("--r", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--inner-p", type=float)
    p.add_argument("--format", default="g6", choices=("g6", "graph6", "dimacs", "edgelist"))
    p.add_argument("-o", "--output-dir", help="write <stem>.<ext> into this directory instead of stdout")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("check", help="exhaustive solver/oracle comparison on small graphs")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--n-min", type=int, default=3)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("bench", help="time the solver on seeded random instances (CSV)")
    p.add_argument("--sizes", type=_sizes, required=True)
    p.add_argument("--seeds-per-size", type=int, default=5)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
