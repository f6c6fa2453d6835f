"""Command-line front end.

Subcommands: stats, search, verify, normalize, paley, extend, bench.
Exit codes: 0 success, 1 verification failure, 2 search produced nothing,
64 usage error. The environment variable HADCLIQUE_SEED, when set,
overrides --rng-seed everywhere.
"""

from __future__ import annotations

import argparse
import os
import statistics
import sys
import time
from pathlib import Path
from random import Random

from . import exact, fast, ga, graph, seeds
from .errors import HadcliqueError, NoDecomposition
from .files import format_clique_text, read_clique, write_clique, write_report
from .graph import Clique
from .oracle import verify_clique, verify_ph
from .report import SearchReport
from .seeds import format_sign_matrix, ingest_sign_matrix, matrix_to_clique, normalize

EX_OK = 0
EX_VERIFY = 1
EX_EMPTY = 2
EX_USAGE = 64

STATS_T_MAX = 8

# published census totals, used by the bench census suite as a cross-check
KNOWN_CENSUS = {
    1: (2, 0),
    2: (18, 80),
    3: (164, 5184),
    4: (1810, 587088),
    5: (21252, 73440000),
    6: (263844, 10521080000),
    7: (3395016, 1629606720000),
}

# per-run wall times reported by the original implementation (2003-era
# hardware); printed by cmd_bench for context, never asserted
REFERENCE_SECONDS = {
    "exact": {2: 0.0232, 3: 0.039, 4: 0.368, 5: 0.369, 6: 4.128, 7: 12.19,
              8: 99.0, 9: 826.0, 10: 17406.0},
    "ga": {2: 0.171, 3: 0.359, 4: 1.872, 5: 3.931, 6: 19.36, 7: 250.0,
           8: 1477.0, 9: 14436.0},
    "fast": {2: 1.4, 3: 0.565, 4: 19.603, 5: 27.369, 6: 51.38, 7: 83.0,
             8: 131.0, 9: 182.0},
}


class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise _Usage(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hadclique", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("stats", help="vertex/degree/edge census of G_t")
    sp.add_argument("--t", type=int, required=True)

    sp = sub.add_parser("search", help="run a clique search and write a report")
    sp.add_argument("algorithm", choices=("exact", "ga", "fast"))
    sp.add_argument("--t", type=int)
    sp.add_argument("--essays", type=int, default=10)
    sp.add_argument("--rng-seed", type=int, default=0)
    sp.add_argument("--time-limit", type=float, default=None,
                    help="seconds; checked between essays")
    sp.add_argument("--population", type=int, default=5, help="ga population size")
    sp.add_argument("--generations", type=int, default=20, help="ga generations")
    sp.add_argument("--pm", type=float, default=0.1, help="ga mutation probability")
    sp.add_argument("--pb", type=float, default=0.8, help="ga tournament bias")
    sp.add_argument("--seed-file", type=Path, default=None,
                    help="clique file used as the fast search's seed")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--out", type=Path, default=None, help="report path")

    sp = sub.add_parser("verify", help="verify a clique or sign-matrix file")
    sp.add_argument("path", type=Path)

    sp = sub.add_parser("normalize", help="normalize a sign-matrix file")
    sp.add_argument("path", type=Path)
    sp.add_argument("--out", type=Path, default=None)

    sp = sub.add_parser("paley", help="emit a Paley seed clique for G_t")
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--out", type=Path, default=None)

    sp = sub.add_parser("extend", help="extend a clique file")
    sp.add_argument("path", type=Path)
    sp.add_argument("--algorithm", choices=("exact", "fast"), default="exact")
    sp.add_argument("--rng-seed", type=int, default=0)
    sp.add_argument("--out", type=Path, default=None)

    sp = sub.add_parser("bench", help="timing suites with reference comparisons")
    sp.add_argument("suite", choices=("census", "exact", "ga", "fast"))
    sp.add_argument("--reps", type=int, default=3)
    sp.add_argument("--t", type=int, default=None, help="bench a single t")

    return p


def _effective_seed(args: argparse.Namespace) -> int:
    env = os.environ.get("HADCLIQUE_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise _Usage(f"HADCLIQUE_SEED must be an integer, got {env!r}") from None
    return args.rng_seed


def cmd_stats(args: argparse.Namespace) -> int:
    t = args.t
    if not 1 <= t <= STATS_T_MAX:
        raise _Usage(f"stats needs 1 <= t <= {STATS_T_MAX}, got {t}")
    print(f"G_{t}: width 4t = {4 * t}")
    print(f"{'k':>3} {'vertices':>12} {'degree':>14}")
    for k in range(t + 1):
        print(f"{k:>3} {graph.class_size(t, k):>12} {graph.degree(t, k):>14}")
    print(f"total vertices: {graph.vertex_count(t)}")
    print(f"total edges:    {graph.edge_count(t)}")
    return EX_OK


def _human_report(rep: SearchReport) -> None:
    cfg = "  ".join(f"{k}={v}" for k, v in rep.config)
    print(f"algorithm {rep.algorithm}  t={rep.t}  {cfg}")
    print(f"{'essay':>5} {'size':>5} {'seconds':>8}")
    for e in rep.essays:
        flag = " overflow" if e.overflow else ""
        print(f"{e.index:>5} {e.size:>5} {e.seconds:>8.3f}{flag}")
    best = rep.best
    print(f"best: size {len(best)} (essay {rep.best_essay})")
    print(f"matrix depth {rep.depth} of width {4 * rep.t}; "
          f"floor(4t/3) = {rep.third_threshold} ({'exceeded' if rep.exceeds_third else 'not exceeded'}), "
          f"2t = {rep.half_threshold} ({'exceeded' if rep.exceeds_half else 'not exceeded'})")
    print("members:", " ".join(str(c) for c in best.codes))


def cmd_search(args: argparse.Namespace) -> int:
    if args.t is None or args.t < 1:
        raise _Usage("search needs --t >= 1")
    seed = _effective_seed(args)
    try:
        if args.algorithm == "exact":
            cfg = exact.ExactSearchConfig(t=args.t, essays=args.essays, rng_seed=seed)
            rep = exact.run_exact(cfg, jobs=args.jobs, time_limit=args.time_limit)
        elif args.algorithm == "ga":
            gcfg = ga.GaConfig(
                t=args.t,
                population_size=args.population,
                max_generations=args.generations,
                p_m=args.pm,
                p_b=args.pb,
                rng_seed=seed,
            )
            rep = ga.run_many(gcfg, essays=args.essays, jobs=args.jobs,
                              time_limit=args.time_limit)
        else:
            base = read_clique(args.seed_file) if args.seed_file else Clique(t=args.t, members=())
            fcfg = fast.FastConfig(t=args.t, rng_seed=seed)
            rep = fast.run_many(base, fcfg, essays=args.essays, jobs=args.jobs,
                                time_limit=args.time_limit)
    except ValueError as exc:
        raise _Usage(str(exc)) from None
    _human_report(rep)
    out = args.out or Path(f"hadclique-{args.algorithm}-t{args.t}-seed{seed}.report")
    write_report(out, rep)
    print(f"report written: {out}")
    return EX_OK if len(rep.best) > 0 else EX_EMPTY


def cmd_verify(args: argparse.Namespace) -> int:
    text = args.path.read_text()
    if "+" in text or "-" in text:
        rep = verify_ph(ingest_sign_matrix(text))
    else:
        from .files import parse_clique_text

        rep = verify_clique(parse_clique_text(text))
    print(rep.message)
    return EX_OK if rep.ok else EX_VERIFY


def cmd_normalize(args: argparse.Namespace) -> int:
    nm = normalize(ingest_sign_matrix(args.path.read_text()))
    text = format_sign_matrix(nm.matrix)
    if args.out:
        args.out.write_text(text)
        print(f"normalized matrix written: {args.out}")
    else:
        sys.stdout.write(text)
    return EX_OK


def cmd_paley(args: argparse.Namespace) -> int:
    if args.t < 1:
        raise _Usage("paley needs --t >= 1")
    try:
        c = seeds.paley_seed(args.t)
    except NoDecomposition as exc:
        print(f"no seed: {exc}", file=sys.stderr)
        return EX_EMPTY
    text = format_clique_text(c)
    if args.out:
        args.out.write_text(text)
        print(f"seed clique of size {len(c)} written: {args.out}")
    else:
        sys.stdout.write(text)
    return EX_OK


def cmd_extend(args: argparse.Namespace) -> int:
    c = read_clique(args.path)
    seed = _effective_seed(args)
    if args.algorithm == "exact":
        grown = exact.extend_exact(c, Random(seed))
    else:
        grown = fast.run_fast(c, fast.FastConfig(t=c.t, rng_seed=seed))
    if len(grown) == len(c):
        print("warning: no extension found", file=sys.stderr)
    else:
        print(f"extended {len(c)} -> {len(grown)}")
    text = format_clique_text(grown)
    if args.out:
        args.out.write_text(text)
        print(f"clique written: {args.out}")
    else:
        sys.stdout.write(text)
    return EX_OK


def _bench_row(t: int, secs: list[float], ref: float | None) -> None:
    med = statistics.median(secs)
    note = f"  original implementation (2003-era hardware): {ref:.3f}s" if ref else ""
    print(f"t={t:>2}  median {med:>8.3f}s over {len(secs)} reps{note}")


def cmd_bench(args: argparse.Namespace) -> int:
    reps = max(1, args.reps)
    if args.suite == "census":
        print("census suite: per-k counts, degrees, totals for t = 1..7")
        ok = True
        for t, (nv, ne) in KNOWN_CENSUS.items():
            begin = time.perf_counter()
            good = graph.vertex_count(t) == nv and graph.edge_count(t) == ne
            secs = time.perf_counter() - begin
            ok &= good
            print(f"t={t}  vertices {nv}  edges {ne}  {'ok' if good else 'MISMATCH'}  ({secs:.3f}s)")
        print("census:", "all equalities hold" if ok else "MISMATCH DETECTED")
        return EX_OK if ok else EX_VERIFY
    ts = [args.t] if args.t else {"exact": [2, 3, 4, 5], "ga": [2, 3, 4, 5], "fast": [3, 4, 5]}[args.suite]
    print(f"{args.suite} suite, {reps} reps; reference times are informational only")
    for t in ts:
        secs: list[float] = []
        for r in range(reps):
            begin = time.perf_counter()
            if args.suite == "exact":
                exact.run_exact(exact.ExactSearchConfig(t=t, essays=1, rng_seed=r))
            elif args.suite == "ga":
                ga.run_ga(ga.GaConfig(t=t, rng_seed=r))
            else:
                fast.run_fast(Clique(t=t, members=()), fast.FastConfig(t=t, rng_seed=r))
            secs.append(time.perf_counter() - begin)
        _bench_row(t, secs, REFERENCE_SECONDS[args.suite].get(t))
    return EX_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _Usage as exc:
        print(f"hadclique: usage error: {exc}", file=sys.stderr)
        return EX_USAGE
    except SystemExit as exc:  # --help and friends
        return int(exc.code or 0)
    handler = {
        "stats": cmd_stats,
        "search": cmd_search,
        "verify": cmd_verify,
        "normalize": cmd_normalize,
        "paley": cmd_paley,
        "extend": cmd_extend,
        "bench": cmd_bench,
    }[args.command]
    try:
        return handler(args)
    except _Usage as exc:
        print(f"hadclique: usage error: {exc}", file=sys.stderr)
        return EX_USAGE
    except HadcliqueError as exc:
        print(f"hadclique: {exc}", file=sys.stderr)
        return EX_VERIFY
    except OSError as exc:
        print(f"hadclique: {exc}", file=sys.stderr)
        return EX_VERIFY


if __name__ == "__main__":
    sys.exit(main())
