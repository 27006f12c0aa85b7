"""Command-line entry point wiring all modules together.

Exit codes: 0 success, 1 usage error, 2 data-format error, 3 verification
failure.  Every file-producing subcommand writes a ``*.manifest.json``
sidecar recording flags, input digests and the output digest; readers
check the sidecar to reject partial or modified files.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict
from datetime import datetime, timezone
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from . import __version__
from .cards import Card, CardParseError, HolePair, OverlappingCardsError, parse_hand_list
from .complexes import SimplicialComplex, Tournament, order_complex
from .equity import (
    LiveCounts,
    TieConvention,
    matchup_counts,
    relation_at,
    win_probability,
)
from .evaluator import rank7
from .explore import SearchConfig, search, sphere_like
from .homology import HomologyReport, homology
from .manifest import DataFormatError, RunManifest, check_input_digest, sha256_file
from .matrix import CountsMatrix, closest_call, full_matrix
from .penney import first_occurrence_probability, penney_homology, penney_tournament
from .persistence import filtration_from_matrix, persistence
from .verify import ALL_CHECKS, VerifyContext

USAGE_ERROR = 1
DATA_ERROR = 2
VERIFY_ERROR = 3


class _Parser(argparse.ArgumentParser):
    """argparse parser whose usage failures exit with code 1."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


def _convention(args: argparse.Namespace) -> TieConvention:
    return TieConvention.SPLIT_TIE if args.convention == "split" else TieConvention.STRICT_WIN


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from exc


def _provider(args: argparse.Namespace):
    if getattr(args, "matrix", None):
        check_input_digest(args.matrix)
        return CountsMatrix.load(args.matrix)
    return LiveCounts()


def _emit(args: argparse.Namespace, payload: dict, text_lines: list[str]) -> None:
    if getattr(args, "format", "text") == "json":
        print(json.dumps(payload, indent=2, default=str, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _write_manifest(
    args: argparse.Namespace,
    subcommand: str,
    inputs: Sequence[str | Path],
    output: str | Path,
    started: float,
    workers: int = 1,
) -> None:
    arguments = {
        k: (str(v) if isinstance(v, (Path, Fraction)) else v)
        for k, v in vars(args).items()
        if k not in ("func",) and v is not None
    }
    manifest = RunManifest(
        subcommand=subcommand,
        arguments=arguments,
        input_digests={str(p): sha256_file(p) for p in inputs},
        output_digest=sha256_file(output),
        artifact_version=__version__,
        worker_count=workers,
        wall_clock_seconds=round(time.time() - started, 3),
        created_utc=datetime.now(timezone.utc).isoformat(),
    )
    manifest.save(output)


def cmd_eval(args: argparse.Namespace) -> int:
    cards = [Card.from_text(t) for t in args.cards]
    value = rank7(cards)
    payload = {
        "cards": [str(c) for c in cards],
        "category": value.category,
        "category_name": value.category_name,
        "tiebreak": list(value.tiebreak),
        "packed": value.packed,
    }
    _emit(args, payload, [str(value)])
    return 0


def _parse_pair(token: str) -> HolePair:
    if token.isdigit():
        return HolePair.from_index(int(token))
    return HolePair.from_text(token)


def cmd_matchup(args: argparse.Namespace) -> int:
    a = _parse_pair(args.a)
    b = _parse_pair(args.b)
    counts = matchup_counts(a, b)
    strict = win_probability(counts, TieConvention.STRICT_WIN)
    split = win_probability(counts, TieConvention.SPLIT_TIE)
    payload = {
        "a": str(a),
        "b": str(b),
        "wins": counts.wins,
        "ties": counts.ties,
        "losses": counts.losses,
        "total": counts.total,
        "strict_win": {"exact": str(strict), "float": float(strict)},
        "split_tie": {"exact": str(split), "float": float(split)},
    }
    lines = [
        f"{a} vs {b}",
        f"wins {counts.wins}  ties {counts.ties}  losses {counts.losses}  total {counts.total}",
        f"strict-win  {strict} = {float(strict):.6f}",
        f"split-tie   {split} = {float(split):.6f}",
    ]
    _emit(args, payload, lines)
    return 0


def cmd_matrix(args: argparse.Namespace) -> int:
    started = time.time()
    out = Path(args.out)
    if out.exists() and not args.force:
        check_input_digest(out)
        matrix = CountsMatrix.load(out)
        print(f"loaded existing matrix {out}", file=sys.stderr)
    else:
        checkpoint = Path(str(out) + ".checkpoint")
        if not args.resume and checkpoint.exists():
            checkpoint.unlink()

        def progress(done: int, total: int) -> None:
            print(f"\r{done}/{total} classes", end="", file=sys.stderr, flush=True)

        matrix = full_matrix(
            use_symmetry=not args.no_symmetry,
            jobs=args.jobs,
            checkpoint=checkpoint,
            progress=progress,
        )
        print(file=sys.stderr)
        matrix.save(out)
        _write_manifest(args, "matrix", [], out, started, workers=args.jobs)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            matrix.to_csv(fh)
        _write_manifest(args, "matrix-csv", [out], args.csv, started, workers=args.jobs)
    return 0


def cmd_closest(args: argparse.Namespace) -> int:
    check_input_digest(args.matrix)
    matrix = CountsMatrix.load(args.matrix)
    a, b, prob = closest_call(matrix, _convention(args))
    payload = {
        "a": str(a),
        "b": str(b),
        "probability": {"exact": str(prob), "float": float(prob)},
        "convention": args.convention,
    }
    _emit(args, payload, [f"{a} vs {b}: {prob} = {float(prob):.6f} ({args.convention})"])
    return 0


def cmd_relation(args: argparse.Namespace) -> int:
    started = time.time()
    hands = parse_hand_list(args.hands)
    provider = _provider(args)
    tournament = relation_at(provider, hands, _convention(args), args.p)
    if args.out:
        tournament.save(args.out)
        inputs = [args.matrix] if args.matrix else []
        _write_manifest(args, "relation", inputs, args.out, started)
    else:
        for u, v in sorted(tournament.edges):
            prob = tournament.probabilities.get((u, v))
            suffix = f" {prob.numerator}/{prob.denominator}" if prob is not None else ""
            print(f"{u} {v}{suffix}")
    return 0


def cmd_complex(args: argparse.Namespace) -> int:
    started = time.time()
    check_input_digest(args.relation)
    tournament = Tournament.load(args.relation)
    complex_ = order_complex(tournament)
    complex_.save(args.out)
    _write_manifest(args, "complex", [args.relation], args.out, started)
    return 0


def cmd_homology(args: argparse.Namespace) -> int:
    check_input_digest(args.complex)
    complex_ = SimplicialComplex.load(args.complex)
    report = homology(complex_, reduced=args.reduced)
    payload = {
        "reduced": report.reduced,
        "betti": list(report.betti),
        "torsion": [list(t) for t in report.torsion],
    }
    _emit(args, payload, str(report).splitlines())
    return 0


def cmd_persist(args: argparse.Namespace) -> int:
    hands = parse_hand_list(args.hands)
    provider = _provider(args)
    filtration = filtration_from_matrix(provider, hands, _convention(args))
    diagram = persistence(filtration)
    payload = {
        "points": [
            {
                "dimension": p.dimension,
                "birth": str(p.birth),
                "death": str(p.death_or_sentinel),
            }
            for p in diagram.points
        ]
    }
    lines = [
        f"{p.dimension} {p.birth} {p.death_or_sentinel}" for p in diagram.points
    ]
    _emit(args, payload, lines)
    return 0


def cmd_penney(args: argparse.Namespace) -> int:
    if args.odds:
        a, b = args.odds
        prob = first_occurrence_probability(a, b)
        payload = {"a": a, "b": b, "probability": {"exact": str(prob), "float": float(prob)}}
        _emit(args, payload, [f"P({a} before {b}) = {prob} = {float(prob):.6f}"])
        return 0
    if args.relation:
        tournament = penney_tournament(args.n)
        if args.out:
            tournament.save(args.out)
        else:
            for u, v in sorted(tournament.edges):
                prob = tournament.probabilities[(u, v)]
                print(f"{u} {v} {prob.numerator}/{prob.denominator}")
        return 0
    report = penney_homology(args.n)
    payload = {
        "n": args.n,
        "reduced": True,
        "betti": list(report.betti),
        "torsion": [list(t) for t in report.torsion],
    }
    _emit(args, payload, str(report).splitlines())
    return 0


def cmd_search(args: argparse.Namespace) -> int:
    provider = _provider(args)
    config = SearchConfig(
        keep_probability=args.p,
        trials=args.trials,
        seed=args.seed,
        target=sphere_like(args.min_degree),
    )
    hits = search(config, provider, _convention(args), start_trial=args.start)
    payload = {"hits": []}
    lines = []
    for hit in hits:
        hands = ",".join(str(h) for h in hit.hands)
        degrees = {
            k: hit.report.betti[k]
            for k in range(len(hit.report.betti))
            if hit.report.betti[k]
        }
        payload["hits"].append(
            {"trial": hit.trial, "hands": hands, "reduced_betti": list(hit.report.betti)}
        )
        lines.append(f"trial={hit.trial} hands={hands} homology={degrees}")
    if not hits:
        lines = ["no hits"]
    _emit(args, payload, lines)
    return 0


def cmd_verify_paper(args: argparse.Namespace) -> int:
    skip = {int(x) for x in args.skip.split(",") if x} if args.skip else set()
    only = {int(x) for x in args.only.split(",") if x} if args.only else None
    ctx = VerifyContext(seed=args.seed, jobs=args.jobs, matrix_path=args.matrix)
    failures = 0
    results = []
    for item in ALL_CHECKS:
        selected = (only is None or item.number in only) and item.number not in skip
        if args.fast and item.needs_matrix:
            selected = False
        if not selected:
            continue
        started = time.time()
        try:
            ok, detail = item.run(ctx)
        except Exception as exc:  # a crashed check is a failed check
            ok, detail = False, f"crashed: {exc!r}"
        elapsed = time.time() - started
        results.append(
            {"number": item.number, "name": item.name, "passed": ok, "detail": detail,
             "seconds": round(elapsed, 2)}
        )
        status = "PASS" if ok else "FAIL"
        if args.format != "json":
            print(f"{status} {item.number:2d}. {item.name} — {detail} [{elapsed:.1f}s]")
        if not ok:
            failures += 1
    if args.format == "json":
        print(json.dumps({"results": results, "passed": failures == 0}, indent=2))
    elif failures:
        print(f"{failures} check(s) FAILED")
    else:
        print("all selected checks passed")
    return VERIFY_ERROR if failures else 0


def build_parser() -> _Parser:
    parser = _Parser(prog="pokertopo", description=__doc__)
    parser.add_argument("--version", action="version", version=f"pokertopo {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add(name: str, func, help_: str, readout: bool = False) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=func)
        if readout:
            p.add_argument("--format", choices=("text", "json"), default="text")
        return p

    p = add("eval", cmd_eval, "rank a 7-card hand", readout=True)
    p.add_argument("cards", nargs=7, metavar="CARD")

    p = add("matchup", cmd_matchup, "exact counts for one matchup", readout=True)
    p.add_argument("a", metavar="PAIR")
    p.add_argument("b", metavar="PAIR")

    p = add("matrix", cmd_matrix, "compute the full counts matrix (hours)")
    p.add_argument("--out", required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--resume", action="store_true", help="reuse an existing checkpoint")
    p.add_argument("--force", action="store_true", help="recompute even if --out exists")
    p.add_argument("--no-symmetry", action="store_true",
                   help="enumerate every matchup directly (much slower)")
    p.add_argument("--csv", help="also export defined entries as CSV")

    p = add("closest", cmd_closest, "minimal above-1/2 win probability", readout=True)
    p.add_argument("--matrix", required=True)
    p.add_argument("--convention", choices=("strict", "split"), default="strict")

    p = add("relation", cmd_relation, "beats relation on a hand set")
    p.add_argument("--hands", required=True, help="comma-separated pair texts or indices")
    p.add_argument("--matrix")
    p.add_argument("--convention", choices=("strict", "split"), default="strict")
    p.add_argument("--p", type=_fraction, default=Fraction(1, 2),
                   help="threshold in [0.5, 1]; decimals and fractions accepted")
    p.add_argument("--out")

    p = add("complex", cmd_complex, "order complex of a relation file")
    p.add_argument("--relation", required=True)
    p.add_argument("--out", required=True)

    p = add("homology", cmd_homology, "integer homology of a complex file", readout=True)
    p.add_argument("--complex", required=True)
    p.add_argument("--reduced", action="store_true")

    p = add("persist", cmd_persist, "persistence diagram of a hand set", readout=True)
    p.add_argument("--hands", required=True)
    p.add_argument("--matrix")
    p.add_argument("--convention", choices=("strict", "split"), default="strict")

    p = add("penney", cmd_penney, "Penney's game odds / relation / homology", readout=True)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--homology", action="store_true", help="(default mode)")
    p.add_argument("--relation", action="store_true")
    p.add_argument("--odds", nargs=2, metavar=("A", "B"))
    p.add_argument("--out")

    p = add("search", cmd_search, "randomized search for sphere-like hand sets",
            readout=True)
    p.add_argument("--matrix")
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--min-degree", type=int, default=2)
    p.add_argument("--start", type=int, default=0, help="resume from this trial index")
    p.add_argument("--convention", choices=("strict", "split"), default="strict")

    p = add("verify-paper", cmd_verify_paper, "run the reproduction suite", readout=True)
    p.add_argument("--fast", action="store_true",
                   help="skip the full-matrix job (item 11)")
    p.add_argument("--matrix", help="matrix file for item 11 (loaded or computed)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=1712304)
    p.add_argument("--skip", help="comma-separated item numbers to skip")
    p.add_argument("--only", help="comma-separated item numbers to run")

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CardParseError, OverlappingCardsError, DataFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DATA_ERROR
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DATA_ERROR


if __name__ == "__main__":
    sys.exit(main())
