"""Command line interface.

Subcommands: lookup, classify, stats, chisq, wordcount, session (interactive
dialogue), serve (HTTP service). Data-reading commands take --json for a
machine-readable envelope. Exit codes: 0 success, 1 domain error, 2 usage.

Paths default to the bundled data and can be overridden by flags or by the
environment (flag beats ECOREC_DATASET / ECOREC_CATALOG / ECOREC_STORE /
ECOREC_LISTEN beats the built-in default).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .catalog import load_catalog_path
from .countries import (
    METRICS,
    load_dataset_path,
    lookup_country,
    shortest_decimal,
    summarize,
)
from .errors import CountryNotFound, EcorecError, IndexOutOfRange, InvalidDifficulty
from .resources import DEFAULT_CATALOG, DEFAULT_DATASET, data_path
from .session import (
    COUNTRY_RESULT_PREAMBLE,
    MSG_ASK_DIFFICULTY,
    PROMPT_COUNTRY,
    PROMPT_WANT_RECOMMENDATIONS,
    SessionState,
    answer_recommendations,
    choose_difficulty,
    mark_task,
    new_session,
    submit_country,
    total_points,
)
from .standing import classify
from .store import SessionStore
from .textstats import chi_square, contingency_from_csv, count_word_merged

MSG_ENCOURAGE = "Great job taking action against plastic waste!"


def _print_envelope(payload, message: str | None = None) -> None:
    envelope = {"status": "ok"}
    if message is not None:
        envelope["message"] = message
    envelope["payload"] = payload
    print(json.dumps(envelope))


def cmd_lookup(args: argparse.Namespace) -> int:
    records = load_dataset_path(args.dataset)
    record = lookup_country(records, args.name)
    if args.json:
        _print_envelope(
            {
                "name": record.name,
                "mismanaged_share_pct": record.mismanaged_share_pct,
                "waste_per_capita_tonnes": record.waste_per_capita_tonnes,
            }
        )
    else:
        print(record.name)
        print(f"mismanaged_share_pct: {shortest_decimal(record.mismanaged_share_pct)}")
        print(f"waste_per_capita_tonnes: {shortest_decimal(record.waste_per_capita_tonnes)}")
    return 0


def cmd_classify(args: argparse.Namespace) -> int:
    result = classify(args.pct)
    if args.json:
        _print_envelope(
            {
                "standing": result.standing.value,
                "short_label": result.short_label,
                "long_label": result.long_label,
                "reason": result.reason,
            }
        )
    else:
        if result.short_label is not None:
            print(result.short_label)
        print(result.long_label)
        print(result.reason)
    return 0


def cmd_stats(args: argparse.Namespace) -> int:
    records = load_dataset_path(args.csv)
    summary = summarize(records, args.metric)
    if args.json:
        _print_envelope(
            {
                "metric": args.metric,
                "mean": summary.mean,
                "minimum": summary.minimum,
                "median": summary.median,
                "maximum": summary.maximum,
                "sample_stdev": summary.sample_stdev,
            }
        )
    else:
        print(f"metric: {args.metric}")
        print(f"mean: {summary.mean}")
        print(f"minimum: {summary.minimum}")
        print(f"median: {summary.median}")
        print(f"maximum: {summary.maximum}")
        stdev = "n/a" if summary.sample_stdev is None else str(summary.sample_stdev)
        print(f"sample_stdev: {stdev}")
    return 0


def cmd_chisq(args: argparse.Namespace) -> int:
    result = chi_square(contingency_from_csv(Path(args.csv).read_text(encoding="utf-8")))
    if args.json:
        _print_envelope(
            {
                "observed": [list(row) for row in result.table.observed],
                "row_labels": list(result.table.row_labels),
                "col_labels": list(result.table.col_labels),
                "expected": result.expected.tolist(),
                "components": result.components.tolist(),
                "statistic": result.statistic,
                "df": result.df,
                "p_value": result.p_value,
                "significant_at_5pct": result.significant_at_5pct,
            }
        )
    else:
        p_text = f"{result.p_value:.6g}"
        if result.p_value < 0.00001:
            p_text += " (p < .00001)"
        print(f"statistic: {result.statistic:.4f}")
        print(f"df: {result.df}")
        print(f"p-value: {p_text}")
        print(f"significant at p < .05: {'yes' if result.significant_at_5pct else 'no'}")
    return 0


def cmd_wordcount(args: argparse.Namespace) -> int:
    text = Path(args.textfile).read_text(encoding="utf-8")
    counts = {word: count_word_merged(text, word) for word in args.words}
    if args.json:
        _print_envelope({"counts": counts, "total": sum(counts.values())})
    else:
        for word, count in counts.items():
            print(f"{word}: {count}")
        if len(counts) > 1:
            print(f"total: {sum(counts.values())}")
    return 0


def cmd_session(args: argparse.Namespace) -> int:
    records = load_dataset_path(args.dataset)
    catalog = load_catalog_path(args.catalog)
    store = SessionStore(args.store)
    if args.session:
        session = store.restore(args.session)
    else:
        session = new_session()
        store.persist(session)
    print(f"Session id: {session.id}")

    try:
        if session.state is SessionState.AWAITING_COUNTRY:
            result = None
            while result is None:
                print(PROMPT_COUNTRY)
                try:
                    result = submit_country(session, records, input())
                except CountryNotFound as exc:
                    print(exc)
            store.persist(session)
            print(COUNTRY_RESULT_PREAMBLE)
            if result.short_label is not None:
                print(result.short_label)
            print(result.long_label)
            print(result.reason)

        asked_difficulty = False
        if session.state is SessionState.AWAITING_YES_NO:
            print(PROMPT_WANT_RECOMMENDATIONS)
            while True:
                accepted, message = answer_recommendations(session, input())
                print(message)
                if accepted:
                    break
            store.persist(session)
            if session.state is SessionState.TERMINATED:
                return 0
            asked_difficulty = True  # the YES reply already printed the question

        if session.state is SessionState.TERMINATED:
            return 0

        if not asked_difficulty:
            print(MSG_ASK_DIFFICULTY)
        while True:
            try:
                tasks = choose_difficulty(session, input(), catalog)
                break
            except InvalidDifficulty as exc:
                print(exc)
        store.persist(session)

        print(f"Here are your {len(tasks)} recommendations:")
        for number, task in enumerate(tasks, start=1):
            print(f"{number}. [{task.difficulty.value}] {task.text}")
        print("Mark a task by typing its number and O or X (for example: 1 O).")
        print("Press Enter on an empty line when you are done.")
        while True:
            try:
                line = input()
            except EOFError:
                break
            if not line.strip():
                break
            parts = line.split()
            if len(parts) != 2 or not parts[0].isdigit():
                print("Type a task number and a mark, like: 1 O")
                continue
            try:
                mark_task(session, int(parts[0]) - 1, parts[1])
            except IndexOutOfRange as exc:
                print(exc)
                continue
            store.persist(session)
            print(f"Total points: {total_points(session)}")

        print(MSG_ENCOURAGE)
        print(f"Total points: {total_points(session)}")
        return 0
    except EOFError:
        return 1


def cmd_serve(args: argparse.Namespace) -> int:
    host, _, port_text = args.listen.rpartition(":")
    if not host or not port_text.isdigit():
        print(f"invalid --listen address {args.listen!r}, expected HOST:PORT", file=sys.stderr)
        return 2
    import uvicorn

    from .service import ServiceConfig, create_app

    config = ServiceConfig(
        dataset_path=Path(args.dataset),
        catalog_path=Path(args.catalog),
        store_path=Path(args.store),
    )
    uvicorn.run(create_app(config), host=host, port=int(port_text))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ecorec",
        description="Zero-waste recommendations, country standings, and corpus statistics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    json_flag = argparse.ArgumentParser(add_help=False)
    json_flag.add_argument("--json", action="store_true", help="print a JSON envelope")

    dataset_flag = argparse.ArgumentParser(add_help=False)
    dataset_flag.add_argument(
        "--dataset",
        default=os.environ.get("ECOREC_DATASET", str(data_path(DEFAULT_DATASET))),
        help="country dataset CSV (env: ECOREC_DATASET)",
    )
    catalog_flag = argparse.ArgumentParser(add_help=False)
    catalog_flag.add_argument(
        "--catalog",
        default=os.environ.get("ECOREC_CATALOG", str(data_path(DEFAULT_CATALOG))),
        help="recommendation catalog CSV (env: ECOREC_CATALOG)",
    )
    store_flag = argparse.ArgumentParser(add_help=False)
    store_flag.add_argument(
        "--store",
        default=os.environ.get("ECOREC_STORE", "./sessions"),
        help="session store directory (env: ECOREC_STORE)",
    )

    p = sub.add_parser("lookup", parents=[json_flag, dataset_flag], help="look up a country")
    p.add_argument("name")
    p.set_defaults(func=cmd_lookup)

    p = sub.add_parser("classify", parents=[json_flag], help="classify a mismanaged share")
    p.add_argument("pct", type=float)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("stats", parents=[json_flag], help="summary statistics for a dataset CSV")
    p.add_argument("csv")
    p.add_argument("metric", choices=METRICS)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("chisq", parents=[json_flag], help="chi-squared test on a contingency CSV")
    p.add_argument("csv")
    p.set_defaults(func=cmd_chisq)

    p = sub.add_parser("wordcount", parents=[json_flag], help="merged-case keyword counts")
    p.add_argument("textfile")
    p.add_argument("words", nargs="+", metavar="word")
    p.set_defaults(func=cmd_wordcount)

    p = sub.add_parser(
        "session",
        parents=[dataset_flag, catalog_flag, store_flag],
        help="interactive dialogue session",
    )
    p.add_argument("--session", help="resume an existing session id")
    p.set_defaults(func=cmd_session)

    p = sub.add_parser(
        "serve",
        parents=[dataset_flag, catalog_flag, store_flag],
        help="run the HTTP service",
    )
    p.add_argument(
        "--listen",
        default=os.environ.get("ECOREC_LISTEN", "127.0.0.1:8000"),
        help="bind address HOST:PORT (env: ECOREC_LISTEN)",
    )
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except EcorecError as exc:
        if getattr(args, "json", False):
            print(json.dumps({"status": "error", "code": exc.code, "message": str(exc)}))
        else:
            print(str(exc), file=sys.stderr)
        return 1
    except OSError as exc:
        print(str(exc), file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
