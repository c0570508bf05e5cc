"""Command-line entry points.

    tweetfilter ingest --source hate --format jsonl --in raw.jsonl \
        --out corpus.jsonl --rejects rejects.jsonl
    tweetfilter load --corpus corpus.jsonl --db service.db
    tweetfilter serve --config config.json
    tweetfilter events export --from 2024-01-01T00:00:00Z \
        --to 2025-01-01T00:00:00Z --out events.jsonl --db service.db

`ingest` runs the full enrichment pipeline (parse, label mapping,
sentiment/language/bot annotation, dedupe) and writes the canonical corpus
JSONL that `load` persists and `serve` serves.
"""

from __future__ import annotations

import argparse
import json
import sys

from .annotate import annotate_corpus
from .api import build_app_from_config
from .bots import BotProvider, OfflineBotProvider, RemoteBotProvider
from .config import ServiceConfig
from .errors import TweetFilterError
from .ingest import merge, normalize_all, parse_corpus
from .language import load_stopwords
from .records import SourceTag, read_corpus_jsonl, write_corpus_jsonl
from .sentiment import SentimentLexicon, builtin_lexicon
from .store import FilterStore, SqliteStorage
from .telemetry import SqliteTelemetryStore, export_jsonl, parse_iso_utc

SOURCE_FLAGS = {"hate": SourceTag.HATE, "misinfo": SourceTag.MISINFO}


def _bot_provider(config: ServiceConfig) -> BotProvider:
    if config.bot_provider == "remote":
        return RemoteBotProvider()
    if config.bot_fixture_path:
        return OfflineBotProvider.from_file(config.bot_fixture_path)
    return OfflineBotProvider()


def cmd_ingest(args: argparse.Namespace) -> int:
    config = ServiceConfig.load(args.config)
    source = SOURCE_FLAGS[args.source]
    with open(args.infile, "rb") as fh:
        parsed = parse_corpus(fh.read(), args.format, source)
    records, rejects = normalize_all(parsed, source)

    lexicon = (
        SentimentLexicon.from_file(args.lexicon or config.lexicon_path)
        if (args.lexicon or config.lexicon_path)
        else builtin_lexicon()
    )
    kwargs = {}
    if args.stopwords_en or config.stopwords_en_path:
        kwargs["en_words"] = load_stopwords(args.stopwords_en or config.stopwords_en_path)
    if args.stopwords_es or config.stopwords_es_path:
        kwargs["es_words"] = load_stopwords(args.stopwords_es or config.stopwords_es_path)

    corpus = annotate_corpus(merge(records), lexicon, _bot_provider(config), **kwargs)
    write_corpus_jsonl(corpus, args.out)
    if args.rejects:
        with open(args.rejects, "w", encoding="utf-8", newline="\n") as fh:
            for reject in rejects:
                fh.write(json.dumps(reject.to_json_dict(), ensure_ascii=False) + "\n")
    elif rejects:
        for reject in rejects[:5]:
            print(f"reject (line {reject.line}, {reject.stage}): {reject.reason}", file=sys.stderr)
        if len(rejects) > 5:
            print(f"... and {len(rejects) - 5} more (use --rejects to keep the full report)", file=sys.stderr)
    counts = {tag.value: n for tag, n in corpus.counts_by_source.items()}
    print(f"ingested {len(corpus)} records ({counts}), {len(rejects)} rejected -> {args.out}")
    return 0


def cmd_load(args: argparse.Namespace) -> int:
    config = ServiceConfig.load(args.config)
    db_path = args.db or config.database_path
    if not db_path:
        print("error: no database path (use --db or configure database_path)", file=sys.stderr)
        return 2
    corpus = read_corpus_jsonl(args.corpus)
    report = FilterStore(SqliteStorage(db_path)).bulk_load(corpus)
    print(f"loaded {len(corpus)} records into {db_path} (inserted {report.inserted}, replaced {report.replaced})")
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    config = ServiceConfig.load(args.config)
    app = build_app_from_config(config)
    uvicorn.run(app, host=config.host, port=config.port, log_level="info")
    return 0


def cmd_events_export(args: argparse.Namespace) -> int:
    config = ServiceConfig.load(args.config)
    db_path = args.db or config.database_path
    if not db_path:
        print("error: no database path (use --db or configure database_path)", file=sys.stderr)
        return 2
    store = SqliteTelemetryStore(db_path)
    count = export_jsonl(store, parse_iso_utc(args.time_from), parse_iso_utc(args.time_to), args.out)
    print(f"exported {count} events -> {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tweetfilter", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_ingest = sub.add_parser("ingest", help="parse, annotate and export a source dataset")
    p_ingest.add_argument("--source", required=True, choices=sorted(SOURCE_FLAGS))
    p_ingest.add_argument("--format", required=True, choices=("jsonl", "csv"))
    p_ingest.add_argument("--in", dest="infile", required=True)
    p_ingest.add_argument("--out", required=True)
    p_ingest.add_argument("--rejects", default="")
    p_ingest.add_argument("--lexicon", default="", help="token<TAB>valence file (default: built-in)")
    p_ingest.add_argument("--stopwords-en", default="")
    p_ingest.add_argument("--stopwords-es", default="")
    p_ingest.add_argument("--config", default=None)
    p_ingest.set_defaults(func=cmd_ingest)

    p_load = sub.add_parser("load", help="bulk-load a corpus JSONL into the store")
    p_load.add_argument("--corpus", required=True)
    p_load.add_argument("--db", default="")
    p_load.add_argument("--config", default=None)
    p_load.set_defaults(func=cmd_load)

    p_serve = sub.add_parser("serve", help="run the HTTP API")
    p_serve.add_argument("--config", default=None)
    p_serve.set_defaults(func=cmd_serve)

    p_events = sub.add_parser("events", help="telemetry utilities")
    events_sub = p_events.add_subparsers(dest="events_command", required=True)
    p_export = events_sub.add_parser("export", help="export a time range as JSONL")
    p_export.add_argument("--from", dest="time_from", required=True, help="ISO-8601 start (inclusive)")
    p_export.add_argument("--to", dest="time_to", required=True, help="ISO-8601 end (exclusive)")
    p_export.add_argument("--out", required=True)
    p_export.add_argument("--db", default="")
    p_export.add_argument("--config", default=None)
    p_export.set_defaults(func=cmd_events_export)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except TweetFilterError as exc:
        print(f"error [{exc.code}]: {exc.message}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, KeyError) as exc:
        print(f"error: malformed input file: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
