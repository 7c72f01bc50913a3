"""Command-line entry point: ``concept-ir <index|search|rc|eval|fixtures> ...``.

Exit status is 0 on success, 1 on usage errors and 2 on data errors.
Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import fixtures
from .corpus import load_collection
from .errors import ConceptIRError
from .estimators import make_retriever
from .evaluation import RunResult, compare_report, load_qrels, load_queries, timed
from .index import build_index, load_index, save_index
from .ontology import candidate_costs, load_ontology, resolve_rc
from .textpipe import LANGUAGES, StopWords, pipeline
from .vsm import NORMS, QUERY_WEIGHTINGS

log = logging.getLogger("concept_ir")

EXIT_OK, EXIT_USAGE, EXIT_DATA = 0, 1, 2

DEFAULTS = {
    "corpus": None,
    "ontology": None,
    "index": None,
    "queries": None,
    "qrels": None,
    "stopwords": [],
    "language": "auto",
    "hops": 0,
    "topk": 10,
    "query_weighting": "binary",
    "norm": "query-subspace",
    "log_level": "warning",
}
_PATH_KEYS = ("corpus", "ontology", "index", "queries", "qrels")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


def _add_common(p: argparse.ArgumentParser) -> None:
    # defaults stay None so config-file values can fill the gaps
    p.add_argument("--config", help="JSON file with default option values")
    p.add_argument("--ontology", help="ontology TSV file")
    p.add_argument("--stopwords", action="append", help="stop-word list file (repeatable)")
    p.add_argument("--language", choices=LANGUAGES)
    p.add_argument("--log-level", dest="log_level", choices=["debug", "info", "warning", "error"])


def _add_retrieval(p: argparse.ArgumentParser) -> None:
    p.add_argument("--index", help="index file written by the index command")
    p.add_argument("--corpus", help="JSON-lines corpus (indexed on the fly when no --index)")
    p.add_argument("--hops", type=int, help="relatedness hop limit h (default 0)")
    p.add_argument("--topk", type=int, help="ranked results to keep (default 10)")
    p.add_argument("--query-weighting", dest="query_weighting", choices=QUERY_WEIGHTINGS)
    p.add_argument("--norm", choices=NORMS)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="concept-ir", description="Concept-aware Arabic/English retrieval.")
    parser.add_argument("--seed-fixtures", metavar="DIR", help="write the shipped fixtures to DIR and exit")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("index", help="build and save the index pair")
    _add_common(p)
    p.add_argument("--corpus")
    p.add_argument("--out", required=True, help="output index file")

    p = sub.add_parser("search", help="run one query")
    _add_common(p)
    _add_retrieval(p)
    p.add_argument("--model", choices=["boolean", "vsm"], default="vsm")
    p.add_argument("--mode", choices=["traditional", "semantic"], default="semantic")
    p.add_argument("--query", required=True)

    p = sub.add_parser("rc", help="resolve the reference concept of some words")
    _add_common(p)
    p.add_argument("words", nargs="+")

    p = sub.add_parser("eval", help="score a query suite against qrels")
    _add_common(p)
    _add_retrieval(p)
    p.add_argument("--queries", help="TSV: id, model, mode, text")
    p.add_argument("--qrels", help="TSV: query-id, doc-id")
    p.add_argument("--repeats", type=int, default=1, help="timing repetitions per query")
    p.add_argument("--format", choices=["text", "tsv"], default="text")

    p = sub.add_parser("fixtures", help="materialize the shipped fixtures")
    p.add_argument("--out", required=True, help="target directory")
    p.add_argument("--name", action="append", choices=sorted(fixtures.FIXTURES))
    return parser


def resolve_config(args: argparse.Namespace) -> dict:
    """Built-in defaults, overlaid by the config file, overlaid by flags."""
    cfg = dict(DEFAULTS)
    config_path = getattr(args, "config", None)
    if config_path:
        base = Path(config_path).parent
        try:
            data = json.loads(Path(config_path).read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise ConceptIRError(f"{config_path}: invalid JSON ({exc.msg})") from None
        if not isinstance(data, dict):
            raise ConceptIRError(f"{config_path}: expected a JSON object")
        unknown = set(data) - set(DEFAULTS)
        if unknown:
            raise ConceptIRError(f"{config_path}: unknown keys {sorted(unknown)}")
        for key in _PATH_KEYS:
            if data.get(key):
                data[key] = str(base / data[key])
        if data.get("stopwords"):
            data["stopwords"] = [str(base / p) for p in data["stopwords"]]
        cfg.update(data)
    for key in DEFAULTS:
        value = getattr(args, key, None)
        if value is not None:
            cfg[key] = value
    return cfg


def _stopwords(cfg) -> Optional[StopWords]:
    return StopWords.from_paths(cfg["stopwords"]) if cfg["stopwords"] else None


def _graph(cfg, required=False):
    if cfg["ontology"]:
        return load_ontology(cfg["ontology"])
    if required:
        raise UsageError("--ontology is required")
    return None


def _index_and_graph(cfg):
    graph = _graph(cfg)
    if cfg["index"]:
        return load_index(cfg["index"]), graph
    if cfg["corpus"]:
        return build_index(load_collection(cfg["corpus"]), graph, cfg["language"], _stopwords(cfg)), graph
    raise UsageError("give --index or --corpus")


def _retriever(model, mode, cfg, ix, graph):
    return make_retriever(
        model,
        ontology=graph,
        mode=mode,
        hops=cfg["hops"],
        topk=cfg["topk"],
        query_weighting=cfg["query_weighting"],
        norm=cfg["norm"],
        language=cfg["language"],
        stopwords=_stopwords(cfg),
    ).fit(ix)


def cmd_index(args, cfg, out) -> int:
    if not cfg["corpus"]:
        raise UsageError("--corpus is required")
    collection = load_collection(cfg["corpus"])
    ix = build_index(collection, _graph(cfg), cfg["language"], _stopwords(cfg))
    save_index(ix, args.out)
    log.info("indexed %d documents, %d terms", ix.n_docs, len(ix.traditional))
    print(f"{args.out}\tN={ix.n_docs}\tterms={len(ix.traditional)}\tpostings={len(ix.semantic)}", file=out)
    return EXIT_OK


def cmd_search(args, cfg, out) -> int:
    ix, graph = _index_and_graph(cfg)
    retriever = _retriever(args.model, args.mode, cfg, ix, graph)
    if args.model == "vsm":
        hits, ms = timed(retriever.rank, args.query)
        for h in hits:
            print(f"{h.doc_id}\t{h.score:.5f}", file=out)
    else:
        docs, ms = timed(retriever.search, args.query)
        for d in docs:
            print(d, file=out)
    log.info("query took %.3f ms", ms)
    return EXIT_OK


def cmd_rc(args, cfg, out) -> int:
    graph = _graph(cfg, required=True)
    terms = pipeline(args.words, cfg["language"], _stopwords(cfg))
    rc = resolve_rc(graph, terms)
    print("UNKNOWN" if rc is None else rc, file=out)
    for cc in candidate_costs(graph, terms):
        print(f"{cc.node_id}\t{cc.cost}\t{cc.max_distance}", file=out)
    return EXIT_OK


def cmd_eval(args, cfg, out) -> int:
    if not cfg["queries"] or not cfg["qrels"]:
        raise UsageError("--queries and --qrels are required")
    if args.repeats < 1:
        raise UsageError("--repeats must be at least 1")
    ix, graph = _index_and_graph(cfg)
    queries = load_queries(cfg["queries"])
    qrels = load_qrels(cfg["qrels"])
    retrievers = {}
    runs = []
    for q in queries:
        for mode in q.modes:
            key = (q.model, mode)
            if key not in retrievers:
                retrievers[key] = _retriever(q.model, mode, cfg, ix, graph)
            docs, ms = timed(retrievers[key].predict, q.text, repeats=args.repeats)
            runs.append(RunResult(q.query_id, mode, tuple(docs[0]), ms))
    report = compare_report(runs, qrels)
    out.write(report.to_tsv() if args.format == "tsv" else report.to_text())
    return EXIT_OK


def cmd_fixtures(args, out) -> int:
    for path in fixtures.materialize(args.out, args.name):
        print(path, file=out)
    return EXIT_OK


COMMANDS = {"index": cmd_index, "search": cmd_search, "rc": cmd_rc, "eval": cmd_eval}


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    for stream in (sys.stdout, sys.stderr):
        if hasattr(stream, "reconfigure"):
            stream.reconfigure(encoding="utf-8")
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(argv)
        if args.seed_fixtures:
            for path in fixtures.materialize(args.seed_fixtures):
                print(path, file=out)
            return EXIT_OK
        if args.command is None:
            raise UsageError(parser.format_usage())
        if args.command == "fixtures":
            return cmd_fixtures(args, out)
        cfg = resolve_config(args)
        logging.basicConfig(level=cfg["log_level"].upper(), stream=err, format="%(levelname)s %(message)s")
        return COMMANDS[args.command](args, cfg, out)
    except UsageError as exc:
        print(str(exc).rstrip(), file=err)
        return EXIT_USAGE
    except (ConceptIRError, OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
