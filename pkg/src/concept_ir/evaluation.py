"""Precision / recall scoring, qrels and query files, comparison reports."""

from __future__ import annotations

import time
from collections import defaultdict
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable, Mapping, Optional, Sequence

from .errors import EmptyRelevant, EmptyReport, EmptyRetrieved, MissingQrel, ParseError

MODELS = ("boolean", "vsm")
MODES = ("traditional", "semantic", "both")


@dataclass(frozen=True)
class Query:
    query_id: str
    model: str
    mode: str
    text: str

    @property
    def modes(self) -> tuple:
        return ("traditional", "semantic") if self.mode == "both" else (self.mode,)


@dataclass(frozen=True)
class RunResult:
    query_id: str
    mode: str
    retrieved: tuple
    elapsed_ms: float = 0.0

    def __post_init__(self):
        if len(set(self.retrieved)) != len(self.retrieved):
            raise ValueError(f"run {self.query_id!r} lists a document twice")
        if self.elapsed_ms < 0:
            raise ValueError("elapsed_ms must be non-negative")


Qrels = Mapping  # query id -> frozenset of relevant doc ids


def precision(retrieved: Iterable[int], relevant: Iterable[int]) -> float:
    retrieved = set(retrieved)
    if not retrieved:
        raise EmptyRetrieved("precision is undefined for an empty result")
    return len(retrieved & set(relevant)) / len(retrieved)


def recall(retrieved: Iterable[int], relevant: Iterable[int]) -> float:
    relevant = set(relevant)
    if not relevant:
        raise EmptyRelevant("recall is undefined without relevant documents")
    return len(set(retrieved) & relevant) / len(relevant)


def pr_at_k(run: RunResult, relevant: Iterable[int], k: int) -> tuple:
    """(precision, recall) over the first ``min(k, len(retrieved))`` hits."""
    if k < 1:
        raise ValueError("k must be at least 1")
    relevant = set(relevant)
    head = run.retrieved[:k]
    p = precision(head, relevant) if head else 0.0
    return p, recall(head, relevant)


def timed(fn: Callable, *args, repeats: int = 1, **kwargs):
    """Run ``fn`` ``repeats`` times; return (last result, mean wall-clock ms)."""
    if repeats < 1:
        raise ValueError("repeats must be at least 1")
    start = time.perf_counter()
    for _ in range(repeats):
        result = fn(*args, **kwargs)
    return result, (time.perf_counter() - start) * 1000.0 / repeats


def _data_lines(path):
    with open(Path(path), encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.rstrip("\r\n")
            if line.strip() and not line.startswith("#"):
                yield lineno, line.split("\t")


def load_qrels(path) -> dict:
    """TSV ``query-id<TAB>doc-id`` lines."""
    judged: dict = defaultdict(set)
    for lineno, parts in _data_lines(path):
        if len(parts) != 2 or not parts[0]:
            raise ParseError("expected query-id<TAB>doc-id", lineno)
        try:
            doc_id = int(parts[1])
        except ValueError:
            raise ParseError(f"doc id {parts[1]!r} is not an integer", lineno) from None
        judged[parts[0]].add(doc_id)
    return {q: frozenset(d) for q, d in judged.items()}


def save_qrels(qrels: Mapping, path) -> None:
    with open(Path(path), "w", encoding="utf-8", newline="\n") as fh:
        for qid in qrels:
            for doc_id in sorted(qrels[qid]):
                fh.write(f"{qid}\t{doc_id}\n")


def load_queries(path) -> list:
    """TSV ``id<TAB>model<TAB>mode<TAB>text`` lines; ``#`` starts a comment line."""
    queries = []
    seen = set()
    for lineno, parts in _data_lines(path):
        if len(parts) != 4:
            raise ParseError("expected id<TAB>model<TAB>mode<TAB>text", lineno)
        qid, model, mode, text = parts
        if model not in MODELS:
            raise ParseError(f"model must be one of {MODELS}, got {model!r}", lineno)
        if mode not in MODES:
            raise ParseError(f"mode must be one of {MODES}, got {mode!r}", lineno)
        if qid in seen:
            raise ParseError(f"duplicate query id {qid!r}", lineno)
        seen.add(qid)
        queries.append(Query(qid, model, mode, text))
    return queries


@dataclass(frozen=True)
class ReportRow:
    query_id: str  # "AVERAGE" on summary rows
    mode: str
    precision: Optional[float]  # None when undefined
    recall: float
    elapsed_ms: float
    n_retrieved: int


@dataclass
class Report:
    rows: list

    def averages(self) -> dict:
        return {r.mode: r for r in self.rows if r.query_id == AVERAGE}

    def to_tsv(self) -> str:
        lines = ["query\tmode\tprecision\trecall\telapsed_ms\tretrieved"]
        for r in self.rows:
            p = "undefined" if r.precision is None else f"{r.precision:.4f}"
            lines.append(f"{r.query_id}\t{r.mode}\t{p}\t{r.recall:.4f}\t{r.elapsed_ms:.3f}\t{r.n_retrieved}")
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        table = [["query", "mode", "P", "R", "ms", "n"]]
        for r in self.rows:
            p = "undef*" if r.precision is None else f"{100 * r.precision:.1f}%"
            table.append([r.query_id, r.mode, p, f"{100 * r.recall:.1f}%", f"{r.elapsed_ms:.3f}", str(r.n_retrieved)])
        widths = [max(len(row[i]) for row in table) for i in range(len(table[0]))]
        out = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in table]
        if any(r.precision is None for r in self.rows):
            out.append("* empty result; precision excluded from the average")
        return "\n".join(out) + "\n"


AVERAGE = "AVERAGE"


def _mean(values: Sequence[float]) -> Optional[float]:
    return sum(values) / len(values) if values else None


def compare_report(runs: Sequence[RunResult], qrels: Mapping, k: Optional[int] = None) -> Report:
    """Per-query and per-mode average precision / recall / latency.

    With ``k`` the metrics cover the top ``k`` hits only. Averages are plain
    means over queries; undefined precision is left out of the mean.
    """
    if not runs:
        raise EmptyReport("no runs to report")
    rows = []
    by_mode: dict = defaultdict(list)
    for run in runs:
        if run.query_id not in qrels:
            raise MissingQrel(f"no relevance judgments for query {run.query_id!r}")
        relevant = qrels[run.query_id]
        head = run.retrieved if k is None else run.retrieved[:k]
        p = precision(head, relevant) if head else None
        row = ReportRow(run.query_id, run.mode, p, recall(head, relevant), run.elapsed_ms, len(head))
        rows.append(row)
        by_mode[run.mode].append(row)
    for mode, mode_rows in by_mode.items():
        defined = [r.precision for r in mode_rows if r.precision is not None]
        rows.append(
            ReportRow(
                AVERAGE,
                mode,
                _mean(defined),
                _mean([r.recall for r in mode_rows]),
                _mean([r.elapsed_ms for r in mode_rows]),
                sum(r.n_retrieved for r in mode_rows),
            )
        )
    return Report(rows)
