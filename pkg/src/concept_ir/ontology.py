"""Concept graph, hop distances and Reference Concept resolution.

The ontology is a plain labeled multigraph. Paths ignore edge direction and
every edge costs one hop. A term's senses are the graph nodes it can denote;
the Reference Concept (RC) of a set of terms is the concept node that sits
closest to all of them at once.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import DanglingReference, ParseError

# A ReferenceConcept is a node id, or None for UNKNOWN.
ReferenceConcept = Optional[str]
UNKNOWN: ReferenceConcept = None
UNREACHABLE: Optional[int] = None

KINDS = ("concept", "instance")
RESERVED_IDS = frozenset({"?", ""})


@dataclass(frozen=True)
class ConceptNode:
    node_id: str
    label: str
    kind: str = "concept"


class CandidateCost(NamedTuple):
    node_id: str
    cost: int
    max_distance: int


@dataclass(eq=False)
class ConceptGraph:
    nodes: dict = field(default_factory=dict)
    edges: list = field(default_factory=list)
    term_senses: dict = field(default_factory=dict)

    def __post_init__(self):
        self._adjacency = {node_id: set() for node_id in self.nodes}
        self._outgoing = {node_id: set() for node_id in self.nodes}
        for src, _, dst in self.edges:
            if src not in self.nodes or dst not in self.nodes:
                raise DanglingReference(f"edge {src!r} -> {dst!r} references a missing node")
            self._adjacency[src].add(dst)
            self._adjacency[dst].add(src)
            self._outgoing[src].add(dst)
        for term, senses in self.term_senses.items():
            if not senses:
                raise ValueError(f"term {term!r} has an empty sense set")
            missing = [s for s in senses if s not in self.nodes]
            if missing:
                raise DanglingReference(f"sense of {term!r} references missing node {missing[0]!r}")
        self.term_senses = {t: frozenset(s) for t, s in self.term_senses.items()}
        self._bfs = lru_cache(maxsize=4096)(self._bfs_uncached)

    @classmethod
    def build(
        cls,
        nodes: Iterable[tuple] = (),
        edges: Iterable[tuple] = (),
        senses: Iterable[tuple] = (),
    ) -> "ConceptGraph":
        """Convenience constructor from ``(id, label, kind)``, ``(src, label, dst)``
        and ``(term, node_id)`` tuples."""
        node_map = {}
        for spec in nodes:
            node = ConceptNode(*spec)
            node_map[node.node_id] = node
        term_senses: dict = {}
        for term, node_id in senses:
            term_senses.setdefault(term, set()).add(node_id)
        return cls(node_map, list(edges), term_senses)

    def __contains__(self, node_id) -> bool:
        return node_id in self.nodes

    def __eq__(self, other) -> bool:
        if not isinstance(other, ConceptGraph):
            return NotImplemented
        return (
            self.nodes == other.nodes
            and sorted(self.edges) == sorted(other.edges)
            and self.term_senses == other.term_senses
        )

    def neighbors(self, node_id: str) -> set:
        return self._adjacency[node_id]

    def senses(self, term: str) -> frozenset:
        return self.term_senses.get(term, frozenset())

    def label(self, rc: ReferenceConcept) -> str:
        if rc is UNKNOWN:
            return "UNKNOWN"
        return self.nodes[rc].label

    def concept_ids(self) -> list:
        return sorted(n.node_id for n in self.nodes.values() if n.kind == "concept")

    def _bfs_uncached(self, source: str, directed: bool = False) -> dict:
        adjacency = self._outgoing if directed else self._adjacency
        dist = {source: 0}
        queue = deque([source])
        while queue:
            node = queue.popleft()
            for nxt in adjacency[node]:
                if nxt not in dist:
                    dist[nxt] = dist[node] + 1
                    queue.append(nxt)
        return dist

    def distances_from(self, node_id: str) -> dict:
        """Hop distances from ``node_id`` to every reachable node."""
        if node_id not in self.nodes:
            raise KeyError(node_id)
        return self._bfs(node_id)

    def ancestors_of(self, node_id: str) -> dict:
        """Hop distances following edges from source to destination only."""
        if node_id not in self.nodes:
            raise KeyError(node_id)
        return self._bfs(node_id, True)


def load_ontology(path) -> ConceptGraph:
    """Parse the TSV ontology format.

    Lines are ``node<TAB>id<TAB>label<TAB>kind``, ``edge<TAB>src<TAB>label<TAB>dst``
    or ``sense<TAB>term<TAB>node-id``. Blank lines and ``#`` comments are skipped.
    """
    nodes: dict = {}
    edges = []
    senses = []
    with open(Path(path), encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.rstrip("\r\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            parts = line.split("\t")
            tag = parts[0]
            if tag == "node":
                if len(parts) != 4:
                    raise ParseError("node line needs id, label and kind", lineno)
                _, node_id, label, kind = parts
                if node_id in RESERVED_IDS or not label:
                    raise ParseError(f"invalid node id or empty label for {node_id!r}", lineno)
                if kind not in KINDS:
                    raise ParseError(f"unknown node kind {kind!r}", lineno)
                if node_id in nodes:
                    raise ParseError(f"duplicate node id {node_id!r}", lineno)
                nodes[node_id] = ConceptNode(node_id, label, kind)
            elif tag == "edge":
                if len(parts) != 4:
                    raise ParseError("edge line needs src, label and dst", lineno)
                edges.append((parts[1], parts[2], parts[3], lineno))
            elif tag == "sense":
                if len(parts) != 3 or not parts[1]:
                    raise ParseError("sense line needs term and node id", lineno)
                senses.append((parts[1], parts[2], lineno))
            else:
                raise ParseError(f"unknown record type {tag!r}", lineno)

    for src, _, dst, lineno in edges:
        for end in (src, dst):
            if end not in nodes:
                raise DanglingReference(f"edge endpoint {end!r} is not a node", lineno)
    term_senses: dict = {}
    for term, node_id, lineno in senses:
        if node_id not in nodes:
            raise DanglingReference(f"sense target {node_id!r} is not a node", lineno)
        term_senses.setdefault(term, set()).add(node_id)
    return ConceptGraph(nodes, [(s, lbl, d) for s, lbl, d, _ in edges], term_senses)


def save_ontology(graph: ConceptGraph, path) -> None:
    with open(Path(path), "w", encoding="utf-8", newline="\n") as fh:
        for node in graph.nodes.values():
            fh.write(f"node\t{node.node_id}\t{node.label}\t{node.kind}\n")
        for src, label, dst in graph.edges:
            fh.write(f"edge\t{src}\t{label}\t{dst}\n")
        for term in sorted(graph.term_senses):
            for node_id in sorted(graph.term_senses[term]):
                fh.write(f"sense\t{term}\t{node_id}\n")


def hop_distance(g: ConceptGraph, a: str, b: str) -> Optional[int]:
    """Undirected unit-cost shortest path length, or ``UNREACHABLE`` (None)."""
    return g.distances_from(a).get(b, UNREACHABLE)


def _nearest_concept(g: ConceptGraph, node_id: str) -> ReferenceConcept:
    # ancestors along edge direction win; undirected distance is the fallback
    if g.nodes[node_id].kind == "concept":
        return node_id
    for dist in (g.ancestors_of(node_id), g.distances_from(node_id)):
        best = [(d, n) for n, d in dist.items() if g.nodes[n].kind == "concept"]
        if best:
            return min(best)[1]
    return UNKNOWN


def candidate_costs(g: ConceptGraph, terms: Sequence[str]) -> list:
    """Every reachable concept with its summed distance to the terms.

    Terms without senses are ignored. Sorted best-first with the same key
    that ``resolve_rc`` uses.
    """
    known = sorted({t for t in terms if g.senses(t)})
    if not known:
        return []
    per_term = []
    for term in known:
        maps = [g.distances_from(s) for s in sorted(g.senses(term))]
        per_term.append(maps)
    out = []
    for c in g.concept_ids():
        total = 0
        worst = 0
        for maps in per_term:
            ds = [m[c] for m in maps if c in m]
            if not ds:
                break
            d = min(ds)
            total += d
            worst = max(worst, d)
        else:
            out.append(CandidateCost(c, total, worst))
    out.sort(key=lambda cc: (cc.cost, cc.max_distance, cc.node_id))
    return out


def resolve_rc(g: ConceptGraph, terms: Sequence[str]) -> ReferenceConcept:
    """Reference Concept of a term set: the concept minimizing total hop distance.

    Ties go to the smaller maximum per-term distance, then the smallest node id.
    A lone unambiguous term maps to its nearest concept.
    """
    known = {t for t in terms if g.senses(t)}
    if not known:
        return UNKNOWN
    if len(known) == 1:
        (senses,) = [g.senses(t) for t in known]
        if len(senses) == 1:
            (only,) = senses
            return _nearest_concept(g, only)
    ranked = candidate_costs(g, list(known))
    return ranked[0].node_id if ranked else UNKNOWN


def related(g: ConceptGraph, rc1: ReferenceConcept, rc2: ReferenceConcept, h: int = 0) -> bool:
    if h < 0:
        raise ValueError("hop limit must be non-negative")
    if rc1 is UNKNOWN or rc2 is UNKNOWN:
        return False
    d = hop_distance(g, rc1, rc2)
    return d is not None and d <= h
