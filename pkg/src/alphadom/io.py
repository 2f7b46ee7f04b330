"""File formats: edge lists, weight tables, JSON bundles, and solution files.

The native on-disk shape is a plain-text edge list (two whitespace-separated
labels per line) plus a separate weight table (label and positive integer per
line).  When a weight table is given it defines the vertex universe and the
index order: vertices listed only there become isolated vertices, and an edge
endpoint missing from the table is an error, never a silent default.  Without
a weight table, vertices are the edge-list labels in order of first
appearance and all weights are 1.
"""
from __future__ import annotations

import json
from pathlib import Path

from .graph import DominatingSet, WeightedGraph


class IngestError(ValueError):
    """Malformed or inconsistent input file; carries file and line context."""

    def __init__(self, path, lineno: int | None, message: str):
        where = f"{path}:{lineno}: " if lineno is not None else f"{path}: "
        super().__init__(where + message)
        self.path = str(path)
        self.lineno = lineno


def _read_weight_table(path) -> tuple[list[str], dict[str, int]]:
    labels: list[str] = []
    weights: dict[str, int] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise IngestError(path, lineno, f"expected 'label weight', got {line!r}")
            label, text = parts
            try:
                w = int(text)
            except ValueError:
                raise IngestError(path, lineno, f"weight {text!r} is not an integer") from None
            if w < 1:
                raise IngestError(path, lineno, f"non-positive weight {w} for {label!r}")
            if label in weights:
                raise IngestError(path, lineno, f"duplicate weight entry for {label!r}")
            labels.append(label)
            weights[label] = w
    return labels, weights


def ingest_graph(edge_path, weight_path=None) -> WeightedGraph:
    """Build a weighted graph from an edge list and an optional weight table.

    Duplicate edge lines collapse to one edge; self-loops and malformed lines
    abort with the offending line number.
    """
    if weight_path is not None:
        labels, weight_of = _read_weight_table(weight_path)
        index = {s: i for i, s in enumerate(labels)}
        known = True
    else:
        labels, weight_of = [], {}
        index = {}
        known = False

    edges: set[tuple[int, int]] = set()
    with open(edge_path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise IngestError(edge_path, lineno, f"expected 'label label', got {line!r}")
            a, b = parts
            if a == b:
                raise IngestError(edge_path, lineno, f"self-loop at {a!r}")
            for s in (a, b):
                if s not in index:
                    if known:
                        raise IngestError(edge_path, lineno,
                                          f"label {s!r} has no weight entry")
                    index[s] = len(labels)
                    labels.append(s)
            u, v = index[a], index[b]
            edges.add((u, v) if u < v else (v, u))

    weights = [weight_of.get(s, 1) for s in labels]
    return WeightedGraph.from_edges(len(labels), edges, weights, labels)


def write_edge_list(g: WeightedGraph, path) -> None:
    """One edge per line, ascending (u, v) order, using the graph's labels."""
    with open(path, "w", encoding="utf-8") as fh:
        for u, v in g.edges():
            fh.write(f"{g.label_of(u)} {g.label_of(v)}\n")


def write_weight_table(g: WeightedGraph, path) -> None:
    """Every vertex in index order, so a re-ingest reproduces the same indexing."""
    with open(path, "w", encoding="utf-8") as fh:
        for v in range(g.n):
            fh.write(f"{g.label_of(v)} {g.weights[v]}\n")


def write_graph_bundle(g: WeightedGraph, path) -> None:
    """Self-contained JSON fixture: vertex count, edges, weights, labels."""
    payload = {
        "n": g.n,
        "edges": [[u, v] for u, v in g.edges()],
        "weights": list(g.weights),
        "labels": list(g.labels) if g.labels is not None else None,
    }
    Path(path).write_text(json.dumps(payload, indent=1) + "\n", encoding="utf-8")


def read_graph_bundle(path) -> WeightedGraph:
    try:
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
        return WeightedGraph.from_edges(
            int(payload["n"]),
            [(int(u), int(v)) for u, v in payload["edges"]],
            payload["weights"],
            payload.get("labels"),
        )
    except IngestError:
        raise
    except (KeyError, TypeError, ValueError, json.JSONDecodeError) as exc:
        raise IngestError(path, None, f"bad graph bundle: {exc}") from exc


def write_solution(g: WeightedGraph, solution: DominatingSet, path) -> None:
    """One member label per line, ascending index order."""
    with open(path, "w", encoding="utf-8") as fh:
        for v in solution.as_sorted_tuple():
            fh.write(f"{g.label_of(v)}\n")


def read_solution(g: WeightedGraph, path) -> DominatingSet:
    members = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            label = raw.strip()
            if not label:
                continue
            try:
                members.append(g.index_of(label))
            except KeyError:
                raise IngestError(path, lineno, f"unknown vertex label {label!r}") from None
    return DominatingSet.from_members(g, members)
