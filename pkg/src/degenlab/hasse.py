"""Hasse diagrams of finite posets, with JSON and Graphviz DOT output.

Edges point from the upper element to the lower one: ``(u, v)`` means
``u`` degenerates to ``v`` in one cover step.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

import networkx as nx


@dataclass
class HasseDiagram:
    nodes: list
    edges: list[tuple[int, int]]
    labels: list[str] = field(default_factory=list)

    def __post_init__(self):
        if not self.labels:
            self.labels = [str(v) for v in self.nodes]
        if len(self.labels) != len(self.nodes):
            raise ValueError("one label per node required")

    @classmethod
    def from_order(
        cls,
        nodes: Sequence,
        leq: Callable[[Any, Any], bool],
        labels: Sequence[str] | None = None,
    ) -> "HasseDiagram":
        """Build the diagram of ``nodes`` under ``leq(upper, lower)``.

        ``leq`` must be a partial order on ``nodes``; the edge set is its
        transitive reduction.
        """
        nodes = list(nodes)
        g = nx.DiGraph()
        g.add_nodes_from(range(len(nodes)))
        for a, u in enumerate(nodes):
            for b, v in enumerate(nodes):
                if a != b and leq(u, v):
                    g.add_edge(a, b)
        if not nx.is_directed_acyclic_graph(g):
            raise ValueError("relation is not antisymmetric on the given nodes")
        red = nx.transitive_reduction(g)
        edges = sorted(red.edges())
        return cls(nodes, edges, list(labels) if labels is not None else [])

    def graph(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(range(len(self.nodes)))
        g.add_edges_from(self.edges)
        return g

    def components(self) -> list[list[int]]:
        """Connected components as sorted node-index lists, in node order."""
        comps = [sorted(c) for c in nx.weakly_connected_components(self.graph())]
        return sorted(comps)

    def covers(self, k: int) -> list[int]:
        """Indices of nodes covered by node ``k``."""
        return [b for a, b in self.edges if a == k]

    def labelled_edges(self) -> set[tuple[str, str]]:
        return {(self.labels[a], self.labels[b]) for a, b in self.edges}

    def to_json(self, encode: Callable[[Any], Any] | None = None) -> dict:
        encode = encode or _default_encode
        return {
            "nodes": [encode(v) for v in self.nodes],
            "edges": [list(e) for e in self.edges],
            "labels": list(self.labels),
        }

    def dumps(self, encode: Callable[[Any], Any] | None = None) -> str:
        return json.dumps(self.to_json(encode))

    def to_dot(self, name: str = "hasse") -> str:
        """Directed DOT graph with one cluster subgraph per component."""
        lines = [f"digraph {name} {{", "  rankdir=TB;"]
        for c, comp in enumerate(self.components()):
            lines.append(f"  subgraph cluster_{c} {{")
            lines.append('    style=invis;')
            for k in comp:
                lines.append(f"    n{k} [label={_quote(self.labels[k])}];")
            members = set(comp)
            for a, b in self.edges:
                if a in members:
                    lines.append(f"    n{a} -> n{b};")
            lines.append("  }")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _default_encode(v):
    if hasattr(v, "to_json"):
        return v.to_json()
    return str(v)


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'
