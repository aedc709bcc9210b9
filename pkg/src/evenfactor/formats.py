"""Edge-list text and DOT serialization for graphs.

Edge-list format: first line ``n m``, then m lines ``u v`` with 0-based,
whitespace-separated vertex ids.  DOT output declares every vertex so that
isolated vertices survive a round trip.
"""

from __future__ import annotations

import re

from .graph import Graph, build_graph


def to_edge_list_text(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def from_edge_list_text(text: str) -> Graph:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ValueError(f"header must be two integers, got {lines[0]!r}") from None
    if len(lines) - 1 != m:
        raise ValueError(f"header declares {m} edges but {len(lines) - 1} lines follow")
    edges = []
    for ln_no, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"line {ln_no}: expected 'u v', got {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ValueError(f"line {ln_no}: expected integers, got {ln!r}") from None
    return build_graph(n, edges)


def to_dot(g: Graph, name: str = "G", header: str | None = None) -> str:
    lines = []
    if header is not None:
        lines.append(f"// {header}")
    lines.append(f"graph {name} {{")
    for v in range(g.n):
        lines.append(f"  {v};")
    for u, v in g.sorted_edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


_DOT_EDGE = re.compile(r"^(\d+)\s*--\s*(\d+);?$")
_DOT_NODE = re.compile(r"^(\d+);?$")


def from_dot(text: str) -> Graph:
    """Parse DOT produced by :func:`to_dot` (plain integer nodes only)."""
    nodes: set[int] = set()
    edges: list[tuple[int, int]] = []
    for raw in text.splitlines():
        ln = raw.strip()
        if not ln or ln.startswith("//") or ln.startswith("graph ") or ln == "}":
            continue
        m = _DOT_EDGE.match(ln)
        if m:
            u, v = int(m.group(1)), int(m.group(2))
            nodes.update((u, v))
            edges.append((u, v))
            continue
        m = _DOT_NODE.match(ln)
        if m:
            nodes.add(int(m.group(1)))
            continue
        raise ValueError(f"unrecognized DOT line: {raw!r}")
    n = max(nodes) + 1 if nodes else 0
    return build_graph(n, edges)
