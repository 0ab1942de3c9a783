"""DOT and JSON export of crystal graphs."""

from __future__ import annotations

import json

from .core import Multicharge
from .fock import flotw_by_closure, fock_edges, format_multipartition
from .infinity import generate


def _label(x) -> str:
    s = str(x)
    return s if s else "∅"


def _dot(name: str, nodes, edges) -> str:
    index = {v: k for k, v in enumerate(nodes)}
    lines = [f"digraph {name} {{", "  rankdir=TB;", "  node [shape=box, fontname=monospace];"]
    for v, k in index.items():
        label = _label(v).replace('"', '\\"')
        lines.append(f'  n{k} [label="{label}"];')
    for src, dst, i in edges:
        lines.append(f'  n{index[src]} -> n{index[dst]} [label="{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _json(nodes, edges, **meta) -> str:
    return json.dumps({
        **meta,
        "nodes": [str(v) for v in nodes],
        "edges": [{"src": str(a), "dst": str(b), "i": i} for a, b, i in edges],
    }, indent=2, ensure_ascii=False)


def infinity_graph(e: int, max_rank: int, fmt: str = "dot") -> str:
    """``B_e(inf)`` up to ``max_rank``; edges only leave vertices below ``max_rank``."""
    g = generate(e, max_rank)
    if fmt == "dot":
        return _dot("B_infinity", g.vertices, g.edges)
    return _json(g.vertices, g.edges, e=e, kind="infty")


def fock_graph(v: Multicharge, max_rank: int, fmt: str = "dot") -> str:
    nodes = flotw_by_closure(v, max_rank)
    edges = fock_edges(v, max_rank)
    if fmt == "dot":
        return _dot("B_v", [format_multipartition(x) for x in nodes],
                    [(format_multipartition(a), format_multipartition(b), i) for a, b, i in edges])
    return _json([format_multipartition(x) for x in nodes],
                 [(format_multipartition(a), format_multipartition(b), i) for a, b, i in edges],
                 e=v.e, kind="fock", charge=list(v.values))
