"""Serialization: canonical JSON, JSON lines, DOT and plain tables."""

from __future__ import annotations

import json
from collections.abc import Iterable

from .semigroup import NumericalSemigroup
from .trees import TreeNode

__all__ = ["to_json", "nodes_to_jsonl", "nodes_to_dot", "semigroups_to_table", "nodes_to_table"]


def to_json(obj, indent: int | None = None) -> str:
    if hasattr(obj, "to_dict"):
        obj = obj.to_dict()
    elif isinstance(obj, list):
        obj = [o.to_dict() if hasattr(o, "to_dict") else o for o in obj]
    return json.dumps(obj, indent=indent, ensure_ascii=False)


def nodes_to_jsonl(nodes: Iterable[TreeNode]) -> str:
    return "".join(json.dumps(node.to_dict(), ensure_ascii=False) + "\n" for node in nodes)


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def nodes_to_dot(nodes: Iterable[TreeNode], name: str = "tree") -> str:
    """DOT digraph: one node per semigroup, edges son -> parent labelled with
    the removed element. Parents must precede their sons in ``nodes``."""
    ids: dict[NumericalSemigroup, str] = {}
    lines = [f"digraph {_quote(name)} {{", "  rankdir=BT;"]
    edges = []
    for node in nodes:
        key = f"n{len(ids)}"
        ids[node.semigroup] = key
        lines.append(f"  {key} [label={_quote(str(node.semigroup))}];")
        if node.parent is not None:
            edges.append(f"  {key} -> {ids[node.parent]} [label={_quote(str(node.removed))}];")
    lines.extend(edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


def semigroups_to_table(semigroups: Iterable[NumericalSemigroup]) -> str:
    header = ("msg", "m", "F", "g", "e", "C")
    rows = [
        (str(S), str(S.multiplicity), str(S.frobenius), str(S.genus),
         str(S.embedding_dimension), str(S.concentration))
        for S in semigroups
    ]
    return _table(header, rows)


def nodes_to_table(nodes: Iterable[TreeNode]) -> str:
    header = ("depth", "removed", "msg", "F", "g")
    rows = [
        (str(n.depth), "-" if n.removed is None else str(n.removed), str(n.semigroup),
         str(n.semigroup.frobenius), str(n.semigroup.genus))
        for n in nodes
    ]
    return _table(header, rows)


def _table(header, rows) -> str:
    widths = [max(len(r[i]) for r in [header, *rows]) for i in range(len(header))]
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    out = [fmt.format(*header).rstrip()]
    out.extend(fmt.format(*r).rstrip() for r in rows)
    return "\n".join(out) + "\n"
