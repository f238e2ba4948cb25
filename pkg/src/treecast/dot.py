"""Graphviz DOT rendering of trees with broadcast powers / cover tokens."""

from __future__ import annotations

from .model import Broadcast, TokenSet
from .tree import Tree


def tree_to_dot(
    tree: Tree,
    broadcast: Broadcast | None = None,
    tokens: TokenSet | None = None,
    name: str = "T",
) -> str:
    """Undirected DOT text. Broadcasters are labelled with their power and
    drawn bold; token vertices are drawn as filled squares; everything else
    is a small labelled circle."""
    tok = tokens.vertices if tokens is not None else frozenset()
    lines = [f"graph {name} {{"]
    lines.append('  node [shape=circle, fontsize=10, width=0.3, fixedsize=false];')
    for v in range(tree.n):
        attrs = []
        p = broadcast.powers[v] if broadcast is not None else 0
        if p > 0:
            attrs.append(f'label="{v}:{p}"')
            attrs.append("style=bold")
            attrs.append("penwidth=2")
        else:
            attrs.append(f'label="{v}"')
        if v in tok:
            attrs.append("shape=square")
            attrs.append('style=filled')
            attrs.append('fillcolor=lightgray')
        lines.append(f"  n{v} [{', '.join(attrs)}];")
    for u, v in tree.edges():
        lines.append(f"  n{u} -- n{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
