"""
Export Hasse diagrams as Graphviz DOT.

Edges point from an element to the elements covering it and are drawn
bottom to top. An orthocomplement, when given, adds one dashed undirected
edge per pair {x, x⊥}. After writing ``logic.gv``:

    dot -Tpng -O logic.gv
"""
from typing import Iterable, Optional, Sequence, Tuple


def quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def hasse_diagram(
    name: str,
    labels: Sequence[str],
    covers: Iterable[Tuple[int, int]],
    ocompl: Optional[Sequence[int]] = None,
) -> str:
    """
    Args:
        name: Graph name
        labels: Node label per element index
        covers: Cover pairs (lower, upper)
        ocompl: Orthocomplement per element index, if any

    Returns:
        A ``digraph`` with one node per element, one edge per cover and one
        dashed edge per complementary pair
    """
    lines = [f"digraph {quote(name)} {{", "\trankdir=BT;", "\tnode [shape=box];"]
    for index, label in enumerate(labels):
        lines.append(f"\t{index} [label={quote(label)}];")
    for low, high in covers:
        lines.append(f"\t{low} -> {high};")
    if ocompl is not None:
        for x, y in enumerate(ocompl):
            if x < y:
                lines.append(f"\t{x} -> {y} [style=dashed, dir=none, constraint=false];")
    lines.append("}")
    return "\n".join(lines) + "\n"
