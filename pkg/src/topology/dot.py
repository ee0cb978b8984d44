"""
Graphviz export of the Hasse diagram of a specialization order.

Render with e.g. ``dot -Tpng -O spectrum.gv``.
"""

import logging
from pathlib import Path
from typing import List

from src.topology.space import FiniteTopology
from src.topology.specialization import SpecializationOrder

logger = logging.getLogger(__name__)


def to_dot(order: SpecializationOrder, topology: FiniteTopology, name: str = "specialization") -> str:
    """Nodes are labelled by the element set of the point; maximal submodules are boxes."""
    lines: List[str] = []
    write_line = lines.append
    write_line(f'digraph "{name}" {{')
    write_line('\trankdir = BT;')
    points = {p.id: p for p in topology.spectrum.points} if topology.spectrum is not None else {}
    for node in sorted(order.hasse.nodes()):
        point = points.get(node)
        label = point.submodule.label if point is not None else str(node)
        shape = "box" if point is not None and point.maximal else "ellipse"
        write_line(f'\t"{node}" [label="{label}", shape = {shape}];')
    for a, b in order.hasse_edges():
        write_line(f'\t"{a}" -> "{b}";')
    write_line('}')
    return "\n".join(lines) + "\n"


def export_dot(order: SpecializationOrder, topology: FiniteTopology, file_name: str, name: str = "specialization"):
    path = Path(file_name)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(to_dot(order, topology, name), encoding="utf-8")
    logger.info(f"Wrote Hasse diagram to {path}")
