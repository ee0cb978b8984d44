"""
Specialization order of a finite space and local finiteness of families of subsets.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional

import networkx as nx

from src.topology.properties import minimal_open, point_closure
from src.topology.space import FiniteTopology, PointSet
from src.utils.errors import ConsistencyError

logger = logging.getLogger(__name__)


@dataclass(eq=False)
class SpecializationOrder:
    """Edge a -> b when b lies in the closure of {a}; ``hasse`` is its transitive reduction."""

    graph: nx.DiGraph
    hasse: nx.DiGraph

    def edges(self) -> List[tuple]:
        return sorted(self.graph.edges())

    def hasse_edges(self) -> List[tuple]:
        return sorted(self.hasse.edges())


def specialization_order(topology: FiniteTopology) -> SpecializationOrder:
    """Order from closures of singletons, checked against submodule containment.

    Raises:
        NotATopologyError: when the family is not a topology
        ConsistencyError: when the order differs from containment of the points
    """
    topology.require_topology()
    graph = nx.DiGraph()
    graph.add_nodes_from(topology.points)
    for a in topology.points:
        for b in point_closure(topology, a):
            if b != a:
                graph.add_edge(a, b)

    if topology.spectrum is not None:
        subs = {p.id: p.submodule for p in topology.spectrum.points}
        for a in topology.points:
            for b in topology.points:
                if a != b and graph.has_edge(a, b) != (subs[a] <= subs[b]):
                    raise ConsistencyError("specialization order differs from containment",
                                           witness={"from": a, "to": b})

    if not nx.is_directed_acyclic_graph(graph):
        raise ConsistencyError("specialization order has a cycle (space is not T0)")
    hasse = nx.transitive_reduction(graph)
    hasse.add_nodes_from(graph.nodes())
    return SpecializationOrder(graph, hasse)


@dataclass
class LocalFiniteness:
    value: bool
    neighbourhoods: Dict[int, PointSet]
    hits: Dict[int, int]
    bound: int
    offenders: List[int]


def is_locally_finite(topology: FiniteTopology, family: Iterable[Iterable[int]],
                      bound: Optional[int] = None) -> LocalFiniteness:
    """Each point's smallest open neighbourhood meets at most ``bound`` members of the family.

    Without a bound only finiteness is asked, which every finite family satisfies; the
    answer then rests on the witness neighbourhoods and hit counts.
    """
    topology.require_topology()
    members = [frozenset(g) for g in family]
    limit = len(members) if bound is None else bound
    neighbourhoods = {x: minimal_open(topology, x) for x in topology.points}
    hits = {x: sum(1 for g in members if g & u) for x, u in neighbourhoods.items()}
    offenders = [x for x, h in hits.items() if h > limit]
    if offenders:
        logger.debug(f"neighbourhoods of {offenders} meet more than {limit} members")
    return LocalFiniteness(not offenders, neighbourhoods, hits, limit, offenders)
