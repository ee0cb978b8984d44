"""
Irreducible closed sets, their generic points and the irreducible components.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from src.homs.invariance import fully_invariant
from src.spectra.primes import is_fully_prime_in
from src.spectra.varieties import variety
from src.topology.properties import generic_points, is_irreducible_closed
from src.topology.space import FiniteTopology, PointSet, core
from src.utils.errors import ConsistencyError

logger = logging.getLogger(__name__)


@dataclass
class IrreducibleSets:
    closed_irreducibles: List[Tuple[PointSet, List[int]]]
    components: List[PointSet]
    criterion: Optional[List[PointSet]]
    criterion_agrees: Optional[bool]

    def to_dict(self) -> dict:
        return {
            "closed_irreducibles": [{"points": sorted(c), "generic": g} for c, g in self.closed_irreducibles],
            "components": [sorted(c) for c in self.components],
            "criterion_agrees": self.criterion_agrees,
        }


def criterion_irreducibles(topology: FiniteTopology) -> List[PointSet]:
    """Non-empty closed sets whose intersection of points is fully prime."""
    found = []
    for c in topology.closed_sets:
        if not c:
            continue
        k = core(topology, c)
        if not k.is_whole and is_fully_prime_in(k):
            found.append(c)
    return found


def irreducible_sets(topology: FiniteTopology) -> IrreducibleSets:
    """Closed irreducible sets by brute force, plus the fully-prime criterion on duo modules.

    On duo modules the closed irreducibles are exactly the V^fp(K) and the components
    the V^fp(K) of minimal points.

    Raises:
        NotATopologyError: when the family is not a topology
        ConsistencyError: when brute force and criterion disagree on a duo module
    """
    topology.require_topology()
    brute = [c for c in topology.closed_sets if is_irreducible_closed(topology, c)]
    closed_irreducibles = [(c, generic_points(topology, c)) for c in brute]
    components = [c for c in brute if not any(c < other for other in brute)]

    criterion = None
    agrees = None
    module = topology.module
    if module is not None and fully_invariant(module).is_duo:
        criterion = criterion_irreducibles(topology)
        agrees = set(criterion) == set(brute)
        if not agrees:
            raise ConsistencyError(f"irreducible closed sets of Spec^fp({module.name}) disagree with the criterion",
                                   witness={"brute_force": [sorted(c) for c in brute],
                                            "criterion": [sorted(c) for c in criterion]})
        points = topology.spectrum.points
        by_point = {variety(p.submodule, topology.spectrum).V for p in points}
        by_minimal = {variety(p.submodule, topology.spectrum).V for p in points if p.minimal_in_spec}
        if by_point != set(brute) or by_minimal != set(components):
            raise ConsistencyError(f"irreducible closed sets of Spec^fp({module.name}) do not match its points",
                                   witness={"brute_force": [sorted(c) for c in brute],
                                            "components": [sorted(c) for c in components]})
    return IrreducibleSets(closed_irreducibles, components, criterion, agrees)
