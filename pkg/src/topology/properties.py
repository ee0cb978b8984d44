"""
Separation, connectedness and irreducibility properties of a finite space.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Iterable, List, Optional

from src.algebra.lattice import cyclic_submodule
from src.spectra.varieties import variety
from src.topology.space import FiniteTopology, PointSet
from src.utils.errors import EmptySpaceError

logger = logging.getLogger(__name__)


def minimal_open(topology: FiniteTopology, point: int) -> PointSet:
    """Smallest open set containing the point."""
    result = topology.whole
    for c in topology.closed_sets:
        if point not in c:
            result = result - c
    return result


def point_closure(topology: FiniteTopology, point: int) -> PointSet:
    return topology.smallest_closed_superset([point])


def is_t0(topology: FiniteTopology) -> bool:
    closures = [point_closure(topology, x) for x in topology.points]
    return len(set(closures)) == len(closures)


def is_t1(topology: FiniteTopology) -> bool:
    return all(topology.is_closed([x]) for x in topology.points)


def is_t2(topology: FiniteTopology) -> bool:
    opens = {x: minimal_open(topology, x) for x in topology.points}
    return all(not (opens[x] & opens[y]) for x, y in combinations(topology.points, 2))


def is_discrete(topology: FiniteTopology) -> bool:
    return all(topology.is_open([x]) for x in topology.points)


def is_connected(topology: FiniteTopology) -> bool:
    """No proper non-empty subset is both open and closed."""
    return not any(c and c != topology.whole and topology.is_open(c) for c in topology.closed_sets)


def is_ultraconnected(topology: FiniteTopology) -> bool:
    """Any two non-empty closed sets meet.

    Raises:
        EmptySpaceError: on the empty space
    """
    if not topology.points:
        raise EmptySpaceError("ultraconnectedness is defined for non-empty spaces")
    nonempty = [c for c in topology.closed_sets if c]
    return all(a & b for a, b in combinations(nonempty, 2))


def is_irreducible_closed(topology: FiniteTopology, closed: PointSet) -> bool:
    """A non-empty closed set that is not the union of two proper closed subsets."""
    if not closed:
        return False
    inner = [c for c in topology.closed_sets if c < closed]
    return not any(a | b == closed for a in inner for b in inner)


def is_irreducible(topology: FiniteTopology) -> bool:
    """Raises EmptySpaceError on the empty space."""
    if not topology.points:
        raise EmptySpaceError("irreducibility is defined for non-empty spaces")
    return is_irreducible_closed(topology, topology.whole)


def generic_points(topology: FiniteTopology, closed: PointSet) -> List[int]:
    """Points whose closure is the given closed set."""
    return [x for x in sorted(closed) if point_closure(topology, x) == closed]


def is_sober(topology: FiniteTopology) -> bool:
    return all(len(generic_points(topology, c)) == 1
               for c in topology.closed_sets if is_irreducible_closed(topology, c))


def subspace_closed_sets(topology: FiniteTopology, subset: Iterable[int]) -> List[PointSet]:
    subset = frozenset(subset)
    return sorted({c & subset for c in topology.closed_sets}, key=lambda s: (len(s), sorted(s)))


def is_irreducible_subset(topology: FiniteTopology, subset: Iterable[int]) -> bool:
    """Irreducibility of a subset in the subspace topology."""
    subset = frozenset(subset)
    if not subset:
        return False
    inner = [c for c in subspace_closed_sets(topology, subset) if c != subset]
    return not any(a | b == subset for a in inner for b in inner)


def is_connected_subset(topology: FiniteTopology, subset: Iterable[int]) -> bool:
    """Connectedness of a subset in the subspace topology."""
    subset = frozenset(subset)
    closed = set(subspace_closed_sets(topology, subset))
    return not any(c and c != subset and (subset - c) in closed for c in closed)


def basis_check(topology: FiniteTopology) -> Optional[bool]:
    """Every open set is a union of the sets X^fp(Rm), m in M."""
    if topology.module is None or topology.spectrum is None:
        return None
    module = topology.module
    basis = {variety(cyclic_submodule(module, m), topology.spectrum).X for m in range(module.order)}
    for open_set in topology.open_sets():
        covered = frozenset().union(*[b for b in basis if b <= open_set])
        if covered != open_set:
            return False
    return True


@dataclass
class TopologyProperties:
    t0: bool
    t1: bool
    t2: bool
    irreducible: Optional[bool]
    connected: bool
    ultraconnected: Optional[bool]
    sober: bool
    discrete: bool
    noetherian: bool
    compact: bool
    basis_check: Optional[bool]
    generic_points: Dict[str, List[int]] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "T0": self.t0, "T1": self.t1, "T2": self.t2,
            "irreducible": self.irreducible, "connected": self.connected,
            "ultraconnected": self.ultraconnected, "sober": self.sober,
            "discrete": self.discrete, "noetherian": self.noetherian, "compact": self.compact,
            "basis_check": self.basis_check, "generic_points": self.generic_points,
            "notes": self.notes,
        }


def properties(topology: FiniteTopology) -> TopologyProperties:
    """All properties at once; irreducible/ultraconnected are None on the empty space.

    Raises:
        NotATopologyError: when the family is not a topology
    """
    topology.require_topology()
    notes = []
    try:
        irreducible = is_irreducible(topology)
        ultraconnected = is_ultraconnected(topology)
    except EmptySpaceError as e:
        irreducible = ultraconnected = None
        notes.append(f"EmptySpace: {e}")
    generic = {",".join(str(x) for x in sorted(c)): generic_points(topology, c)
               for c in topology.closed_sets if is_irreducible_closed(topology, c)}
    return TopologyProperties(
        t0=is_t0(topology),
        t1=is_t1(topology),
        t2=is_t2(topology),
        irreducible=irreducible,
        connected=is_connected(topology),
        ultraconnected=ultraconnected,
        sober=is_sober(topology),
        discrete=is_discrete(topology),
        noetherian=True,
        compact=True,
        basis_check=basis_check(topology),
        generic_points=generic,
        notes=notes,
    )
