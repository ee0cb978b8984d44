"""
Finite topological spaces on spectra, given extensionally by their closed sets.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

from src.algebra.ideals import two_sided_ideals
from src.algebra.lattice import enumerate_submodules, intersection_of
from src.algebra.module import FiniteModule, regular_module
from src.algebra.ring import FiniteRing
from src.algebra.submodule import Submodule
from src.homs.invariance import fully_invariant
from src.spectra.ring_spectrum import ring_spectrum
from src.spectra.spectrum import Spectrum, spec_fp
from src.spectra.varieties import variety
from src.utils.errors import ConsistencyError, NotATopologyError

logger = logging.getLogger(__name__)

VARIANTS = ("full", "fi")
PointSet = FrozenSet[int]


def _ordered(sets: Iterable[PointSet]) -> Tuple[PointSet, ...]:
    return tuple(sorted(set(sets), key=lambda s: (len(s), sorted(s))))


@dataclass(eq=False)
class FiniteTopology:
    """Points are submodule ids; ``preimages`` maps each closed set to the ids of the
    submodules (or ideals) whose variety it is."""

    points: Tuple[int, ...]
    closed_sets: Tuple[PointSet, ...]
    variant: str
    is_topology: bool
    witness: Optional[Tuple[PointSet, PointSet]] = None
    preimages: Dict[PointSet, List[int]] = field(default_factory=dict)
    spectrum: Optional[Spectrum] = None
    module: Optional[FiniteModule] = None

    @property
    def whole(self) -> PointSet:
        return frozenset(self.points)

    def require_topology(self):
        if not self.is_topology:
            raise NotATopologyError("closed-set family is not closed under finite unions",
                                    witness=[sorted(s) for s in self.witness] if self.witness else None)

    def is_closed(self, subset: Iterable[int]) -> bool:
        return frozenset(subset) in self._closed_lookup

    def is_open(self, subset: Iterable[int]) -> bool:
        return self.whole - frozenset(subset) in self._closed_lookup

    def open_sets(self) -> Tuple[PointSet, ...]:
        return _ordered(self.whole - c for c in self.closed_sets)

    def smallest_closed_superset(self, subset: Iterable[int]) -> PointSet:
        subset = frozenset(subset)
        result = self.whole
        for c in self.closed_sets:
            if subset <= c:
                result = result & c
        return result

    @property
    def _closed_lookup(self) -> FrozenSet[PointSet]:
        if "_lookup" not in self.__dict__:
            self.__dict__["_lookup"] = frozenset(self.closed_sets)
        return self.__dict__["_lookup"]

    def to_dict(self) -> dict:
        return {
            "points": list(self.points),
            "variant": self.variant,
            "closed_sets": [sorted(c) for c in self.closed_sets],
            "is_topology": self.is_topology,
            "witness": [sorted(s) for s in self.witness] if self.witness else None,
        }


def topology_from_family(points: Sequence[int], family: Dict[PointSet, List[int]], variant: str,
                         spectrum: Optional[Spectrum] = None,
                         module: Optional[FiniteModule] = None) -> FiniteTopology:
    """Assemble a FiniteTopology and decide whether the family is closed under unions.

    Raises:
        ConsistencyError: when the family misses the empty or full set or is not
            closed under intersections
    """
    whole = frozenset(points)
    closed = _ordered(family)
    lookup = frozenset(closed)
    if frozenset() not in lookup or whole not in lookup:
        raise ConsistencyError(f"{variant} family lacks the empty set or the whole space")

    witness = None
    for i, a in enumerate(closed):
        for b in closed[i:]:
            if a & b not in lookup:
                raise ConsistencyError("closed-set family is not closed under intersections",
                                       witness=[sorted(a), sorted(b)])
            if witness is None and a | b not in lookup:
                witness = (a, b)
    is_topology = witness is None
    if not is_topology:
        logger.debug(f"{variant} family is not a topology: {sorted(witness[0])} | {sorted(witness[1])}")
    preimages = {c: sorted(family[c]) for c in closed}
    return FiniteTopology(tuple(sorted(points)), closed, variant, is_topology, witness, preimages, spectrum, module)


def build_topology(source: Union[FiniteModule, Spectrum], variant: str = "full") -> FiniteTopology:
    """Closed sets V^fp(L) over all submodules (full) or the fully invariant ones (fi).

    ``source`` may be a precomputed (possibly edited) Spectrum instead of a module.
    """
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    spectrum = source if isinstance(source, Spectrum) else spec_fp(source)
    module = spectrum.module

    def build():
        subs = enumerate_submodules(module) if variant == "full" else fully_invariant(module).fi_list
        family: Dict[PointSet, List[int]] = {}
        for sub in subs:
            family.setdefault(variety(sub, spectrum).V, []).append(sub.id)
        topology = topology_from_family(spectrum.ids, family, variant, spectrum, module)
        if variant == "fi" and not topology.is_topology:
            logger.error(f"fully invariant family of {module.name} is not closed under unions")
        logger.info(f"{variant} topology on Spec^fp({module.name}): {len(topology.closed_sets)} closed sets")
        return topology

    if isinstance(source, Spectrum) and source is not spec_fp(module):
        return build()
    return module.cached(("topology", variant), build)


def core(topology: FiniteTopology, subset: Iterable[int]) -> Submodule:
    """Intersection of the points of a subset (the whole module for the empty set)."""
    wanted = frozenset(subset)
    return intersection_of(topology.module, [p.submodule for p in topology.spectrum.points if p.id in wanted])


def formula_closure(topology: FiniteTopology, subset: Iterable[int]) -> PointSet:
    """V^fp of the intersection of the given points."""
    return variety(core(topology, subset), topology.spectrum).V


def closure(topology: FiniteTopology, subset: Iterable[int]) -> PointSet:
    """Smallest closed superset, cross-checked against V^fp of the intersection of the points.

    Raises:
        NotATopologyError: when the family is not a topology
        ConsistencyError: when the two computations disagree
    """
    topology.require_topology()
    subset = frozenset(subset)
    result = topology.smallest_closed_superset(subset)
    if topology.spectrum is not None:
        expected = formula_closure(topology, subset)
        if expected != result:
            raise ConsistencyError("closure differs from the variety of the intersection",
                                   witness={"subset": sorted(subset), "closure": sorted(result),
                                            "variety": sorted(expected)})
    return result


def ring_topology(ring: FiniteRing) -> FiniteTopology:
    """Zariski topology on Spec(R): closed sets V(I) for two-sided ideals I.

    Points are the ids of the prime ideals in the lattice of the left regular module.
    """
    def build():
        regular = regular_module(ring)
        lookup = {s.elements: s.id for s in enumerate_submodules(regular)}
        primes = ring_spectrum(ring).spec
        points = [lookup[p.elements] for p in primes]
        family: Dict[PointSet, List[int]] = {}
        for ideal in two_sided_ideals(ring):
            closed = frozenset(lookup[p.elements] for p in primes if ideal <= p)
            family.setdefault(closed, []).append(lookup[ideal.elements])
        return topology_from_family(points, family, "ring")
    return ring.cached("ring_topology", build)
