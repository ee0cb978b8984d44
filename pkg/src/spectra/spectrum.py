"""
Spec^fp(M): the fully prime submodules of a module, with per-point flags.
"""

import logging
from dataclasses import dataclass, field, replace
from typing import Any, Dict, List, Optional

from src.algebra.lattice import intersection_of
from src.algebra.module import FiniteModule
from src.algebra.presentation import quotient_module
from src.algebra.radicals import radicals
from src.algebra.submodule import Submodule
from src.homs.cogen import is_cogenerated_by
from src.homs.invariance import fully_invariant
from src.spectra.primes import is_fully_prime_in, is_prime_in

logger = logging.getLogger(__name__)


@dataclass
class SpectrumPoint:
    submodule: Submodule
    fully_prime: bool = True
    prime: bool = True
    b_prime_quotient: bool = False
    maximal: bool = False
    maximal_fi: bool = False
    minimal_in_spec: bool = False

    @property
    def id(self) -> int:
        return self.submodule.id

    def to_dict(self) -> Dict[str, Any]:
        return {
            "id": self.id,
            "elements": list(self.submodule.elements),
            "fully_prime": self.fully_prime,
            "prime": self.prime,
            "b_prime_quotient": self.b_prime_quotient,
            "maximal": self.maximal,
            "maximal_fi": self.maximal_fi,
            "minimal_in_spec": self.minimal_in_spec,
        }


@dataclass
class Spectrum:
    module: FiniteModule
    points: List[SpectrumPoint]
    rad_fp: Submodule
    fp_primeless: bool
    notes: List[str] = field(default_factory=list)

    @property
    def ids(self) -> List[int]:
        return [p.id for p in self.points]

    @property
    def submodules(self) -> List[Submodule]:
        return [p.submodule for p in self.points]

    def point(self, point_id: int) -> SpectrumPoint:
        for p in self.points:
            if p.id == point_id:
                return p
        raise KeyError(point_id)

    def __contains__(self, sub: Submodule) -> bool:
        return any(p.submodule == sub for p in self.points)

    def __len__(self):
        return len(self.points)

    def without(self, point_id: int) -> "Spectrum":
        """A copy with one point removed (rad_fp and minimality recomputed)."""
        points = [replace(p) for p in self.points if p.id != point_id]
        return spectrum_from_points(self.module, points, notes=self.notes + [f"removed point {point_id}"])

    def to_dict(self) -> Dict[str, Any]:
        return {
            "module": self.module.name,
            "points": [p.to_dict() for p in self.points],
            "rad_fp": list(self.rad_fp.elements),
            "fp_primeless": self.fp_primeless,
        }


def spectrum_from_points(module: FiniteModule, points: List[SpectrumPoint],
                         notes: Optional[List[str]] = None) -> Spectrum:
    """Assemble a Spectrum; ``minimal_in_spec`` and ``rad_fp`` are recomputed from the points."""
    points = sorted(points, key=lambda p: p.submodule.sort_key)
    for p in points:
        p.minimal_in_spec = not any(q.submodule < p.submodule for q in points)
    rad_fp = intersection_of(module, [p.submodule for p in points])
    return Spectrum(module, points, rad_fp, not points, list(notes or []))


def b_prime_quotient(sub: Submodule) -> bool:
    """M/K is cogenerated by each of its non-zero fully invariant submodules."""
    quotient, _ = quotient_module(sub.parent, sub)
    return all(is_cogenerated_by(quotient, k) for k in fully_invariant(quotient).fi_list[1:])


def _spec_fp(module: FiniteModule) -> Spectrum:
    fi = fully_invariant(module).fi_list
    max_list = radicals(module).max_list
    proper_fi = fi[:-1]
    maximal_fi = [k for k in proper_fi if not any(k < other for other in proper_fi)]

    points = []
    for k in proper_fi:
        if not is_fully_prime_in(k):
            continue
        points.append(SpectrumPoint(
            submodule=k,
            fully_prime=True,
            prime=is_prime_in(k),
            b_prime_quotient=b_prime_quotient(k),
            maximal=k in max_list,
            maximal_fi=k in maximal_fi,
        ))
    spectrum = spectrum_from_points(module, points)
    if spectrum.fp_primeless:
        logger.warning(f"{module.name} is fp-primeless")
    logger.info(f"Spec^fp({module.name}) has {len(points)} points")
    return spectrum


def spec_fp(module: FiniteModule) -> Spectrum:
    return module.cached("spectrum", lambda: _spec_fp(module))
