"""
Fully invariant submodules and the duo property.
"""

import logging
from dataclasses import dataclass
from typing import List

import numpy as np

from src.algebra.lattice import enumerate_submodules, lattice_tables
from src.algebra.module import FiniteModule
from src.algebra.submodule import Submodule
from src.homs.hom import hom_group

logger = logging.getLogger(__name__)


@dataclass
class FullyInvariant:
    fi_list: List[Submodule]
    is_duo: bool
    mask: np.ndarray


def invariance_maps(module: FiniteModule) -> List[np.ndarray]:
    """Value tables f.i.-ness is tested against.

    Every endomorphism when End fits under the cap, otherwise the additive
    generators (invariance under a generating set implies invariance under sums).
    """
    hom = hom_group(module, module)
    if hom.group_order <= module.config.end_cap:
        return hom.element_tables()
    logger.info(f"End({module.name}) has order {hom.group_order}; testing invariance on generators")
    return hom.generator_tables()


def _fully_invariant(module: FiniteModule) -> FullyInvariant:
    subs = enumerate_submodules(module)
    indicator = lattice_tables(module).indicator
    mask = np.ones(len(subs), dtype=bool)
    for table in invariance_maps(module):
        # S_i is stable under f when every m in S_i has f(m) in S_i
        moved = indicator & ~indicator[:, table]
        mask &= ~moved.any(axis=1)
    fi_list = [s for s, keep in zip(subs, mask) if keep]
    is_duo = bool(mask.all())
    logger.debug(f"{module.name}: {len(fi_list)} of {len(subs)} submodules fully invariant")
    return FullyInvariant(fi_list, is_duo, mask)


def fully_invariant(module: FiniteModule) -> FullyInvariant:
    return module.cached("fully_invariant", lambda: _fully_invariant(module))


def is_fully_invariant(sub: Submodule) -> bool:
    return bool(fully_invariant(sub.parent).mask[sub.id])


def fi_mask(module: FiniteModule) -> np.ndarray:
    return fully_invariant(module).mask
