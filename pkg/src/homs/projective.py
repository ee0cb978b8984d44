"""
Self-projectivity: every map M -> M/L lifts through the projection M -> M/L.
"""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from src.algebra.lattice import enumerate_submodules
from src.algebra.module import FiniteModule
from src.algebra.presentation import quotient_module
from src.homs.hom import hom_group, matrix_of, subgroup_order

logger = logging.getLogger(__name__)


@dataclass
class LiftFailure:
    """A proper submodule L for which some g: M -> M/L has no lift."""

    submodule_id: int
    liftable: int
    total: int


def lift_failure(module: FiniteModule) -> Optional[LiftFailure]:
    """First L (canonical order) where {pi o f : f in End(M)} is a proper subgroup of Hom(M, M/L).

    The composites form a subgroup, so comparing its order against |Hom(M, M/L)|
    decides whether every g lifts.
    """
    end = hom_group(module, module)
    for sub in enumerate_submodules(module)[1:-1]:
        quotient, projection = quotient_module(module, sub)
        total = hom_group(module, quotient).group_order
        composites = [matrix_of(projection.image[t], module, quotient) for t in end.generator_tables()]
        liftable = subgroup_order(composites, module.group.rank, quotient.group.dims)
        if liftable != total:
            logger.debug(f"{module.name}: maps to {quotient.name} do not all lift ({liftable} of {total})")
            return LiftFailure(sub.id, liftable, total)
    return None


def is_self_projective(module: FiniteModule) -> bool:
    return module.cached("self_projective", lambda: lift_failure(module) is None)


def is_self_projective_bruteforce(module: FiniteModule) -> bool:
    """Oracle: exhaustive lift search over enumerated Hom sets."""
    end_tables = hom_group(module, module).element_tables()
    for sub in enumerate_submodules(module)[1:-1]:
        quotient, projection = quotient_module(module, sub)
        lifted = {tuple(projection.image[t].tolist()) for t in end_tables}
        for g in hom_group(module, quotient).element_tables():
            if tuple(np.asarray(g).tolist()) not in lifted:
                return False
    return True
