"""
Max, Rad and Soc of a module, and the essential / superfluous position of a submodule.
"""

import logging
from dataclasses import dataclass
from typing import List

from src.algebra.lattice import (
    enumerate_submodules,
    intersection_of,
    lattice_tables,
    maximal_submodules,
    simple_submodules,
    sum_of,
)
from src.algebra.submodule import Submodule
from src.utils.errors import ConsistencyError

logger = logging.getLogger(__name__)


@dataclass
class Radicals:
    max_list: List[Submodule]
    rad: Submodule
    soc: Submodule


@dataclass
class Position:
    essential: bool
    superfluous: bool


def position_predicates(sub: Submodule) -> Position:
    """Essential: meets every non-zero submodule non-trivially.
    Superfluous: L + L' != M for every proper L'."""
    module = sub.parent
    tables = lattice_tables(module)
    i = sub.id
    n = tables.size
    whole = n - 1
    essential = all(tables.meet[i, j] != 0 for j in range(1, n))
    superfluous = all(tables.join[i, j] != whole for j in range(whole))
    return Position(essential, superfluous)


def _radicals(module) -> Radicals:
    subs = enumerate_submodules(module)
    max_list = maximal_submodules(module)
    if not max_list:
        raise ConsistencyError(f"{module.name} has no maximal submodule")
    rad = intersection_of(module, max_list)
    soc = sum_of(module, simple_submodules(module))

    positions = [position_predicates(s) for s in subs]
    superfluous_sum = sum_of(module, [s for s, p in zip(subs, positions) if p.superfluous])
    essential_meet = intersection_of(module, [s for s, p in zip(subs, positions) if p.essential])
    if superfluous_sum != rad:
        raise ConsistencyError(f"Rad({module.name}) differs from the sum of superfluous submodules",
                               witness={"rad": rad.elements, "superfluous_sum": superfluous_sum.elements})
    if essential_meet != soc:
        raise ConsistencyError(f"Soc({module.name}) differs from the intersection of essential submodules",
                               witness={"soc": soc.elements, "essential_meet": essential_meet.elements})
    logger.debug(f"{module.name}: {len(max_list)} maximal, Rad={rad.label}, Soc={soc.label}")
    return Radicals(max_list, rad, soc)


def radicals(module) -> Radicals:
    """Maximal submodules, radical and socle, cross-checked against the dual characterisations."""
    return module.cached("radicals", lambda: _radicals(module))
