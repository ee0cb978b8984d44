"""
The endomorphism ring S = End(_R M)^op as an explicit finite ring of value tables.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple

import numpy as np

from src.algebra.module import FiniteModule
from src.homs.hom import HomGroup, hom_group
from src.utils.errors import ConsistencyError

logger = logging.getLogger(__name__)


@dataclass(eq=False)
class EndRing:
    """Enumerated endomorphisms with addition and opposite composition.

    ``compose[a, b]`` is the index of the product a*b in S, i.e. the map
    m -> b(a(m)) (apply a first).
    """

    hom: HomGroup
    tables: List[np.ndarray]
    index: Dict[Tuple[int, ...], int]
    compose: np.ndarray
    add: np.ndarray
    identity: int
    zero: int

    @property
    def order(self) -> int:
        return len(self.tables)

    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.compose, self.compose.T))

    def is_associative(self) -> bool:
        c = self.compose
        return bool(np.array_equal(c[c[:, :, None], np.arange(self.order)[None, None, :]],
                                   c[np.arange(self.order)[:, None, None], c[None, :, :]]))


def _endo_ring(module: FiniteModule) -> EndRing:
    hom = hom_group(module, module)
    tables = hom.element_tables()
    index = {tuple(t.tolist()): i for i, t in enumerate(tables)}
    n = len(tables)
    stacked = np.stack(tables)

    compose = np.zeros((n, n), dtype=np.int64)
    add = np.zeros((n, n), dtype=np.int64)
    for a in range(n):
        # (m)(a*b) = b(a(m))
        composed = stacked[:, stacked[a]]
        summed = module.add[stacked[a][None, :], stacked]
        for b in range(n):
            compose[a, b] = index[tuple(composed[b].tolist())]
            add[a, b] = index[tuple(summed[b].tolist())]

    identity = index.get(tuple(range(module.order)))
    zero = index.get(tuple([0] * module.order))
    if identity is None or zero is None:
        raise ConsistencyError(f"End({module.name}) is missing the identity or zero map")
    logger.info(f"End({module.name}) has order {n}")
    return EndRing(hom, tables, index, compose, add, identity, zero)


def endo_ring(module: FiniteModule) -> EndRing:
    """End(M) with the opposite-composition multiplication.

    Raises:
        SizeCapError: when |Hom(M, M)| exceeds the endomorphism cap
    """
    return module.cached("endo_ring", lambda: _endo_ring(module))
