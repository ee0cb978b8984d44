"""
Cogeneration and generation of a module by another (finite criteria).
"""

import logging
from dataclasses import dataclass
from typing import Union

import numpy as np

from src.algebra.lattice import generated_submodule
from src.algebra.module import FiniteModule
from src.algebra.submodule import Submodule
from src.homs.hom import hom_group

logger = logging.getLogger(__name__)


@dataclass
class CogenGen:
    cogenerated: bool
    generated: bool


def common_kernel(module: FiniteModule, other: Union[FiniteModule, Submodule]) -> np.ndarray:
    """Elements of M killed by every f: M -> other (generators suffice)."""
    hom = hom_group(module, other)
    killed = np.ones(module.order, dtype=bool)
    for table in hom.generator_tables():
        killed &= table == 0
    return np.flatnonzero(killed)


def is_cogenerated_by(module: FiniteModule, other: Union[FiniteModule, Submodule]) -> bool:
    """M is cogenerated by ``other`` iff the kernels of all maps M -> other meet in 0."""
    return len(common_kernel(module, other)) == 1


def is_generated_by(module: FiniteModule, other: Union[FiniteModule, Submodule]) -> bool:
    """M is generated by ``other`` iff the images of all maps other -> M sum to M."""
    hom = hom_group(other, module)
    tables = hom.generator_tables()
    if not tables:
        return False
    images = np.unique(np.concatenate(tables))
    return generated_submodule(module, images).is_whole


def cogen_gen(module: FiniteModule, other: Union[FiniteModule, Submodule]) -> CogenGen:
    """Whether M is cogenerated / generated by K (a submodule of M or any module)."""
    return CogenGen(is_cogenerated_by(module, other), is_generated_by(module, other))
