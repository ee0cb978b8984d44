"""
The star product X * Y = sum of f(X) over all R-linear f: M -> Y.
"""

import logging

import numpy as np

from src.algebra.lattice import generated_submodule, zero_submodule
from src.algebra.submodule import Submodule, same_parent
from src.homs.hom import hom_group

logger = logging.getLogger(__name__)


def star_product(x: Submodule, y: Submodule) -> Submodule:
    """X * Y from the additive generators of Hom(M, Y).

    Since (f + g)(x) = f(x) + g(x), the images of the generators span every f(x).
    """
    same_parent(x, y)
    module = x.parent

    def build():
        if y.is_zero or x.is_zero:
            return zero_submodule(module)
        hom = hom_group(module, y)
        tables = hom.generator_tables()
        if not tables:
            return zero_submodule(module)
        positions = hom.source_positions(x.elements)
        images = np.unique(np.concatenate([t[positions] for t in tables]))
        result = generated_submodule(module, images)
        logger.debug(f"{x.label} * {y.label} = {result.label} in {module.name}")
        return result

    return module.cached(("star", x.elements, y.elements), build)


def star_product_bruteforce(x: Submodule, y: Submodule) -> Submodule:
    """Oracle using every element of Hom(M, Y)."""
    same_parent(x, y)
    module = x.parent
    hom = hom_group(module, y)
    positions = hom.source_positions(x.elements)
    images = set()
    for table in hom.element_tables():
        images.update(int(v) for v in table[positions])
    return generated_submodule(module, sorted(images))
