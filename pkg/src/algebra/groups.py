"""
Finite abelian groups given by a cyclic decomposition Z/d_1 + ... + Z/d_k.

Elements are encoded as mixed-radix indices of their coordinate tuples
(big-endian, so index order is lexicographic order of tuples and the all-zero
tuple is index 0).
"""

from functools import cached_property
from math import prod
from typing import Iterable, Sequence, Tuple

import numpy as np


class AbelianGroup:
    def __init__(self, dims: Sequence[int]):
        self.dims: Tuple[int, ...] = tuple(int(d) for d in dims)
        self.rank = len(self.dims)
        self.order = prod(self.dims)
        self._moduli = np.array(self.dims, dtype=np.int64)

    def __repr__(self):
        return f"AbelianGroup({list(self.dims)})"

    @cached_property
    def coords(self) -> np.ndarray:
        """Coordinate tuple of every element, shape (order, rank)."""
        if self.rank == 0:
            return np.zeros((1, 0), dtype=np.int64)
        return np.stack(np.unravel_index(np.arange(self.order), self.dims), axis=1).astype(np.int64)

    def index(self, coords: np.ndarray) -> np.ndarray:
        """Element index of (an array of) integer coordinate vectors, reduced mod dims."""
        coords = np.asarray(coords, dtype=np.int64)
        if self.rank == 0:
            return np.zeros(coords.shape[:-1], dtype=np.int64)
        reduced = np.mod(coords, self._moduli)
        return np.ravel_multi_index(tuple(np.moveaxis(reduced, -1, 0)), self.dims).astype(np.int64)

    @cached_property
    def add(self) -> np.ndarray:
        c = self.coords
        return self.index(c[:, None, :] + c[None, :, :])

    @cached_property
    def neg(self) -> np.ndarray:
        return self.index(-self.coords)

    @cached_property
    def generators(self) -> Tuple[int, ...]:
        """Indices of the standard cyclic generators e_1, ..., e_k."""
        unit = np.eye(self.rank, dtype=np.int64)
        return tuple(int(i) for i in self.index(unit)) if self.rank else ()

    def combination(self, coefficients: np.ndarray, elements: Sequence[int]) -> np.ndarray:
        """Sum_i c_i * x_i for rows of coefficients against a fixed list of elements."""
        basis = self.coords[np.asarray(elements, dtype=np.int64)]
        return self.index(np.asarray(coefficients, dtype=np.int64) @ basis)

    def span(self, elements: Iterable[int]) -> np.ndarray:
        """Sorted indices of the subgroup generated by the given elements."""
        current = np.array([0], dtype=np.int64)
        present = np.zeros(self.order, dtype=bool)
        present[0] = True
        for g in elements:
            if present[g]:
                continue
            cyclic = [0]
            x = int(g)
            while x != 0:
                cyclic.append(x)
                x = int(self.add[x, g])
            current = np.unique(self.add[np.ix_(current, np.array(cyclic))])
            present[current] = True
        return current
