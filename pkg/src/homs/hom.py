"""
Hom groups between finite modules.

An R-linear map f: M -> N is determined by the images of the cyclic generators
e_1..e_k of M, written as an integer matrix F whose row i holds the coordinates
of f(e_i) in N. The admissible matrices are the solutions of a system of linear
congruences, solved exactly with the Smith normal form.
"""

import logging
from dataclasses import dataclass
from itertools import product
from math import prod
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from src.algebra.module import FiniteModule
from src.algebra.presentation import Embedding, submodule_as_module
from src.algebra.submodule import Submodule
from src.utils.cache import Memoized
from src.utils.errors import ConsistencyError, RingMismatchError, SizeCapError
from src.utils.smith import congruence_solutions, lattice_index

logger = logging.getLogger(__name__)

Side = Union[FiniteModule, Submodule]


@dataclass(eq=False, repr=False)
class HomGroup(Memoized):
    """Generating set of Hom_R(source, target).

    ``source`` and ``target`` are what the caller passed (modules or submodules);
    submodules are worked with through their stand-alone presentations. A zero
    submodule has no presentation and is represented by ``None``.
    """

    source: Side
    target: Side
    source_module: Optional[FiniteModule]
    target_module: Optional[FiniteModule]
    source_embedding: Optional[Embedding]
    target_embedding: Optional[Embedding]
    generators: List[np.ndarray]
    group_order: int

    def __post_init__(self):
        self._init_memo()

    def __repr__(self):
        return f"HomGroup({_label(self.source)}, {_label(self.target)}, order={self.group_order})"

    @property
    def source_order(self) -> int:
        return self.source_module.order if self.source_module is not None else 1

    @property
    def target_dims(self) -> Tuple[int, ...]:
        return self.target_module.group.dims if self.target_module is not None else ()

    def table(self, matrix: np.ndarray) -> np.ndarray:
        """f(k) for every element k of the source presentation, as an ambient target index."""
        if self.target_module is None or self.source_module is None:
            return np.zeros(self.source_order, dtype=np.int64)
        values = self.target_module.group.index(self.source_module.group.coords @ matrix)
        if self.target_embedding is not None:
            values = self.target_embedding.image[values]
        return values

    def source_positions(self, elements: Sequence[int]) -> np.ndarray:
        """Positions of ambient source elements inside the source presentation."""
        elements = np.asarray(list(elements), dtype=np.int64)
        if self.source_module is None:
            return np.zeros(len(elements), dtype=np.int64)
        if self.source_embedding is not None:
            return self.source_embedding.inverse[elements]
        return elements

    def generator_tables(self) -> List[np.ndarray]:
        return self.cached("generators", lambda: [self.table(g) for g in self.generators])

    def elements(self) -> List[np.ndarray]:
        """Every map in the group as a matrix, sorted by its value table.

        Raises:
            SizeCapError: when the group is larger than the endomorphism cap
        """
        return self.cached("elements", self._enumerate)

    def _enumerate(self) -> List[np.ndarray]:
        cap = self._config().end_cap
        if self.group_order > cap:
            raise SizeCapError(f"Hom group of order {self.group_order} exceeds cap {cap}",
                               witness={"order": self.group_order, "cap": cap})
        rows = self.source_module.group.rank if self.source_module is not None else 0
        mods = np.array(self.target_dims, dtype=np.int64)
        zero = np.zeros((rows, len(mods)), dtype=np.int64)
        current = {zero.tobytes(): zero}
        for g in self.generators:
            multiples = [zero]
            x = np.mod(g, mods)
            while x.any():
                multiples.append(x)
                x = np.mod(x + g, mods)
            combined = {}
            for e in current.values():
                for m in multiples:
                    s = np.mod(e + m, mods)
                    combined.setdefault(s.tobytes(), s)
            current = combined
        if len(current) != self.group_order:
            raise ConsistencyError(f"Hom group closure has {len(current)} elements, expected {self.group_order}")
        return sorted(current.values(), key=lambda f: tuple(self.table(f).tolist()))

    def element_tables(self) -> List[np.ndarray]:
        return [self.table(f) for f in self.elements()]

    def _config(self):
        owner = self.source_module or self.target_module
        return owner.config if owner is not None else _ambient(self.source).config


def _ambient(side: Side) -> FiniteModule:
    return side.parent if isinstance(side, Submodule) else side


def _present(side: Side) -> Tuple[Optional[FiniteModule], Optional[Embedding]]:
    if isinstance(side, FiniteModule):
        return side, None
    if side.is_zero:
        return None, None
    return submodule_as_module(side)


def matrix_of(table: np.ndarray, source: FiniteModule, target: FiniteModule) -> np.ndarray:
    """Matrix of a map given by its value table (indices of ``target``)."""
    return target.group.coords[table[list(source.group.generators)]]


def subgroup_order(matrices: Sequence[np.ndarray], source_rank: int, target_dims: Sequence[int]) -> int:
    """Order of the additive group generated by maps given as matrices."""
    k = len(target_dims)
    nvars = source_rank * k
    if nvars == 0:
        return 1
    rows = [[int(x) for x in np.asarray(f).reshape(-1)] for f in matrices]
    for i in range(source_rank):
        for j, c in enumerate(target_dims):
            row = [0] * nvars
            row[i * k + j] = int(c)
            rows.append(row)
    return prod(int(c) for c in target_dims) ** source_rank // lattice_index(rows, nvars)


def linearity_congruences(source: FiniteModule, target: FiniteModule) -> List[Tuple[List[int], int]]:
    """Congruences on the entries F[i, j] (flattened i * k_N + j) cutting out Hom_R(M, N)."""
    d_m, d_n = source.group.dims, target.group.dims
    k_m, k_n = len(d_m), len(d_n)
    nvars = k_m * k_n
    congruences = []
    # f(e_i) must be killed by the order of e_i
    for i in range(k_m):
        for j in range(k_n):
            coeffs = [0] * nvars
            coeffs[i * k_n + j] = d_m[i]
            congruences.append((coeffs, d_n[j]))
    # f(g e_i) = g f(e_i) for every additive generator g of R
    for g in source.ring.group.generators:
        b = source.action_matrix(g)
        w = target.action_matrix(g)
        for i in range(k_m):
            for t in range(k_n):
                coeffs = [0] * nvars
                for l in range(k_m):
                    coeffs[l * k_n + t] += int(b[i, l])
                for j in range(k_n):
                    coeffs[i * k_n + j] -= int(w[j, t])
                congruences.append((coeffs, d_n[t]))
    return congruences


def _solve(source: FiniteModule, target: FiniteModule) -> Tuple[List[np.ndarray], int]:
    k_m, k_n = source.group.rank, target.group.rank
    mods = np.array(target.group.dims, dtype=np.int64)
    solutions = congruence_solutions(linearity_congruences(source, target), k_m * k_n)

    generators = []
    seen = set()
    for vector in solutions:
        matrix = np.mod(np.array(vector, dtype=object).reshape(k_m, k_n), mods).astype(np.int64)
        key = matrix.tobytes()
        if matrix.any() and key not in seen:
            seen.add(key)
            generators.append(matrix)
    order = subgroup_order(generators, k_m, target.group.dims)
    return generators, order


def hom_group(source: Side, target: Side) -> HomGroup:
    """Hom_R(source, target) for modules or submodules over the same ring.

    Raises:
        RingMismatchError: when the two sides live over different rings
    """
    ambient_source, ambient_target = _ambient(source), _ambient(target)
    if not ambient_source.ring.same_as(ambient_target.ring):
        raise RingMismatchError(f"{ambient_source.name} and {ambient_target.name} are over different rings")

    def key(side):
        return (id(side),) if isinstance(side, FiniteModule) else (id(side.parent), side.elements)

    def build():
        source_module, source_embedding = _present(source)
        target_module, target_embedding = _present(target)
        if source_module is None or target_module is None:
            generators, order = [], 1
        else:
            generators, order = _solve(source_module, target_module)
        logger.debug(f"Hom({_label(source)}, {_label(target)}) has order {order}, "
                     f"{len(generators)} generators")
        return HomGroup(source, target, source_module, target_module, source_embedding, target_embedding,
                        generators, order)

    return ambient_source.cached(("hom", key(source), key(target)), build)


def _label(side: Side) -> str:
    return side.name if isinstance(side, FiniteModule) else f"{side.label}<{side.parent.name}"


def brute_force_homs(source: FiniteModule, target: FiniteModule) -> List[Tuple[int, ...]]:
    """Oracle: value tables of every R-linear map, found by trying all generator images."""
    cap = source.config.oracle_cap
    if source.order > cap or target.order > cap:
        raise SizeCapError(f"brute-force Hom needs orders <= {cap}",
                           witness={"source": source.order, "target": target.order, "cap": cap})
    candidates = []
    for d in source.group.dims:
        multiple = np.zeros(target.order, dtype=np.int64)
        for _ in range(d):
            multiple = target.add[multiple, np.arange(target.order)]
        candidates.append(np.flatnonzero(multiple == 0).tolist())

    found = []
    for choice in product(*candidates):
        images = target.group.coords[list(choice)]
        table = target.group.index(source.group.coords @ images)
        if np.array_equal(table[source.act], target.act[:, table]):
            found.append(tuple(table.tolist()))
    return sorted(found)
