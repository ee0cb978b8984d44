"""
Finite unital left modules over finite rings.

A module is its additive group plus the full action table ``act[r, m]``.
"""

import logging
from collections import deque
from typing import Any, Dict, List, Optional

import numpy as np

from src.algebra.groups import AbelianGroup
from src.algebra.ring import FiniteRing, build_ring, opposite_ring
from src.utils.cache import Memoized
from src.utils.config import DEFAULT_CONFIG, Config
from src.utils.errors import (
    NotAssociativeActionError,
    NotBiadditiveError,
    NotUnitalError,
    ParseError,
    RingMismatchError,
    SizeCapError,
    ZeroModuleError,
)
from src.utils.specs import child, int_list, int_table, require

logger = logging.getLogger(__name__)


class FiniteModule(Memoized):
    """A finite left R-module."""

    def __init__(self, ring: FiniteRing, group: AbelianGroup, act: np.ndarray, name: str,
                 config: Config = DEFAULT_CONFIG):
        self.ring = ring
        self.group = group
        self.act = np.asarray(act, dtype=np.int64)
        self.act.setflags(write=False)
        self.name = name
        self.config = config
        self.zero = 0
        self._init_memo()

    def __repr__(self):
        return f"FiniteModule({self.name}, order={self.order})"

    @property
    def order(self) -> int:
        return self.group.order

    @property
    def add_cyclic(self) -> List[int]:
        return list(self.group.dims)

    @property
    def add(self) -> np.ndarray:
        return self.group.add

    def action_matrix(self, r: int) -> np.ndarray:
        """Integer matrix W with act(r, x) = x @ W in coordinates (rows are images of generators)."""
        return self.group.coords[self.act[r, list(self.group.generators)]] if self.group.rank else \
            np.zeros((0, 0), dtype=np.int64)

    def to_spec(self) -> Dict[str, Any]:
        return {"kind": "table", "ring": self.ring.to_spec(), "add_cyclic": self.add_cyclic,
                "act": self.act.tolist()}


def validate_module(ring: FiniteRing, group: AbelianGroup, act: np.ndarray, pointer: str = ""):
    """Exhaustively check the unital left-module axioms.

    Raises:
        ZeroModuleError, NotBiadditiveError, NotUnitalError, NotAssociativeActionError
    """
    if group.order <= 1:
        raise ZeroModuleError("module must be non-zero", pointer=child(pointer, "add_cyclic"))

    madd, radd = group.add, ring.add
    # r(m + n) = rm + rn, indexed [r, m, n]
    lhs = act[:, madd]
    rhs = madd[act[:, :, None], act[:, None, :]]
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        r, m, n = (int(v) for v in bad[0])
        raise NotBiadditiveError("action is not additive in the module argument",
                                 witness={"r": r, "m": m, "n": n}, pointer=child(pointer, "act"))
    # (r + s)m = rm + sm, indexed [r, s, m]
    lhs = act[radd]
    rhs = madd[act[:, None, :], act[None, :, :]]
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        r, s, m = (int(v) for v in bad[0])
        raise NotBiadditiveError("action is not additive in the ring argument",
                                 witness={"r": r, "s": s, "m": m}, pointer=child(pointer, "act"))

    moved = np.flatnonzero(act[ring.one] != np.arange(group.order))
    if len(moved):
        m = int(moved[0])
        raise NotUnitalError("1 does not act as the identity", witness={"m": m, "1m": int(act[ring.one, m])},
                             pointer=child(pointer, "act"))

    # (rs)m = r(sm), indexed [r, s, m]
    lhs = act[ring.mul]
    rhs = act[np.arange(ring.order)[:, None, None], act[None, :, :]]
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        r, s, m = (int(v) for v in bad[0])
        raise NotAssociativeActionError("(rs)m differs from r(sm)", witness={"r": r, "s": s, "m": m},
                                        pointer=child(pointer, "act"))


def regular_module(ring: FiniteRing) -> FiniteModule:
    """The left regular module _R R with act = mul."""
    return ring.cached("regular_module",
                       lambda: FiniteModule(ring, ring.group, ring.mul, f"{ring.name}_reg", ring.config))


def right_regular_module(ring: FiniteRing) -> FiniteModule:
    """R_R presented as the left regular module of the opposite ring."""
    return regular_module(opposite_ring(ring))


def direct_sum(summands: List[FiniteModule], name: Optional[str] = None) -> FiniteModule:
    """Direct sum over a common ring; element index is mixed-radix over the summands."""
    module = summands[0]
    for summand in summands[1:]:
        if not module.ring.same_as(summand.ring):
            raise RingMismatchError(f"summands {module.name} and {summand.name} are over different rings")
        order = module.order * summand.order
        _check_cap(order, module.config, "")
        group = AbelianGroup(module.group.dims + summand.group.dims)
        e = np.arange(order)
        e1, e2 = e // summand.order, e % summand.order
        act = module.act[:, e1] * summand.order + summand.act[:, e2]
        module = FiniteModule(module.ring, group, act, f"{module.name}+{summand.name}", module.config)
    if name:
        module.name = name
    return module


def _check_cap(order: int, config: Config, pointer: str):
    if order > config.module_cap:
        raise SizeCapError(f"module order {order} exceeds cap {config.module_cap}",
                           witness={"order": order, "cap": config.module_cap}, pointer=pointer or "/")


def _expand_matrices(ring: FiniteRing, group: AbelianGroup, matrices: List[List[List[int]]],
                     generators: List[int], pointer: str) -> np.ndarray:
    """Full action table from the matrices of a set of additive generators of R.

    The action of r = g_1 + ... is the sum of the generator actions; every ring
    element is reached by a breadth-first walk over the additive Cayley graph.
    """
    k = group.rank
    coords = group.coords
    rows = {}
    for g, matrix in zip(generators, matrices):
        w = np.array(matrix, dtype=np.int64).reshape(k, k)
        rows[g] = group.index(coords @ w)

    table = np.full((ring.order, group.order), -1, dtype=np.int64)
    table[0] = 0
    queue = deque([0])
    seen = {0}
    while queue:
        r = queue.popleft()
        for g, row in rows.items():
            s = int(ring.add[r, g])
            if s not in seen:
                seen.add(s)
                table[s] = group.add[table[r], row]
                queue.append(s)
    if len(seen) != ring.order:
        raise ParseError("generators do not additively generate the ring", pointer=child(pointer, "generators"))
    # generators that are sums of others must agree with the walk
    for g, row in rows.items():
        if not np.array_equal(table[g], row):
            raise NotBiadditiveError("action matrices are inconsistent with ring addition",
                                     witness={"generator": g}, pointer=child(pointer, "matrices"))
    return table


def build_module(spec: Dict[str, Any], config: Config = DEFAULT_CONFIG, pointer: str = "",
                 ring: Optional[FiniteRing] = None) -> FiniteModule:
    """Build and validate a module from a module-spec document.

    Args:
        spec: {kind: "regular", ring, side?} | {kind: "table", ring, add_cyclic, act}
              | {kind: "matrices", ring, add_cyclic, matrices, generators?}
              | {kind: "direct_sum", ring, summands}
        config: Size caps
        pointer: JSON pointer of this document inside a larger one
        ring: Ring inherited from an enclosing direct sum when the spec omits "ring"

    Returns:
        Validated FiniteModule
    """
    if not isinstance(spec, dict):
        raise ParseError("expected an object", pointer=pointer or "/")
    if "ring" in spec:
        own = build_ring(spec["ring"], config, child(pointer, "ring"))
        if ring is not None and not ring.same_as(own):
            raise RingMismatchError(f"{child(pointer, 'ring')}: ring differs from the enclosing module's ring")
        ring = own
    elif ring is None:
        raise ParseError("missing required field 'ring'", pointer=pointer or "/")

    kind = spec.get("kind")
    if kind is None:
        kind = "matrices" if "matrices" in spec else "table"
    name = spec.get("name")

    if kind == "regular":
        side = spec.get("side", "left")
        if side not in ("left", "right"):
            raise ParseError("'side' must be 'left' or 'right'", pointer=child(pointer, "side"))
        _check_cap(ring.order, config, pointer)
        module = regular_module(ring) if side == "left" else right_regular_module(ring)
    elif kind == "direct_sum":
        summands = require(spec, "summands", pointer)
        if not isinstance(summands, list) or not summands:
            raise ParseError("'summands' must be a non-empty list", pointer=child(pointer, "summands"))
        built = [build_module(s, config, child(child(pointer, "summands"), i), ring)
                 for i, s in enumerate(summands)]
        _check_cap(int(np.prod([m.order for m in built])), config, pointer)
        module = direct_sum(built)
    elif kind in ("table", "matrices"):
        dims = int_list(require(spec, "add_cyclic", pointer), child(pointer, "add_cyclic"), minimum=2)
        group = AbelianGroup(dims)
        if group.order <= 1:
            raise ZeroModuleError("module must be non-zero", pointer=child(pointer, "add_cyclic"))
        _check_cap(group.order, config, pointer)
        if kind == "table":
            act = np.array(int_table(require(spec, "act", pointer), ring.order, group.order,
                                     child(pointer, "act"), group.order), dtype=np.int64)
            act = act.reshape(ring.order, group.order)
        else:
            generators = spec.get("generators", list(ring.group.generators))
            generators = int_list(generators, child(pointer, "generators"), minimum=0)
            if any(g >= ring.order for g in generators):
                raise ParseError("generator is not a ring element", pointer=child(pointer, "generators"))
            matrices = require(spec, "matrices", pointer)
            if not isinstance(matrices, list) or len(matrices) != len(generators):
                raise ParseError(f"expected {len(generators)} matrices", pointer=child(pointer, "matrices"))
            for i, matrix in enumerate(matrices):
                mp = child(child(pointer, "matrices"), i)
                if not isinstance(matrix, list) or len(matrix) != group.rank:
                    raise ParseError(f"expected {group.rank} rows", pointer=mp)
                for j, row in enumerate(matrix):
                    int_list(row, child(mp, j))
                    if len(row) != group.rank:
                        raise ParseError(f"expected {group.rank} entries", pointer=child(mp, j))
            act = _expand_matrices(ring, group, matrices, generators, pointer)
        validate_module(ring, group, act, pointer)
        module = FiniteModule(ring, group, act, name or f"{ring.name}-module[{group.order}]", config)
    else:
        raise ParseError(f"unknown module kind '{kind}'", pointer=child(pointer, "kind"))

    if name:
        module.name = name
    logger.debug(f"Built module {module.name} of order {module.order} over {ring.name}")
    return module
