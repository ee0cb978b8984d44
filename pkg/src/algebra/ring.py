"""
Finite associative unital rings given by an additive cyclic decomposition and a
dense multiplication table.
"""

import logging
from typing import Any, Dict, Optional, Sequence

import numpy as np

from src.algebra.groups import AbelianGroup
from src.utils.cache import Memoized
from src.utils.config import DEFAULT_CONFIG, Config
from src.utils.errors import (
    NoIdentityError,
    NonAssociativeError,
    NotDistributiveError,
    ParseError,
    SizeCapError,
)
from src.utils.specs import child, int_list, int_table, require, require_int

logger = logging.getLogger(__name__)


class FiniteRing(Memoized):
    """A finite ring. Values are immutable once validated; derived data is memoized."""

    def __init__(self, group: AbelianGroup, mul: np.ndarray, one: int, name: str,
                 config: Config = DEFAULT_CONFIG):
        self.group = group
        self.mul = np.asarray(mul, dtype=np.int64)
        self.mul.setflags(write=False)
        self.one = int(one)
        self.zero = 0
        self.name = name
        self.config = config
        self._init_memo()

    def __repr__(self):
        return f"FiniteRing({self.name}, order={self.order})"

    @property
    def order(self) -> int:
        return self.group.order

    @property
    def add_cyclic(self):
        return list(self.group.dims)

    @property
    def add(self) -> np.ndarray:
        return self.group.add

    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))

    def power(self, a: int, n: int) -> int:
        result = self.one
        for _ in range(n):
            result = int(self.mul[result, a])
        return result

    def same_as(self, other: "FiniteRing") -> bool:
        """Structural equality of the tables (used to match rings of different modules)."""
        return (
            self is other
            or (self.group.dims == other.group.dims
                and self.one == other.one
                and np.array_equal(self.mul, other.mul))
        )

    def to_spec(self) -> Dict[str, Any]:
        return {"kind": "table", "add_cyclic": self.add_cyclic, "mul": self.mul.tolist(), "one": self.one}


def validate_ring(group: AbelianGroup, mul: np.ndarray, one: Optional[int], pointer: str = "") -> int:
    """Exhaustively check the ring axioms; returns the identity element.

    Raises the error for the first violating triple/pair in index order.
    """
    n = group.order
    add = group.add
    a = np.arange(n)

    left = mul[mul[:, :, None], a[None, None, :]]
    right = mul[a[:, None, None], mul[None, :, :]]
    bad = np.argwhere(left != right)
    if len(bad):
        x, y, z = (int(v) for v in bad[0])
        raise NonAssociativeError("multiplication is not associative",
                                  witness={"a": x, "b": y, "c": z}, pointer=child(pointer, "mul"))

    # a(b+c) = ab + ac and (b+c)a = ba + ca
    lhs = mul[a[:, None, None], add[None, :, :]]
    rhs = add[mul[:, :, None], mul[:, None, :]]
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        x, y, z = (int(v) for v in bad[0])
        raise NotDistributiveError("left distributivity fails",
                                   witness={"a": x, "b": y, "c": z}, pointer=child(pointer, "mul"))
    # indexed [b, c, a]
    lhs = mul[add[:, :, None], a[None, None, :]]
    rhs = add[mul[:, None, :], mul[None, :, :]]
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        y, z, x = (int(v) for v in bad[0])
        raise NotDistributiveError("right distributivity fails",
                                   witness={"a": x, "b": y, "c": z}, pointer=child(pointer, "mul"))

    candidates = [one] if one is not None else list(range(n))
    for e in candidates:
        if np.array_equal(mul[e, :], a) and np.array_equal(mul[:, e], a):
            if e == 0:
                raise NoIdentityError("identity equals zero (1 = 0)", witness={"one": 0},
                                      pointer=child(pointer, "one"))
            return int(e)
    if one is not None:
        raise NoIdentityError("given element is not a two-sided identity", witness={"one": one},
                              pointer=child(pointer, "one"))
    raise NoIdentityError("no two-sided identity element", pointer=child(pointer, "mul"))


def _check_cap(order: int, config: Config, pointer: str):
    if order > config.ring_cap:
        raise SizeCapError(f"ring order {order} exceeds cap {config.ring_cap}",
                           witness={"order": order, "cap": config.ring_cap}, pointer=pointer or "/")


def zn_ring(n: int, config: Config = DEFAULT_CONFIG) -> FiniteRing:
    """Z/n with multiplication mod n."""
    _check_cap(n, config, "")
    group = AbelianGroup([n])
    a = np.arange(n)
    return FiniteRing(group, np.outer(a, a) % n, 1, f"Z{n}", config)


def product_ring(factors: Sequence[FiniteRing], config: Config = DEFAULT_CONFIG) -> FiniteRing:
    """Direct product with componentwise operations; element index is mixed-radix over the factors."""
    ring = factors[0]
    for factor in factors[1:]:
        order = ring.order * factor.order
        _check_cap(order, config, "")
        group = AbelianGroup(ring.group.dims + factor.group.dims)
        e = np.arange(order)
        e1, e2 = e // factor.order, e % factor.order
        mul = ring.mul[e1[:, None], e1[None, :]] * factor.order + factor.mul[e2[:, None], e2[None, :]]
        one = ring.one * factor.order + factor.one
        ring = FiniteRing(group, mul, one, f"{ring.name}x{factor.name}", config)
    return ring


def upper_triangular_spec(p: int) -> Dict[str, Any]:
    """Table spec of 2x2 upper-triangular matrices [[a, b], [0, c]] over Z/p, coordinates (a, b, c)."""
    group = AbelianGroup([p, p, p])
    c = group.coords
    a1, b1, c1 = c[:, None, 0], c[:, None, 1], c[:, None, 2]
    a2, b2, c2 = c[None, :, 0], c[None, :, 1], c[None, :, 2]
    product = np.stack([a1 * a2, a1 * b2 + b1 * c2, c1 * c2], axis=-1)
    mul = group.index(product)
    one = int(group.index(np.array([1, 0, 1])))
    return {"kind": "table", "name": f"UT2(Z{p})", "add_cyclic": [p, p, p], "mul": mul.tolist(), "one": one}


def opposite_ring(ring: FiniteRing) -> FiniteRing:
    """R^op: same additive group, multiplication a*b := ba."""
    return ring.cached("opposite", lambda: FiniteRing(ring.group, ring.mul.T.copy(), ring.one,
                                                       f"{ring.name}^op", ring.config))


def build_ring(spec: Dict[str, Any], config: Config = DEFAULT_CONFIG, pointer: str = "") -> FiniteRing:
    """Build and validate a ring from a ring-spec document.

    Args:
        spec: {kind: "Zn", n} | {kind: "product", factors} | {kind: "table", add_cyclic, mul, one}
              | {kind: "upper_triangular", p}
        config: Size caps
        pointer: JSON pointer of this document inside a larger one

    Returns:
        Validated FiniteRing
    """
    kind = require(spec, "kind", pointer)
    name = spec.get("name")

    if kind == "Zn":
        n = require_int(spec, "n", pointer, minimum=2)
        _check_cap(n, config, pointer)
        ring = zn_ring(n, config)
    elif kind == "product":
        factors = require(spec, "factors", pointer)
        if not isinstance(factors, list) or not factors:
            raise ParseError("'factors' must be a non-empty list", pointer=child(pointer, "factors"))
        built = [build_ring(f, config, child(child(pointer, "factors"), i)) for i, f in enumerate(factors)]
        order = int(np.prod([r.order for r in built]))
        _check_cap(order, config, pointer)
        ring = product_ring(built, config)
    elif kind == "upper_triangular":
        p = require_int(spec, "p", pointer, minimum=2)
        _check_cap(p ** 3, config, pointer)
        return build_ring(upper_triangular_spec(p), config, pointer)
    elif kind == "table":
        dims = int_list(require(spec, "add_cyclic", pointer), child(pointer, "add_cyclic"), minimum=2)
        group = AbelianGroup(dims)
        _check_cap(group.order, config, pointer)
        mul = np.array(int_table(require(spec, "mul", pointer), group.order, group.order,
                                 child(pointer, "mul"), group.order), dtype=np.int64).reshape(group.order, group.order)
        one = spec.get("one")
        if one is not None and (isinstance(one, bool) or not isinstance(one, int) or not 0 <= one < group.order):
            raise ParseError("'one' must be an element index", pointer=child(pointer, "one"))
        one = validate_ring(group, mul, one, pointer)
        ring = FiniteRing(group, mul, one, name or f"table[{group.order}]", config)
    else:
        raise ParseError(f"unknown ring kind '{kind}'", pointer=child(pointer, "kind"))

    if name:
        ring.name = name
    logger.debug(f"Built ring {ring.name} of order {ring.order}")
    return ring
