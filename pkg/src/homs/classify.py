"""
Module-class predicates, each computed straight from its lattice definition.
"""

import logging
from dataclasses import asdict, dataclass
from typing import Any, Dict, List

import numpy as np

from src.algebra.ideals import annihilator, colon_ideal, colon_submodule, ideal_times_module
from src.algebra.lattice import (
    enumerate_submodules,
    is_chain,
    lattice_tables,
    maximal_submodules,
    sum_of,
    whole_submodule,
    zero_submodule,
)
from src.algebra.module import FiniteModule
from src.algebra.presentation import quotient_module
from src.algebra.radicals import radicals
from src.algebra.submodule import Submodule
from src.homs.cogen import is_cogenerated_by
from src.homs.invariance import fully_invariant, is_fully_invariant
from src.homs.projective import is_self_projective
from src.spectra.primes import is_fully_prime_in, is_prime_in
from src.topology.space import build_topology
from src.utils.errors import NotFullyInvariantError

logger = logging.getLogger(__name__)


@dataclass
class ModuleClass:
    multiplication: bool
    comultiplication: bool
    distributive: bool
    uniserial: bool
    local: bool
    hollow: bool
    coatomic: bool
    fi_coatomic: bool
    duo: bool
    self_projective: bool
    semisimple: bool
    spcd: bool
    cyclic: bool
    fully_prime: bool
    prime: bool
    b_prime: bool
    top_fp: bool

    def to_dict(self) -> Dict[str, bool]:
        return asdict(self)


def is_multiplication(module: FiniteModule) -> bool:
    """Every L equals (L :_R M) M."""
    whole = whole_submodule(module)
    return all(ideal_times_module(colon_ideal(s), whole) == s for s in enumerate_submodules(module))


def is_comultiplication(module: FiniteModule) -> bool:
    """Every L equals (0 :_M (0 :_R L))."""
    zero = zero_submodule(module)
    return all(colon_submodule(zero, annihilator(s)) == s for s in enumerate_submodules(module))


def is_distributive(module: FiniteModule) -> bool:
    """L meet (A join B) = (L meet A) join (L meet B) for every triple."""
    t = lattice_tables(module)
    n = t.size
    l, a, b = np.meshgrid(np.arange(n), np.arange(n), np.arange(n), indexing="ij")
    lhs = t.meet[l, t.join[a, b]]
    rhs = t.join[t.meet[l, a], t.meet[l, b]]
    return bool((lhs == rhs).all())


def is_local(module: FiniteModule) -> bool:
    """The sum of all proper submodules is proper."""
    return not sum_of(module, enumerate_submodules(module)[:-1]).is_whole


def is_hollow(module: FiniteModule) -> bool:
    """No two proper submodules sum to M."""
    t = lattice_tables(module)
    whole = t.size - 1
    return bool((t.join[:whole, :whole] != whole).all())


def is_coatomic(module: FiniteModule) -> bool:
    """Every proper submodule lies under a maximal one."""
    maxima = [k.id for k in maximal_submodules(module)]
    leq = lattice_tables(module).leq
    return all(leq[i, maxima].any() for i in range(lattice_tables(module).size - 1))


def max_fi_above(sub: Submodule) -> List[Submodule]:
    """Maximal members of the proper fully invariant submodules containing L."""
    proper = [k for k in fully_invariant(sub.parent).fi_list[:-1] if sub <= k]
    return [k for k in proper if not any(k < other for other in proper)]


def is_fi_coatomic(module: FiniteModule) -> bool:
    """Every proper fully invariant L has a maximal proper fully invariant submodule above it."""
    return all(max_fi_above(k) for k in fully_invariant(module).fi_list[:-1])


def is_cyclic(module: FiniteModule) -> bool:
    return any(len(np.unique(module.act[:, m])) == module.order for m in range(module.order))


def is_b_prime(module: FiniteModule) -> bool:
    """Cogenerated by each of its non-zero submodules."""
    return all(is_cogenerated_by(module, s) for s in enumerate_submodules(module)[1:])


def _classify(module: FiniteModule) -> ModuleClass:
    subs = enumerate_submodules(module)
    zero = subs[0]
    duo = fully_invariant(module).is_duo
    self_projective = is_self_projective(module)
    coatomic = is_coatomic(module)
    record = ModuleClass(
        multiplication=is_multiplication(module),
        comultiplication=is_comultiplication(module),
        distributive=is_distributive(module),
        uniserial=is_chain(module),
        local=is_local(module),
        hollow=is_hollow(module),
        coatomic=coatomic,
        fi_coatomic=is_fi_coatomic(module),
        duo=duo,
        self_projective=self_projective,
        semisimple=radicals(module).soc.is_whole,
        spcd=self_projective and coatomic and duo,
        cyclic=is_cyclic(module),
        fully_prime=is_fully_prime_in(zero),
        prime=is_prime_in(zero),
        b_prime=is_b_prime(module),
        top_fp=build_topology(module, "full").is_topology,
    )
    logger.info(f"Classified {module.name}: " + ", ".join(k for k, v in record.to_dict().items() if v))
    return record


def classify_module(module: FiniteModule) -> ModuleClass:
    return module.cached("classify", lambda: _classify(module))


@dataclass
class InvariantFamilies:
    U_fi: List[Submodule]
    Q_fi: List[Submodule]
    max_fi: List[Submodule]

    def to_dict(self) -> Dict[str, Any]:
        return {"U_fi": [s.id for s in self.U_fi], "Q_fi": [s.id for s in self.Q_fi],
                "max_fi": [s.id for s in self.max_fi]}


def ufi_qfi(sub: Submodule) -> InvariantFamilies:
    """Fully invariant submodules above L, those whose image in M/L is fully invariant,
    and the maximal proper fully invariant ones above L.

    Raises:
        NotFullyInvariantError: when L itself is not fully invariant
    """
    module = sub.parent
    if not is_fully_invariant(sub):
        raise NotFullyInvariantError(f"{sub.label} is not fully invariant in {module.name}")
    u_fi = [k for k in fully_invariant(module).fi_list if sub <= k]
    if sub.is_whole:
        q_fi = [sub]
    else:
        quotient, projection = quotient_module(module, sub)
        lifted = [projection.pull(q) for q in fully_invariant(quotient).fi_list]
        q_fi = sorted((enumerate_submodules(module)[s.id] for s in lifted), key=lambda s: s.sort_key)
    return InvariantFamilies(u_fi, q_fi, max_fi_above(sub))
