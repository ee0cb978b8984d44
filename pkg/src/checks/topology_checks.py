"""
Checks on the closed-set families, closures and topological properties of Spec^fp(M).
"""

import logging
from itertools import combinations
from typing import List, Tuple

from src.algebra.lattice import (
    cyclic_submodule,
    enumerate_submodules,
    generated_submodule,
    lattice_tables,
    submodule_intersect,
    sum_of,
    whole_submodule,
    zero_submodule,
)
from src.algebra.presentation import submodule_as_module
from src.algebra.radicals import radicals
from src.algebra.submodule import Submodule
from src.checks.catalog import Subject
from src.checks.module_checks import is_spcd, point_ids, proper_fi
from src.checks.registry import check, degenerate, failed, passed
from src.homs.classify import classify_module, max_fi_above
from src.homs.invariance import fully_invariant
from src.homs.projective import is_self_projective
from src.homs.star import star_product
from src.spectra.primes import is_fully_prime_in
from src.spectra.spectrum import spec_fp
from src.spectra.varieties import max_property, rad_fp, variety
from src.topology.irreducible import irreducible_sets
from src.topology.properties import (
    basis_check,
    is_connected,
    is_connected_subset,
    is_discrete,
    is_irreducible,
    is_irreducible_subset,
    is_sober,
    is_t0,
    is_t1,
    is_t2,
    is_ultraconnected,
    point_closure,
)
from src.topology.space import FiniteTopology, PointSet, build_topology, core, formula_closure
from src.topology.specialization import is_locally_finite, specialization_order

logger = logging.getLogger(__name__)


def point_subsets(subject: Subject, topology: FiniteTopology) -> Tuple[List[PointSet], bool]:
    """Every subset of the space while it has at most ``subset_cap`` points, else a sample.

    The sample holds the empty set, singletons, pairs, the closed sets and the whole space.
    """
    points = topology.points
    if len(points) <= subject.module.config.subset_cap:
        return [frozenset(c) for size in range(len(points) + 1) for c in combinations(points, size)], True
    sample = {frozenset(), topology.whole}
    sample.update(frozenset([x]) for x in points)
    sample.update(frozenset(pair) for pair in combinations(points, 2))
    sample.update(topology.closed_sets)
    return sorted(sample, key=lambda s: (len(s), sorted(s))), False


def maximal_ids(subject: Subject) -> List[int]:
    return [k.id for k in radicals(subject.module).max_list]


def spec_is_max(subject: Subject) -> bool:
    return set(point_ids(subject)) == set(maximal_ids(subject))


def module_generators(sub: Submodule) -> List[int]:
    """Greedy R-module generating set of a submodule."""
    module = sub.parent
    generators: List[int] = []
    current = zero_submodule(module)
    for m in sub.elements:
        if m not in current:
            generators.append(m)
            current = generated_submodule(module, generators)
    return generators


def _require_top(subject: Subject):
    topology = subject.topology("full")
    return topology if topology.is_topology else None


@check("lemma_fp_properties")
def lemma_fp_properties(subject: Subject):
    """V(L) u V(L') = V(L n L') = V(L * L') for fully invariant L, L'."""
    spectrum = subject.spec()
    fi = fully_invariant(subject.module).fi_list
    pairs = 0
    for x in fi:
        for y in fi:
            union = variety(x, spectrum).V | variety(y, spectrum).V
            meet = variety(submodule_intersect(x, y), spectrum).V
            star = variety(star_product(x, y), spectrum).V
            if not union == meet == star:
                return failed({"L": x.id, "L2": y.id, "union": sorted(union), "intersection": sorted(meet),
                               "star": sorted(star)})
            pairs += 1
    return passed(pairs=pairs)


@check("thm_fi_topology")
def thm_fi_topology(subject: Subject):
    """The fully invariant family is always a topology; the full family is one for duo M."""
    fi_topology = subject.topology("fi")
    if not fi_topology.is_topology:
        return failed({"variant": "fi", "union_not_closed": [sorted(s) for s in fi_topology.witness]})
    duo = fully_invariant(subject.module).is_duo
    full = subject.topology("full")
    if duo and not full.is_topology:
        return failed({"variant": "full", "union_not_closed": [sorted(s) for s in full.witness]})
    return passed(duo=duo, full_is_topology=full.is_topology)


@check("lemma_fp_closure")
def lemma_fp_closure(subject: Subject):
    """The closure of a set of points is V^fp of their intersection."""
    topology = _require_top(subject)
    if topology is None:
        return degenerate("top^fp-module")
    subsets, exhaustive = point_subsets(subject, topology)
    for subset in subsets:
        closure = topology.smallest_closed_superset(subset)
        expected = formula_closure(topology, subset)
        if closure != expected:
            return failed({"A": sorted(subset), "closure": sorted(closure), "variety": sorted(expected)})
    return passed(subsets=len(subsets), exhaustive=exhaustive)


@check("rem_fp_rms_1")
def rem_fp_rms_1(subject: Subject):
    """Z^fp(M) is T0."""
    topology = _require_top(subject)
    if topology is None:
        return degenerate("top^fp-module")
    if not is_t0(topology):
        closures = {x: sorted(point_closure(topology, x)) for x in topology.points}
        return failed({"closures": closures})
    return passed(points=len(topology.points))


@check("rem_fp_rms_2")
def rem_fp_rms_2(subject: Subject):
    """The sets X^fp(Rm) form a basis of the topology."""
    topology = _require_top(subject)
    if topology is None:
        return degenerate("top^fp-module")
    if not basis_check(topology):
        return failed({"open_sets": [sorted(o) for o in topology.open_sets()]})
    return passed(open_sets=len(topology.open_sets()))


@check("rem_fp_rms_3")
def rem_fp_rms_3(subject: Subject):
    """The closure of {L} is V^fp(L); specialization is containment."""
    topology = _require_top(subject)
    if topology is None:
        return degenerate("top^fp-module")
    spectrum = subject.spec()
    for point in spectrum.points:
        closure = point_closure(topology, point.id)
        expected = variety(point.submodule, spectrum).V
        if closure != expected:
            return failed({"L": point.id, "closure": sorted(closure), "variety": sorted(expected)})
    order = specialization_order(topology)
    return passed(hasse_edges=[list(e) for e in order.hasse_edges()])


@check("rem_fp_rms_4")
def rem_fp_rms_4(subject: Subject):
    """L lies in Rad^fp(L), and Rad^fp is monotone."""
    module = subject.module
    spectrum = subject.spec()
    subs = enumerate_submodules(module)
    radical = [rad_fp(s, spectrum) for s in subs]
    for s, r in zip(subs, radical):
        if not s <= r:
            return failed({"L": s.id, "rad": r.id})
    leq = lattice_tables(module).leq
    pairs = 0
    for i, j in zip(*leq.nonzero()):
        if not radical[i] <= radical[j]:
            return failed({"L1": int(i), "L2": int(j)})
        pairs += 1
    return passed(pairs=pairs)


@check("rem_fp_rms_5")
def rem_fp_rms_5(subject: Subject):
    """Rad^fp is idempotent."""
    spectrum = subject.spec()
    for s in enumerate_submodules(subject.module):
        once = rad_fp(s, spectrum)
        twice = rad_fp(once, spectrum)
        if once != twice:
            return failed({"L": s.id, "rad": once.id, "rad_rad": twice.id})
    return passed()


@check("rem_fp_rms_6")
def rem_fp_rms_6(subject: Subject):
    """For self-projective M the maximal f.i. submodules above L lie in V^fp(L)."""
    topology = _require_top(subject)
    if topology is None:
        return degenerate("top^fp-module")
    if not is_self_projective(subject.module):
        return degenerate("self-projective")
    spectrum = subject.spec()
    for sub in proper_fi(subject):
        above = {k.id for k in max_fi_above(sub)}
        v = variety(sub, spectrum).V
        if not above <= v:
            return failed({"L": sub.id, "maximal_fi_outside_V": sorted(above - v)})
    return passed()


@check("rem_fp_rms_7")
def rem_fp_rms_7(subject: Subject):
    """For S-PCD M: V^fp(L) is empty iff L = M, and X^fp(L) empty forces L inside Rad(M)."""
    topology = _require_top(subject)
    if topology is None:
        return degenerate("top^fp-module")
    if not is_spcd(subject):
        return degenerate("S-PCD")
    spectrum = subject.spec()
    rad = radicals(subject.module).rad
    for sub in enumerate_submodules(subject.module):
        v = variety(sub, spectrum)
        if (not v.V) != sub.is_whole:
            return failed({"L": sub.id, "V_empty": not v.V})
        if not v.X and not sub <= rad:
            return failed({"L": sub.id, "X_empty": True, "rad": rad.id})
    return passed()


@check("rem_fp_rms_8")
def rem_fp_rms_8(subject: Subject):
    """An isomorphic re-presentation has the same spectrum, fp-radical and closed sets."""
    module = subject.module
    copy, embedding = submodule_as_module(whole_submodule(module))
    spectrum = subject.spec()
    copy_spectrum = spec_fp(copy)
    mapping = {p.id: embedding.push(p.submodule).id for p in copy_spectrum.points}
    if set(mapping.values()) != set(spectrum.ids) or len(mapping) != len(spectrum.ids):
        return failed({"spectrum": spectrum.ids, "image": sorted(mapping.values())})
    if embedding.push(copy_spectrum.rad_fp) != spectrum.rad_fp:
        return failed({"rad_fp": spectrum.rad_fp.id, "image": embedding.push(copy_spectrum.rad_fp).id})
    ours = set(subject.topology("full").closed_sets)
    theirs = {frozenset(mapping[x] for x in c) for c in build_topology(copy, "full").closed_sets}
    if ours != theirs:
        return failed({"closed_sets": [sorted(c) for c in ours ^ theirs]})
    return passed(points=len(mapping))


@check("thm_noeth")
def thm_noeth(subject: Subject):
    """fp-radical submodules correspond to closed sets via V^fp and Rad^fp."""
    topology = _require_top(subject)
    if topology is None:
        return degenerate("top^fp-module")
    spectrum = subject.spec()
    subs = enumerate_submodules(subject.module)
    radical = [s for s in subs if rad_fp(s, spectrum) == s]
    for s in radical:
        closed = variety(s, spectrum).V
        representative = subs[topology.preimages[closed][0]]
        if rad_fp(representative, spectrum) != s:
            return failed({"L": s.id, "closed": sorted(closed), "rad_of_representative": rad_fp(representative, spectrum).id})
    for closed in topology.closed_sets:
        psi = rad_fp(subs[topology.preimages[closed][0]], spectrum)
        if variety(psi, spectrum).V != closed:
            return failed({"closed": sorted(closed), "psi": psi.id})
    images = {variety(s, spectrum).V for s in radical}
    if len(images) != len(radical) or len(radical) != len(topology.closed_sets):
        return failed({"fp_radical": [s.id for s in radical], "closed_sets": len(topology.closed_sets)})
    return passed(fp_radical=[s.id for s in radical],
                  degenerate_parts={"2": "ACC holds in every finite module", "3": "finite modules are Noetherian"})


@check("prop_A_irred")
def prop_A_irred(subject: Subject):
    """For duo M a set of points is irreducible iff its intersection is fully prime."""
    if not fully_invariant(subject.module).is_duo:
        return degenerate("duo")
    topology = subject.topology("full")
    subsets, exhaustive = point_subsets(subject, topology)
    for subset in subsets:
        irreducible = is_irreducible_subset(topology, subset)
        j = core(topology, subset)
        fully_prime = j.is_proper and is_fully_prime_in(j)
        if irreducible != fully_prime:
            return failed({"A": sorted(subset), "irreducible": irreducible, "J": j.id, "fully_prime": fully_prime})
    return passed(subsets=len(subsets), exhaustive=exhaustive)


@check("cor_rad_irred")
def cor_rad_irred(subject: Subject):
    """For duo M: Spec^fp irreducible iff Rad^fp(M) fully prime; Max irreducible iff Rad(M) fully prime."""
    module = subject.module
    if not fully_invariant(module).is_duo:
        return degenerate("duo")
    topology = subject.topology("full")
    spectrum = subject.spec()
    details = {}
    if spectrum.points:
        irreducible = is_irreducible(topology)
        rad = spectrum.rad_fp
        fully_prime = rad.is_proper and is_fully_prime_in(rad)
        if irreducible != fully_prime:
            return failed({"part": 1, "irreducible": irreducible, "rad_fp": rad.id, "fully_prime": fully_prime})
        details["irreducible"] = irreducible
    if is_self_projective(module):
        maxima = maximal_ids(subject)
        missing = [k for k in maxima if k not in topology.whole]
        if missing:
            return failed({"part": 2, "maximal_not_in_spectrum": missing})
        irreducible = is_irreducible_subset(topology, maxima)
        fully_prime = is_fully_prime_in(radicals(module).rad)
        if irreducible != fully_prime:
            return failed({"part": 2, "max_irreducible": irreducible, "rad_fully_prime": fully_prime})
        details["max_irreducible"] = irreducible
    if not details:
        return degenerate("non-empty Spec^fp or self-projective")
    return passed(**details)


@check("prop_K_irred")
def prop_K_irred(subject: Subject):
    """For duo M points correspond to irreducible closed sets and minimal points to components."""
    if not fully_invariant(subject.module).is_duo:
        return degenerate("duo")
    topology = subject.topology("full")
    spectrum = subject.spec()
    closures = [variety(p.submodule, spectrum).V for p in spectrum.points]
    if len(set(closures)) != len(closures):
        return failed({"points_with_equal_closure": spectrum.ids})
    found = irreducible_sets(topology)
    return passed(closed_irreducibles=len(found.closed_irreducibles),
                  components=[sorted(c) for c in found.components])


@check("cor_sober")
def cor_sober(subject: Subject):
    """For duo M the space is sober."""
    if not fully_invariant(subject.module).is_duo:
        return degenerate("duo")
    topology = subject.topology("full")
    if not is_sober(topology):
        return failed({"closed_sets": [sorted(c) for c in topology.closed_sets]})
    return passed()


@check("prop_ultra")
def prop_ultra(subject: Subject):
    """For S-PCD M: hollow iff Spec^fp(M) is ultraconnected."""
    if not is_spcd(subject):
        return degenerate("S-PCD")
    if not subject.spec().points:
        return degenerate("non-empty Spec^fp")
    hollow = classify_module(subject.module).hollow
    ultraconnected = is_ultraconnected(subject.topology("full"))
    if hollow != ultraconnected:
        return failed({"hollow": hollow, "ultraconnected": ultraconnected})
    return passed(hollow=hollow)


@check("lemma_open_compact")
def lemma_open_compact(subject: Subject):
    """For duo M every open set is X^fp(N) for a finitely generated N."""
    if not fully_invariant(subject.module).is_duo:
        return degenerate("duo")
    topology = subject.topology("full")
    spectrum = subject.spec()
    subs = enumerate_submodules(subject.module)
    witnesses = {}
    for closed in topology.closed_sets:
        open_set = topology.whole - closed
        n = subs[topology.preimages[closed][0]]
        generators = module_generators(n)
        if generated_submodule(subject.module, generators) != n or variety(n, spectrum).X != open_set:
            return failed({"open": sorted(open_set), "N": n.id, "generators": generators})
        witnesses[",".join(str(x) for x in sorted(open_set))] = generators
    return passed(generators=witnesses, degenerate_parts={"1": "countable and finite generation coincide"})


@check("thm_fp_lindelof")
def thm_fp_lindelof(subject: Subject):
    """For S-PCD M with finitely many maximal submodules the basic cover has a finite subcover."""
    if not is_spcd(subject):
        return degenerate("S-PCD")
    module = subject.module
    topology = subject.topology("full")
    spectrum = subject.spec()
    chosen = []
    for k in radicals(module).max_list:
        if k.id not in topology.whole:
            return failed({"maximal_not_in_spectrum": k.id})
        chosen.append(next(m for m in range(module.order) if m not in k))
    cyclics = [cyclic_submodule(module, m) for m in chosen]
    covered = frozenset().union(*[variety(c, spectrum).X for c in cyclics])
    if not sum_of(module, cyclics).is_whole or covered != topology.whole:
        return failed({"elements": chosen, "covered": sorted(covered)})
    return passed(subcover=chosen, degenerate_parts={"1": "countable and finite coincide"})


@check("prop_local_conn")
def prop_local_conn(subject: Subject):
    """Duo M with Spec^fp = Max: complete max-property gives discreteness; one maximal iff complete and connected."""
    if not fully_invariant(subject.module).is_duo:
        return degenerate("duo")
    if not spec_is_max(subject):
        return degenerate("Spec^fp(M) = Max(M)")
    topology = subject.topology("full")
    complete = max_property(subject.module).complete
    discrete = is_discrete(topology)
    connected = is_connected(topology)
    if complete and not discrete:
        return failed({"part": 1, "complete": complete, "discrete": discrete})
    single = len(maximal_ids(subject)) == 1
    if single != (complete and connected):
        return failed({"part": 2, "unique_maximal": single, "complete": complete, "connected": connected})
    return passed(complete=complete, discrete=discrete, connected=connected)


@check("cor_local")
def cor_local(subject: Subject):
    """S-PCD M whose fully primes are maximal: local iff max-property and connected."""
    if not is_spcd(subject):
        return degenerate("S-PCD")
    if not set(point_ids(subject)) <= set(maximal_ids(subject)):
        return degenerate("every fully prime submodule maximal")
    record = max_property(subject.module)
    local = classify_module(subject.module).local
    connected = is_connected(subject.topology("full"))
    if local != (record.plain and connected):
        return failed({"part": 3, "local": local, "max_property": record.plain, "connected": connected})
    if not record.complete:
        return failed({"part": 2, "finite_max": True, "complete": record.complete, "compact": True})
    return passed(local=local, degenerate_parts={"1": "Max(M) is finite"})


@check("lemma_conn_chain")
def lemma_conn_chain(subject: Subject):
    """For S-PCD M each point of a connected set of at least two points is comparable to another."""
    if not is_spcd(subject):
        return degenerate("S-PCD")
    topology = subject.topology("full")
    subs = {p.id: p.submodule for p in subject.spec().points}
    subsets, exhaustive = point_subsets(subject, topology)
    connected = [s for s in subsets if len(s) >= 2 and is_connected_subset(topology, s)]
    if not connected:
        return degenerate("connected subset of at least two points", exhaustive=exhaustive)
    for subset in connected:
        for i in subset:
            if not any(subs[i] <= subs[j] or subs[j] <= subs[i] for j in subset if j != i):
                return failed({"A": sorted(subset), "isolated": i})
    return passed(connected_subsets=len(connected))


@check("prop_loc_finite")
def prop_loc_finite(subject: Subject):
    """For S-PCD M with the complete max-property, families of maximal submodules are locally finite."""
    if not is_spcd(subject):
        return degenerate("S-PCD")
    if not max_property(subject.module).complete:
        return degenerate("complete max-property")
    topology = subject.topology("full")
    spectrum = subject.spec()
    maxima = maximal_ids(subject)
    missing = [k for k in maxima if k not in topology.whole]
    if missing:
        return failed({"maximal_not_in_spectrum": missing})
    result = is_locally_finite(topology, [[k] for k in maxima], bound=1)
    if not result.value:
        return failed({"hits": result.hits, "offenders": result.offenders})
    subs = {p.id: p.submodule for p in spectrum.points}
    for point in spectrum.points:
        outside = [k for k in maxima if not point.submodule <= subs[k]]
        f = core(topology, outside)
        if f <= point.submodule:
            return failed({"L": point.id, "F": f.id})
    return passed(neighbourhoods={str(x): sorted(u) for x, u in result.neighbourhoods.items()})


@check("lemma_singleton")
def lemma_singleton(subject: Subject):
    """For S-PCD M: L maximal iff L fully prime with V^fp(L) = {L} iff {L} closed."""
    if not is_spcd(subject):
        return degenerate("S-PCD")
    topology = subject.topology("full")
    spectrum = subject.spec()
    ids = set(spectrum.ids)
    maxima = set(maximal_ids(subject))
    for sub in enumerate_submodules(subject.module)[:-1]:
        a = sub.id in maxima
        b = sub.id in ids and variety(sub, spectrum).V == {sub.id}
        c = sub.id in ids and topology.is_closed([sub.id])
        if not a == b == c:
            return failed({"L": sub.id, "maximal": a, "isolated_variety": b, "closed_singleton": c})
    return passed()


@check("prop_frecht")
def prop_frecht(subject: Subject):
    """For S-PCD M: Spec^fp = Max iff the space is T1."""
    if not is_spcd(subject):
        return degenerate("S-PCD")
    equal = spec_is_max(subject)
    t1 = is_t1(subject.topology("full"))
    if equal != t1:
        return failed({"spec_is_max": equal, "T1": t1})
    return passed(spec_is_max=equal)


@check("thm_fp_discrete")
def thm_fp_discrete(subject: Subject):
    """For S-PCD M with the complete max-property: Spec^fp = Max, discrete, T2 and T1 are equivalent."""
    if not is_spcd(subject):
        return degenerate("S-PCD")
    if not max_property(subject.module).complete:
        return degenerate("complete max-property")
    topology = subject.topology("full")
    values = {"spec_is_max": spec_is_max(subject), "discrete": is_discrete(topology),
              "T2": is_t2(topology), "T1": is_t1(topology)}
    if len(set(values.values())) != 1:
        return failed(values)
    return passed(**values)
