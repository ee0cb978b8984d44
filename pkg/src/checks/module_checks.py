"""
Checks on fully invariant submodules, primeness and Spec^fp itself.
"""

import logging
from typing import List

from src.algebra.lattice import enumerate_submodules, zero_submodule
from src.algebra.presentation import quotient_module
from src.algebra.radicals import radicals
from src.algebra.submodule import Submodule
from src.checks.catalog import Subject
from src.checks.registry import check, degenerate, failed, passed
from src.homs.classify import classify_module, is_multiplication, ufi_qfi
from src.homs.cogen import is_cogenerated_by
from src.homs.invariance import fully_invariant
from src.homs.projective import is_self_projective
from src.spectra.primes import is_fully_prime_in, prime_tests
from src.spectra.spectrum import spec_fp
from src.spectra.varieties import max_property, minimal_above

logger = logging.getLogger(__name__)


def proper_fi(subject: Subject) -> List[Submodule]:
    return fully_invariant(subject.module).fi_list[:-1]


def point_ids(subject: Subject) -> set:
    return set(subject.spec().ids)


def is_spcd(subject: Subject) -> bool:
    """Self-projective, coatomic and duo."""
    return classify_module(subject.module).spcd


@check("lemma_ww_fi")
def lemma_ww_fi(subject: Subject):
    """Q^fi(L) lies in U^fi(L); equality and inherited duo self-projectivity when M is self-projective."""
    module = subject.module
    self_projective = is_self_projective(module)
    duo = fully_invariant(module).is_duo
    equalities = 0
    for sub in fully_invariant(module).fi_list:
        families = ufi_qfi(sub)
        u_ids = {k.id for k in families.U_fi}
        q_ids = {k.id for k in families.Q_fi}
        if not q_ids <= u_ids:
            return failed({"L": sub.id, "Q_not_in_U": sorted(q_ids - u_ids)})
        if self_projective:
            if q_ids != u_ids:
                return failed({"L": sub.id, "U_not_in_Q": sorted(u_ids - q_ids)})
            equalities += 1
            if duo and sub.is_proper and not sub.is_zero:
                quotient, _ = quotient_module(module, sub)
                if not (is_self_projective(quotient) and fully_invariant(quotient).is_duo):
                    return failed({"L": sub.id, "quotient_not_spcd": quotient.name})
    return passed(fully_invariant=len(fully_invariant(module).fi_list), equalities_checked=equalities)


@check("lemma_spcd_comm")
def lemma_spcd_comm(subject: Subject):
    """Over a commutative ring: S-PCD, self-projective and duo, and multiplication module coincide."""
    module = subject.module
    if not module.ring.is_commutative():
        return degenerate("commutative ring")
    record = classify_module(module)
    values = {
        "spcd": record.spcd,
        "self_projective_and_duo": record.self_projective and record.duo,
        "multiplication": is_multiplication(module),
    }
    if len(set(values.values())) != 1:
        return failed(values)
    return passed(**values)


@check("lemma_K_prime")
def lemma_K_prime(subject: Subject):
    """Elementwise, annihilator and ideal characterisations of prime submodules agree."""
    subs = enumerate_submodules(subject.module)[:-1]
    primes = []
    for sub in subs:
        tests = prime_tests(sub)
        if not (tests.elementwise == tests.by_annihilators == tests.by_ideals):
            return failed({"K": sub.id, "elementwise": tests.elementwise,
                           "by_annihilators": tests.by_annihilators, "by_ideals": tests.by_ideals})
        if tests.elementwise:
            primes.append(sub.id)
    return passed(proper_submodules=len(subs), prime=primes)


@check("lemma_fp_to_p")
def lemma_fp_to_p(subject: Subject):
    """Every fully prime submodule is prime."""
    spectrum = subject.spec()
    if not spectrum.points:
        return degenerate("non-empty Spec^fp")
    for point in spectrum.points:
        if not prime_tests(point.submodule).elementwise:
            return failed({"K": point.id, "witness": prime_tests(point.submodule).witness})
    ids = point_ids(subject)
    converse = [k.id for k in proper_fi(subject) if k.id not in ids and prime_tests(k).elementwise]
    return passed(points=len(spectrum.points), prime_not_fully_prime=converse)


@check("prop_fp_cog")
def prop_fp_cog(subject: Subject):
    """M is fully prime iff it is cogenerated by each non-zero fully invariant submodule."""
    module = subject.module
    fully_prime = is_fully_prime_in(zero_submodule(module))
    not_cogenerating = [k.id for k in fully_invariant(module).fi_list[1:] if not is_cogenerated_by(module, k)]
    cogenerated = not not_cogenerating
    if fully_prime != cogenerated:
        return failed({"fully_prime": fully_prime, "not_cogenerated_by": not_cogenerating})
    return passed(fully_prime=fully_prime)


@check("prop_fppai")
def prop_fppai(subject: Subject):
    """K -> K/L sends Spec^fp(M) inside Q^fi(L) to Spec^fp(M/L), bijectively for self-projective M."""
    module = subject.module
    nontrivial = proper_fi(subject)[1:]
    if not nontrivial:
        return degenerate("non-zero proper fully invariant submodule")
    self_projective = is_self_projective(module)
    incidental = []
    for sub in nontrivial:
        quotient, projection = quotient_module(module, sub)
        q_ids = {k.id for k in ufi_qfi(sub).Q_fi}
        quotient_points = {p.submodule.elements for p in spec_fp(quotient).points}
        images = {}
        for point in subject.spec().points:
            if point.id in q_ids:
                image = projection.push(point.submodule)
                if image.elements not in quotient_points:
                    return failed({"L": sub.id, "K": point.id, "image": list(image.elements)})
                images[point.id] = image.elements
        bijective = set(images.values()) == quotient_points and len(images) == len(quotient_points)
        if self_projective and not bijective:
            missing = sorted(quotient_points - set(images.values()))
            return failed({"L": sub.id, "quotient_points_not_hit": [list(e) for e in missing]})
        if not self_projective and bijective:
            incidental.append(sub.id)
    details = {"quotients": len(nontrivial), "self_projective": self_projective}
    if not self_projective:
        details["incidental_bijections"] = incidental
    return passed(**details)


@check("cor_MKp")
def cor_MKp(subject: Subject):
    """K fully prime implies M/K fully prime; the converse holds for self-projective M."""
    module = subject.module
    self_projective = is_self_projective(module)
    ids = point_ids(subject)
    for sub in proper_fi(subject):
        fully_prime = sub.id in ids
        quotient, _ = quotient_module(module, sub)
        quotient_fp = is_fully_prime_in(zero_submodule(quotient))
        if fully_prime and not quotient_fp:
            return failed({"K": sub.id, "fully_prime": True, "quotient_fully_prime": False})
        if self_projective and quotient_fp and not fully_prime:
            return failed({"K": sub.id, "fully_prime": False, "quotient_fully_prime": True})
    return passed(converse_checked=self_projective)


@check("rem_duo_coatomic")
def rem_duo_coatomic(subject: Subject):
    """Self-projective M has Max^fi inside Spec^fp, and Max inside Spec^fp when also duo."""
    module = subject.module
    if not is_self_projective(module):
        return degenerate("self-projective")
    ids = point_ids(subject)
    proper = proper_fi(subject)
    maximal_fi = [k for k in proper if not any(k < other for other in proper)]
    missing = [k.id for k in maximal_fi if k.id not in ids]
    if missing:
        return failed({"maximal_fi_not_fully_prime": missing})
    if fully_invariant(module).is_duo:
        missing = [k.id for k in radicals(module).max_list if k.id not in ids]
        if missing:
            return failed({"maximal_not_fully_prime": missing})
    return passed(maximal_fi=[k.id for k in maximal_fi], duo=fully_invariant(module).is_duo)


@check("lemma_semi_local")
def lemma_semi_local(subject: Subject):
    """Self-projective duo modules with finitely many maximal submodules have the complete max-property."""
    module = subject.module
    if not (is_self_projective(module) and fully_invariant(module).is_duo):
        return degenerate("self-projective and duo")
    record = max_property(module)
    if not (record.complete and record.plain):
        bad = [k for k, e in record.L_e.items() if e <= enumerate_submodules(module)[k]]
        return failed({"complete": record.complete, "plain": record.plain, "L_e_inside_L": bad})
    return passed(maximal=len(record.L_e), exhaustive=record.exhaustive)


@check("lemma_minimal")
def lemma_minimal(subject: Subject):
    """Over a self-projective f.i.-coatomic module every proper f.i. L has a minimal fully prime above it."""
    module = subject.module
    record = classify_module(module)
    if not (record.self_projective and record.fi_coatomic):
        return degenerate("self-projective and f.i.-coatomic")
    spectrum = subject.spec()
    for sub in proper_fi(subject):
        if not minimal_above(sub, spectrum):
            return failed({"L": sub.id})
    return passed(checked=len(proper_fi(subject)))
