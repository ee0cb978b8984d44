"""
Catalog of modules and rings the checks are replayed on.
"""

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from src.algebra.module import FiniteModule, build_module
from src.algebra.presentation import quotient_module
from src.algebra.ring import FiniteRing, build_ring, upper_triangular_spec
from src.homs.invariance import fully_invariant
from src.spectra.spectrum import Spectrum, spec_fp
from src.topology.space import FiniteTopology, build_topology
from src.utils.config import DEFAULT_CONFIG, Config
from src.utils.errors import ModtopError, ParseError
from src.utils.specs import is_module_spec

logger = logging.getLogger(__name__)


@dataclass
class CatalogEntry:
    name: str
    spec: Dict[str, Any]
    tags: List[str] = field(default_factory=list)

    @property
    def kind(self) -> str:
        return "module" if is_module_spec(self.spec) else "ring"


@dataclass(eq=False)
class Subject:
    """A module or ring under test.

    ``spectrum`` overrides the computed Spec^fp; topologies are then built from it.
    """

    name: str
    kind: str
    module: Optional[FiniteModule] = None
    ring: Optional[FiniteRing] = None
    spectrum: Optional[Spectrum] = None
    tags: List[str] = field(default_factory=list)
    _topologies: Dict[str, FiniteTopology] = field(default_factory=dict, repr=False)

    @classmethod
    def of_module(cls, module: FiniteModule, name: Optional[str] = None,
                  spectrum: Optional[Spectrum] = None, tags: Optional[List[str]] = None) -> "Subject":
        return cls(name or module.name, "module", module, module.ring, spectrum, list(tags or []))

    @classmethod
    def of_ring(cls, ring: FiniteRing, name: Optional[str] = None,
                tags: Optional[List[str]] = None) -> "Subject":
        return cls(name or ring.name, "ring", None, ring, None, list(tags or []))

    def spec(self) -> Spectrum:
        return self.spectrum if self.spectrum is not None else spec_fp(self.module)

    def topology(self, variant: str = "full") -> FiniteTopology:
        if self.spectrum is None:
            return build_topology(self.module, variant)
        if variant not in self._topologies:
            self._topologies[variant] = build_topology(self.spectrum, variant)
        return self._topologies[variant]

    def describe(self) -> Dict[str, Any]:
        if self.kind == "module":
            return {"name": self.name, "kind": "module", "order": self.module.order,
                    "ring": self.ring.name, "tags": self.tags}
        return {"name": self.name, "kind": "ring", "order": self.ring.order, "tags": self.tags}


@dataclass
class SkippedEntry:
    name: str
    error: str
    error_type: str

    def to_dict(self) -> Dict[str, str]:
        return {"name": self.name, "error": self.error, "error_type": self.error_type}


def _zn(n: int) -> Dict[str, Any]:
    return {"kind": "Zn", "n": n}


def _identity(k: int) -> List[List[int]]:
    return [[int(i == j) for j in range(k)] for i in range(k)]


def default_catalog() -> List[CatalogEntry]:
    """Regular Z_n modules, a few direct sums and the upper-triangular ring over Z_2."""
    entries = [CatalogEntry(f"Z{n}", {"kind": "regular", "ring": _zn(n)}, ["regular", "commutative"])
               for n in range(2, 31)]
    for p in (2, 3):
        entries.append(CatalogEntry(
            f"Z{p}+Z{p} over Z{p}",
            {"kind": "direct_sum", "ring": _zn(p),
             "summands": [{"kind": "regular"}, {"kind": "regular"}]},
            ["semisimple", "non-duo"]))
    entries.append(CatalogEntry(
        "Z2+Z4 over Z4",
        {"kind": "direct_sum", "ring": _zn(4),
         "summands": [{"kind": "matrices", "add_cyclic": [2], "matrices": [[[1]]]}, {"kind": "regular"}]},
        ["non-duo"]))
    entries.append(CatalogEntry(
        "Z2+Z4 over Z8",
        {"kind": "matrices", "ring": _zn(8), "add_cyclic": [2, 4], "matrices": [_identity(2)]},
        ["non-duo"]))
    entries.append(CatalogEntry(
        "Z4+Z9 over Z36",
        {"kind": "matrices", "ring": _zn(36), "add_cyclic": [4, 9], "matrices": [_identity(2)]},
        ["cyclic", "max-property"]))
    ut2 = upper_triangular_spec(2)
    entries.append(CatalogEntry("UT2(Z2) left", {"kind": "regular", "ring": ut2, "side": "left"},
                                ["non-commutative"]))
    entries.append(CatalogEntry("UT2(Z2) right", {"kind": "regular", "ring": ut2, "side": "right"},
                                ["non-commutative"]))

    for n in range(2, 31):
        entries.append(CatalogEntry(f"ring Z{n}", _zn(n), ["ring", "commutative"]))
    entries.append(CatalogEntry("ring Z2xZ4", {"kind": "product", "factors": [_zn(2), _zn(4)]},
                                ["ring", "commutative"]))
    entries.append(CatalogEntry("ring UT2(Z2)", ut2, ["ring", "non-commutative"]))
    return entries


def load_catalog(path: str) -> List[CatalogEntry]:
    """Read a catalog file: a list of entries or an object with an ``entries`` list.

    Each entry is ``{"name": ..., "spec": ring-or-module spec, "tags": [...]}``.
    """
    catalog_path = Path(path)
    try:
        with open(catalog_path, encoding="utf-8") as f:
            doc = json.load(f)
    except OSError as e:
        raise ParseError(f"cannot read catalog {catalog_path}: {e.strerror}")
    except json.JSONDecodeError as e:
        raise ParseError(f"{catalog_path}: line {e.lineno} column {e.colno}: {e.msg}")

    raw = doc.get("entries") if isinstance(doc, dict) else doc
    if not isinstance(raw, list):
        raise ParseError(f"{catalog_path}: expected a list of entries", pointer="/entries")
    entries = []
    for i, item in enumerate(raw):
        if not isinstance(item, dict) or not isinstance(item.get("spec"), dict):
            raise ParseError(f"{catalog_path}: entry needs a 'spec' object", pointer=f"/entries/{i}")
        entries.append(CatalogEntry(str(item.get("name", f"entry{i}")), item["spec"], list(item.get("tags", []))))
    logger.info(f"Loaded {len(entries)} catalog entries from {catalog_path}")
    return entries


def quotient_subjects(subject: Subject) -> List[Subject]:
    """M/L for every non-zero proper fully invariant L."""
    module = subject.module
    subjects = []
    for sub in fully_invariant(module).fi_list[1:-1]:
        quotient, _ = quotient_module(module, sub)
        subjects.append(Subject.of_module(quotient, f"{subject.name} / {sub.label}",
                                          tags=subject.tags + ["quotient"]))
    return subjects


def build_subjects(entries: List[CatalogEntry], config: Config = DEFAULT_CONFIG,
                   quotients: bool = True) -> Tuple[List[Subject], List[SkippedEntry]]:
    """Build every entry; failures become skipped entries carrying the error.

    Quotients follow their module directly so the report keeps catalog order.
    """
    subjects: List[Subject] = []
    skipped: List[SkippedEntry] = []
    for entry in entries:
        try:
            if entry.kind == "module":
                subject = Subject.of_module(build_module(entry.spec, config), entry.name, tags=entry.tags)
                subjects.append(subject)
                if quotients:
                    subjects.extend(quotient_subjects(subject))
            else:
                subjects.append(Subject.of_ring(build_ring(entry.spec, config), entry.name, tags=entry.tags))
        except ModtopError as e:
            logger.warning(f"Skipping catalog entry {entry.name}: {e}")
            skipped.append(SkippedEntry(entry.name, str(e), type(e).__name__))
    logger.info(f"Built {len(subjects)} subjects, skipped {len(skipped)} entries")
    return subjects, skipped
