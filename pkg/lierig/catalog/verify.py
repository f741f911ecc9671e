"""
Catalog Verification
====================

Recomputes every expected property recorded in the catalog index, checks the
torus pairs, and checks each nilradical row: forms sharing a row must have
fingerprint-equal nilradicals and be pairwise provably non-isomorphic.

Per-entry work is independent and can be spread over worker processes.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from lierig.catalog.catalog import Catalog, CatalogEntry, default_catalog
from lierig.lie.cohomology import full_report
from lierig.lie.core import (
    is_completely_solvable,
    is_solvable,
    jacobi_violations,
    killing_signature,
)
from lierig.lie.derivations import (
    Torus,
    derivation_space,
    diagonal_derivations,
    is_split_torus,
    is_torus,
    nonconjugacy_certificate,
)
from lierig.lie.structure import distinguish, fingerprint, nilradical_algebra

logger = logging.getLogger(__name__)


@dataclass
class TorusCheck:
    name: str
    is_torus: bool
    split: Optional[bool] = None

    def as_dict(self) -> dict:
        return {"name": self.name, "is_torus": self.is_torus, "split": self.split}


@dataclass
class EntryCheck:
    name: str
    dim: int
    erratum_of: Optional[str] = None
    lie: bool = True
    jacobi_triple: Optional[Tuple[int, int, int]] = None
    h2: Optional[int] = None
    solvable: Optional[bool] = None
    completely_solvable: Optional[bool] = None
    nilradical_dim: Optional[int] = None
    diagonal_derivations_dim: Optional[int] = None
    tori: List[TorusCheck] = field(default_factory=list)
    nonconjugacy: Optional[str] = None
    failures: List[str] = field(default_factory=list)

    @property
    def rigid(self) -> Optional[bool]:
        return None if self.h2 is None else self.h2 == 0

    @property
    def ok(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "dim": self.dim,
            "erratum_of": self.erratum_of,
            "lie": self.lie,
            "jacobi_triple": list(self.jacobi_triple) if self.jacobi_triple else None,
            "h2": self.h2,
            "rigid": self.rigid,
            "solvable": self.solvable,
            "completely_solvable": self.completely_solvable,
            "nilradical_dim": self.nilradical_dim,
            "diagonal_derivations_dim": self.diagonal_derivations_dim,
            "tori": [t.as_dict() for t in self.tori],
            "nonconjugacy": self.nonconjugacy,
            "failures": list(self.failures),
        }


@dataclass
class RowCheck:
    dimension: int
    nilradical: str
    forms: List[str]
    checked: List[str]
    verdicts: List[Tuple[str, str, str]] = field(default_factory=list)
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        return {
            "dimension": self.dimension,
            "nilradical": self.nilradical,
            "forms": list(self.forms),
            "checked": list(self.checked),
            "verdicts": [list(v) for v in self.verdicts],
            "failures": list(self.failures),
        }


@dataclass
class CatalogReport:
    entries: List[EntryCheck]
    rows: List[RowCheck]

    @property
    def ok(self) -> bool:
        return all(e.ok for e in self.entries) and all(r.ok for r in self.rows)

    @property
    def conjecture_audit(self) -> Dict[str, int]:
        """Diagonal derivation dimension of every rigid entry."""
        return {
            e.name: e.diagonal_derivations_dim
            for e in self.entries
            if e.rigid and e.diagonal_derivations_dim is not None
        }

    def as_dict(self) -> dict:
        return {
            "ok": self.ok,
            "entries": [e.as_dict() for e in self.entries],
            "rows": [r.as_dict() for r in self.rows],
            "conjecture_audit": self.conjecture_audit,
        }


def _expect(check: EntryCheck, key: str, expected, actual):
    if actual != expected:
        check.failures.append(f"{key}: expected {expected}, got {actual}")


def verify_entry(entry: CatalogEntry, catalog: Catalog) -> EntryCheck:
    g = entry.constants
    started = time.perf_counter()
    check = EntryCheck(entry.name, g.dim, erratum_of=entry.erratum_of)
    expected = entry.expected

    violations = jacobi_violations(g)
    check.lie = not violations
    if violations:
        check.jacobi_triple = violations[0][:3]
    _expect(check, "lie", expected.get("lie", True), check.lie)
    if not check.lie:
        return check

    report = full_report(g)
    check.h2 = report.h2
    check.solvable = is_solvable(g)
    if "rigid" in expected:
        _expect(check, "rigid", expected["rigid"], check.rigid)
    if "h2" in expected:
        _expect(check, "h2", expected["h2"], report.h2)
    if "h1" in expected:
        _expect(check, "h1", expected["h1"], report.h1)
    if "der_dim" in expected:
        _expect(check, "der_dim", expected["der_dim"], derivation_space(g).dim)
    if "killing_signature" in expected:
        _expect(check, "killing_signature", tuple(expected["killing_signature"]), killing_signature(g))

    if check.solvable:
        check.completely_solvable = is_completely_solvable(g)
        if "completely_solvable" in expected:
            _expect(check, "completely_solvable", expected["completely_solvable"], check.completely_solvable)
        nil = nilradical_algebra(g)
        check.nilradical_dim = nil.dim
        if "nilradical_dim" in expected:
            _expect(check, "nilradical_dim", expected["nilradical_dim"], nil.dim)
        target = expected.get("nilradical")
        if target:
            reference = catalog.resolve(target)
            if reference.constants is not None and fingerprint(nil) != fingerprint(reference.constants):
                check.failures.append(f"nilradical does not match {target}")
    elif expected.get("rigid"):
        check.failures.append("expected a solvable algebra")

    if check.rigid:
        check.diagonal_derivations_dim = diagonal_derivations(g).dim

    for block in entry.tori:
        tc = TorusCheck(block.name, is_torus(g, block.matrices))
        if tc.is_torus:
            tc.split = is_split_torus(Torus(g, block.matrices, block.name))
        else:
            check.failures.append(f"torus {block.name} is not a torus")
        check.tori.append(tc)
    if entry.nonconjugate_tori:
        a, b = entry.nonconjugate_tori
        ta, tb = entry.torus(a), entry.torus(b)
        if ta is None or tb is None:
            check.failures.append(f"tori {a}, {b} not both present")
        else:
            cert = nonconjugacy_certificate(Torus(g, ta, a), Torus(g, tb, b))
            if cert is None:
                check.failures.append(f"no non-conjugacy certificate for {a}, {b}")
            else:
                check.nonconjugacy = cert.reason

    logger.debug(f"verified {entry.name} in {time.perf_counter() - started:.2f}s")
    return check


def verify_row(row, catalog: Catalog) -> RowCheck:
    concrete = [catalog.resolve(name) for name in row.forms]
    concrete = [e for e in concrete if e.constants is not None]
    rc = RowCheck(row.dimension, row.nilradical, list(row.forms), [e.name for e in concrete])
    nil_prints = {e.name: fingerprint(nilradical_algebra(e.constants)) for e in concrete}
    if len(set(nil_prints.values())) > 1:
        rc.failures.append("nilradicals of the row differ")
    for e in concrete:
        if e.dim != row.dimension:
            rc.failures.append(f"{e.name} has dimension {e.dim}, row says {row.dimension}")
    reference = None
    if row.nilradical == "abelian":
        for name, fp in nil_prints.items():
            if fp.lcs_dims[-1] != 0 or len(fp.lcs_dims) > 2:
                rc.failures.append(f"nilradical of {name} is not abelian")
    else:
        reference = catalog.resolve(row.nilradical)
    if reference is not None and reference.constants is not None:
        ref_print = fingerprint(reference.constants)
        for name, fp in nil_prints.items():
            if fp != ref_print:
                rc.failures.append(f"nilradical of {name} does not match {row.nilradical}")
    for a, b in combinations(concrete, 2):
        verdict = distinguish(a.constants, b.constants)
        rc.verdicts.append((a.name, b.name, str(verdict)))
        if not verdict.non_isomorphic:
            rc.failures.append(f"{a.name} and {b.name} are not separated by their fingerprints")
    return rc


def _verify_named(args) -> EntryCheck:
    data_dir, name = args
    catalog = default_catalog(data_dir)
    return verify_entry(catalog.get(name), catalog)


def verify_catalog(catalog: Catalog, workers: int = 1) -> CatalogReport:
    """Verify every concrete entry and every nilradical row."""
    started = time.perf_counter()
    names = [e.name for e in catalog.concrete()]
    if workers > 1:
        logger.info(f"verifying {len(names)} entries on {workers} processes")
        with ProcessPoolExecutor(max_workers=workers) as pool:
            checks = list(pool.map(_verify_named, [(catalog.data_dir, n) for n in names]))
    else:
        checks = [verify_entry(catalog.get(n), catalog) for n in names]
    rows = [verify_row(row, catalog) for row in catalog.table1_pairs()]
    report = CatalogReport(checks, rows)
    logger.info(f"catalog verified in {time.perf_counter() - started:.1f}s, ok={report.ok}")
    for name, dim in report.conjecture_audit.items():
        if dim == 0:
            logger.warning(f"{name} is rigid but has no nonzero diagonal derivation")
    return report
