"""
Algebra Catalog
===============

Fixtures for every algebra whose brackets are known here, indexed by
``data/catalog.json``:

- ``file`` entries are ``.lie`` documents next to the index.
- ``generated`` entries come from a parametric family (abelian, Heisenberg,
  rigid Heisenberg forms, direct sums of other entries).
- ``stub`` entries are normal forms known only by name; ``realized_by``
  points at a concrete entry with the same constants when one exists.
- ``erratum_of`` marks a literal transcription kept next to its corrected entry.
"""

import json
import logging
import os
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, NamedTuple, Optional, Tuple

from lierig.errors import InvalidParameterError, UnknownEntryError
from lierig.exact import RatMatrix
from lierig.frontend.dsl import AlgebraDocument, TorusBlock, parse
from lierig.lie.core import StructureConstants
from lierig.lie.structure import direct_sum

logger = logging.getLogger(__name__)

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")


def heisenberg(n: int) -> StructureConstants:
    """h_n: [X_{2i-1}, X_{2i}] = X_{2n+1} for i = 1..n (dimension 2n + 1)."""
    if n < 1:
        raise InvalidParameterError(f"heisenberg(n) needs n >= 1, got {n}")
    z = 2 * n
    return StructureConstants.from_brackets(2 * n + 1, {(2 * i, 2 * i + 1): {z: 1} for i in range(n)})


def heisenberg_labels(n: int) -> Tuple[str, ...]:
    return tuple(f"X{i}" for i in range(1, 2 * n + 2)) + tuple(f"Y{i}" for i in range(1, n + 2))


def heisenberg_rigid_form(n: int, k: int) -> StructureConstants:
    """Real form of the rigid extension of h_n with ``k`` rotation generators.

    Basis X1..X_{2n+1}, Y1..Y_{n+1}. For i <= k, Y_i rotates (X_{2i-1}, X_{2i});
    for k < i <= n it acts by diag(1, -1) on that pair; Y_{n+1} scales
    X1..X_{2n} by 1 and X_{2n+1} by 2. ``k = 0`` is the split form.
    """
    if n < 1:
        raise InvalidParameterError(f"heisenberg_rigid_form needs n >= 1, got {n}")
    if not 0 <= k <= n:
        raise InvalidParameterError(f"heisenberg_rigid_form needs 0 <= k <= n, got k={k}, n={n}")
    dim = 3 * n + 2
    z = 2 * n

    def y(i):
        return 2 * n + i  # Y_i, 1-based i

    brackets = {(2 * i, 2 * i + 1): {z: 1} for i in range(n)}
    for i in range(1, n + 1):
        a, b = 2 * i - 2, 2 * i - 1
        if i <= k:
            brackets[(y(i), a)] = {b: 1}
            brackets[(y(i), b)] = {a: -1}
        else:
            brackets[(y(i), a)] = {a: 1}
            brackets[(y(i), b)] = {b: -1}
    for j in range(2 * n):
        brackets[(y(n + 1), j)] = {j: 1}
    brackets[(y(n + 1), z)] = {z: 2}
    return StructureConstants.from_brackets(dim, brackets)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    provenance: str
    constants: Optional[StructureConstants] = None
    labels: Tuple[str, ...] = ()
    tori: Tuple[TorusBlock, ...] = ()
    expected: Dict = field(default_factory=dict, compare=False, hash=False)
    stub: bool = False
    realized_by: Optional[str] = None
    erratum_of: Optional[str] = None
    nonconjugate_tori: Tuple[str, ...] = ()

    @property
    def dim(self) -> Optional[int]:
        return self.constants.dim if self.constants is not None else None

    @property
    def document(self) -> AlgebraDocument:
        if self.constants is None:
            raise UnknownEntryError(self.name)
        return AlgebraDocument.from_constants(self.name, self.constants, self.labels, self.tori)

    def torus(self, name: str) -> Optional[Tuple[RatMatrix, ...]]:
        for block in self.tori:
            if block.name == name:
                return block.matrices
        return None


class TableRow(NamedTuple):
    nilradical: str
    forms: List[str]
    dimension: int


class Catalog:
    """
    Algebra catalog backed by a JSON index and ``.lie`` files.

    Args:
        data_dir: directory holding ``catalog.json``; defaults to the
            package data.
    """

    def __init__(self, data_dir: Optional[str] = None):
        self.data_dir = data_dir or DATA_DIR
        index_file = os.path.join(self.data_dir, "catalog.json")
        with open(index_file, "r", encoding="utf-8") as f:
            index = json.load(f)
        self._raw = index["entries"]
        self._rows = index.get("nilradical_rows", [])
        self._entries: Dict[str, CatalogEntry] = {}
        for name in self._raw:
            self._load(name)
        logger.info(f"Loaded {len(self._entries)} catalog entries from {index_file}")

    def _load(self, name: str, stack: Tuple[str, ...] = ()) -> CatalogEntry:
        if name in self._entries:
            return self._entries[name]
        if name not in self._raw:
            raise UnknownEntryError(name)
        if name in stack:
            raise InvalidParameterError(f"catalog entry {name} is defined in terms of itself")
        data = self._raw[name]
        constants, labels, tori = None, (), ()
        if "file" in data:
            path = os.path.join(self.data_dir, data["file"])
            with open(path, "r", encoding="utf-8") as f:
                doc = parse(f.read())
            constants, labels, tori = doc.constants(), doc.labels, doc.tori
        elif "generated" in data:
            constants, labels = self._generate(data["generated"], stack + (name,))
        entry = CatalogEntry(
            name=name,
            provenance=data.get("provenance", ""),
            constants=constants,
            labels=tuple(labels),
            tori=tuple(tori),
            expected=dict(data.get("expected", {})),
            stub=bool(data.get("stub", False)),
            realized_by=data.get("realized_by"),
            erratum_of=data.get("erratum_of"),
            nonconjugate_tori=tuple(data.get("nonconjugate_tori", ())),
        )
        self._entries[name] = entry
        return entry

    def _generate(self, spec: Dict, stack: Tuple[str, ...]):
        family = spec["family"]
        if family == "abelian":
            n = spec["n"]
            return StructureConstants.abelian(n), tuple(f"X{i + 1}" for i in range(n))
        if family == "heisenberg":
            n = spec["n"]
            return heisenberg(n), tuple(f"X{i + 1}" for i in range(2 * n + 1))
        if family == "heisenberg_rigid_form":
            return heisenberg_rigid_form(spec["n"], spec["k"]), heisenberg_labels(spec["n"])
        if family == "direct_sum":
            parts = [self._load(p, stack).constants for p in spec["parts"]]
            g = parts[0]
            for h in parts[1:]:
                g = direct_sum(g, h)
            return g, tuple(f"X{i + 1}" for i in range(g.dim))
        raise InvalidParameterError(f"unknown generated family {family!r}")

    def get(self, name: str) -> CatalogEntry:
        try:
            return self._entries[name]
        except KeyError:
            raise UnknownEntryError(name) from None

    def list(self) -> List[CatalogEntry]:
        return list(self._entries.values())

    def names(self) -> List[str]:
        return list(self._entries)

    def concrete(self) -> List[CatalogEntry]:
        """Entries with structure constants (stubs excluded)."""
        return [e for e in self._entries.values() if e.constants is not None]

    def resolve(self, name: str) -> CatalogEntry:
        """The entry itself, or the entry realizing a stub."""
        entry = self.get(name)
        if entry.constants is None and entry.realized_by:
            return self.get(entry.realized_by)
        return entry

    def table1_pairs(self) -> List[TableRow]:
        return [TableRow(row["nilradical"], list(row["forms"]), row["dimension"]) for row in self._rows]


@lru_cache(maxsize=8)
def default_catalog(data_dir: Optional[str] = None) -> Catalog:
    return Catalog(data_dir)


def get(name: str) -> CatalogEntry:
    return default_catalog().get(name)


def entries() -> List[CatalogEntry]:
    return default_catalog().list()


def table1_pairs() -> List[TableRow]:
    return default_catalog().table1_pairs()
