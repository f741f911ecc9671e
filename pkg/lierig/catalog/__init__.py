"""Fixtures: the algebras, tori and nilradical rows the engine verifies."""

from lierig.catalog.catalog import (
    Catalog,
    CatalogEntry,
    TableRow,
    default_catalog,
    entries,
    get,
    heisenberg,
    heisenberg_labels,
    heisenberg_rigid_form,
    table1_pairs,
)
