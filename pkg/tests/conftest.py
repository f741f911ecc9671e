import random
from itertools import combinations

import pytest

from lierig.catalog import default_catalog
from lierig.exact import RatMatrix
from lierig.lie import StructureConstants, Subspace
from lierig.lie.core import is_ideal, is_nilpotent, induced_algebra


@pytest.fixture(scope="session")
def catalog():
    return default_catalog()


@pytest.fixture(scope="session")
def algebra(catalog):
    """Structure constants of a catalog entry, stubs resolved."""

    def _get(name):
        return catalog.resolve(name).constants

    return _get


@pytest.fixture
def rng():
    return random.Random(20240611)


def sl2():
    # basis (h, e, f)
    return StructureConstants.from_brackets(3, {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {0: 1}})


def so3():
    return StructureConstants.from_brackets(3, {(0, 1): {2: 1}, (1, 2): {0: 1}, (2, 0): {1: 1}})


def random_invertible(n, rng):
    """Unit lower times unit upper triangular, small integer entries."""
    lower = [[1 if i == j else (rng.randint(-2, 2) if i > j else 0) for j in range(n)] for i in range(n)]
    upper = [[1 if i == j else (rng.randint(-2, 2) if i < j else 0) for j in range(n)] for i in range(n)]
    return RatMatrix(lower) @ RatMatrix(upper)


def coordinate_subspace(n, indices):
    return Subspace.span(n, [[1 if k == i else 0 for k in range(n)] for i in indices])


def brute_force_nilradical(g):
    """Largest nilpotent ideal spanned by basis vectors; only meaningful when the nilradical is one."""
    n = g.dim
    best = Subspace.zero(n)
    for size in range(1, n + 1):
        for indices in combinations(range(n), size):
            s = coordinate_subspace(n, indices)
            if is_ideal(g, s) and is_nilpotent(induced_algebra(g, s)):
                best = best + s
    return best


def coordinate_flag_exists(g):
    """A chain of coordinate ideals with one-dimensional steps."""
    n = g.dim

    def extend(indices):
        if len(indices) == n:
            return True
        for k in range(n):
            if k in indices:
                continue
            grown = indices | {k}
            if is_ideal(g, coordinate_subspace(n, sorted(grown))) and extend(grown):
                return True
        return False

    return extend(frozenset())
