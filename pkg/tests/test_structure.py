from itertools import combinations

import pytest

from conftest import brute_force_nilradical, coordinate_subspace, random_invertible, sl2
from lierig.catalog import heisenberg
from lierig.errors import NotATorusError, NotSolvableError
from lierig.exact import RatMatrix, unit_vector
from lierig.lie import (
    StructureConstants,
    change_basis,
    direct_sum,
    distinguish,
    fingerprint,
    nilradical,
    nilradical_algebra,
    semidirect_sum,
)
from lierig.lie.structure import INDISTINGUISHABLE, PROVABLY_NON_ISOMORPHIC

# semidirect basis (T1, T2, Y1..Y5) -> catalog basis (X1..X5, then the torus)
TORUS_LAST = RatMatrix.from_columns([unit_vector(7, c) for c in (2, 3, 4, 5, 6, 0, 1)])


@pytest.mark.parametrize("name", [
    "a2", "h1", "r2", "g4_normal", "g4_twisted", "g4_2", "g5_2", "N5_3",
    "heisenberg_form_1_0", "heisenberg_form_1_1",
])
def test_nilradical_matches_brute_force(algebra, name):
    g = algebra(name)
    assert nilradical(g) == brute_force_nilradical(g)


@pytest.mark.parametrize("name,expected", [
    ("g4_normal", [2, 3]),
    ("g4_2", [0, 1]),
    ("g5_2", [0, 1, 2]),
    ("g7_9", [0, 1, 2, 3, 4]),
    ("g7_10", [0, 1, 2, 3]),
    ("r2", [1]),
])
def test_nilradical_basis(algebra, name, expected):
    g = algebra(name)
    assert nilradical(g) == coordinate_subspace(g.dim, expected)


def test_nilradical_of_nilpotent_is_everything(algebra):
    assert nilradical(algebra("N5_3")).dim == 5
    assert nilradical(StructureConstants.abelian(3)).dim == 3


def test_nilradical_needs_solvable():
    with pytest.raises(NotSolvableError):
        nilradical(sl2())


def test_nilradical_of_g7_9_is_n5_3(algebra):
    assert fingerprint(nilradical_algebra(algebra("g7_9"))) == fingerprint(algebra("N5_3"))


def test_nilradical_survives_basis_change(algebra, rng):
    g = algebra("g5_2")
    h = change_basis(g, random_invertible(5, rng))
    assert nilradical(h).dim == 3
    assert fingerprint(nilradical_algebra(h)) == fingerprint(heisenberg(1))


def test_semidirect_sum_on_a2(catalog, algebra):
    a2 = catalog.get("a2")
    assert semidirect_sum(a2.constants, a2.torus("t1")) == algebra("g4_normal")
    assert semidirect_sum(a2.constants, a2.torus("t2")) == algebra("g4_twisted")


def test_semidirect_sum_reproduces_dimension_seven_pair(catalog, algebra):
    n5 = catalog.get("N5_3")
    split = semidirect_sum(n5.constants, n5.torus("t1"))
    assert change_basis(split, TORUS_LAST) == algebra("g7_split")
    scale, rotation = n5.torus("t2")
    twisted = semidirect_sum(n5.constants, [rotation, scale])
    assert change_basis(twisted, TORUS_LAST) == algebra("g7_9")


def test_semidirect_sum_needs_a_torus():
    with pytest.raises(NotATorusError):
        semidirect_sum(StructureConstants.abelian(2), [RatMatrix([[0, 1], [0, 0]])])


def test_direct_sum(algebra):
    r2 = algebra("r2")
    g = direct_sum(r2, r2)
    assert g.dim == 4
    assert g.basis_bracket(2, 3) == (0, 0, 0, 1)
    assert direct_sum(direct_sum(g, r2), r2) == algebra("r2_4")
    assert direct_sum(heisenberg(1), StructureConstants.abelian(1)) == algebra("N3_R")


def test_fingerprint_of_abelian_plane():
    fp = fingerprint(StructureConstants.abelian(2))
    assert (
        fp.dim, fp.derived_dims, fp.lcs_dims, fp.center_dim, fp.nilradical_dim,
        fp.nilradical_lcs_dims, fp.der_dim, fp.h0, fp.h1, fp.h2, fp.killing_signature,
        fp.completely_solvable,
    ) == (2, (2, 0), (2, 0), 2, 2, (2, 0), 4, 2, 4, 2, (0, 0, 2), True)
    assert list(fp.as_dict()) == [
        "dim", "derived_dims", "lcs_dims", "center_dim", "nilradical_dim", "nilradical_lcs_dims",
        "der_dim", "h0", "h1", "h2", "killing_signature", "completely_solvable",
    ]


def test_fingerprint_is_a_basis_invariant(algebra, rng):
    g = algebra("g4_twisted")
    assert fingerprint(change_basis(g, random_invertible(4, rng))) == fingerprint(g)


def test_dimension_four_real_forms(algebra):
    verdict = distinguish(algebra("g4_normal"), algebra("g4_twisted"))
    assert verdict.kind == PROVABLY_NON_ISOMORPHIC
    assert verdict.field == "killing_signature"
    assert (verdict.left, verdict.right) == ((2, 0, 2), (1, 1, 2))
    assert str(verdict) == "ProvablyNonIsomorphic: killing_signature"


def test_dimension_seven_real_forms(algebra):
    verdict = distinguish(algebra("g7_split"), algebra("g7_9"))
    assert verdict.non_isomorphic
    assert verdict.field == "killing_signature"


def test_same_algebra_is_indistinguishable(algebra):
    verdict = distinguish(algebra("g4_2"), algebra("g4_twisted"))
    assert verdict.kind == INDISTINGUISHABLE
    assert not verdict.non_isomorphic
    assert str(verdict) == "Indistinguishable"


def test_heisenberg_one_rotation_matches_g5_2(algebra):
    assert not distinguish(algebra("heisenberg_form_1_1"), algebra("g5_2")).non_isomorphic


@pytest.mark.parametrize("n", [1, 2])
def test_heisenberg_forms_are_pairwise_distinct(algebra, n):
    forms = [algebra(f"heisenberg_form_{n}_{k}") for k in range(n + 1)]
    for a, b in combinations(forms, 2):
        assert distinguish(a, b).non_isomorphic
    nil = fingerprint(heisenberg(n))
    for g in forms:
        assert fingerprint(nilradical_algebra(g)) == nil
