from fractions import Fraction

import pytest

from conftest import coordinate_flag_exists, coordinate_subspace, random_invertible, sl2, so3
from lierig.catalog import heisenberg
from lierig.errors import AlgebraMismatchError, DimensionMismatchError, NotALieAlgebraError
from lierig.exact import RatMatrix, inverse, unit_vector
from lierig.lie import (
    StructureConstants,
    Subspace,
    ad,
    bracket,
    center,
    change_basis,
    complete_solvability,
    derived_series_dims,
    induced_algebra,
    is_completely_solvable,
    is_ideal,
    is_lie_algebra,
    is_nilpotent,
    is_solvable,
    is_subalgebra,
    jacobi_violations,
    killing_form,
    killing_signature,
    lower_central_dims,
)
from lierig.lie.core import NON_REAL_SPECTRUM, NOT_SOLVABLE, derived_algebra, require_lie


def test_from_brackets_folds_reversed_pairs():
    g = StructureConstants.from_brackets(3, {(1, 0): [0, 0, 1]})
    assert g.entries == (((0, 1), (0, 0, -1)),)
    assert g.basis_bracket(1, 0) == (0, 0, 1)
    assert g.basis_bracket(0, 0) == (0, 0, 0)


def test_from_brackets_drops_zero_brackets():
    g = StructureConstants.from_brackets(3, {(0, 1): {2: 1}, (2, 1): {2: 0}})
    assert g == heisenberg(1)


def test_self_bracket_is_rejected():
    with pytest.raises(NotALieAlgebraError):
        StructureConstants.from_brackets(2, {(0, 0): {1: 1}})


def test_bracket_index_out_of_range():
    with pytest.raises(DimensionMismatchError):
        StructureConstants.from_brackets(2, {(0, 2): {1: 1}})


def test_bracket_is_bilinear_and_antisymmetric():
    g = heisenberg(1)
    x, y = (1, 2, 0), (3, -1, 5)
    assert bracket(g, x, y) == (0, 0, -7)
    assert bracket(g, y, x) == (0, 0, 7)
    assert bracket(g, x, x) == (0, 0, 0)


def test_ad_columns_are_brackets():
    g = heisenberg(1)
    a = ad(g, (1, 0, 0))
    assert a.column(1) == bracket(g, (1, 0, 0), (0, 1, 0))
    assert a == g.ad_basis[0]


def test_structure_constants_are_hashable():
    assert hash(heisenberg(1)) == hash(StructureConstants.from_brackets(3, {(0, 1): {2: 1}}))


@pytest.mark.parametrize("name", ["h1", "a2", "N5_3", "g4_normal", "g4_2", "g7_9", "g8_37", "g8_38"])
def test_catalog_algebras_satisfy_jacobi(algebra, name):
    assert is_lie_algebra(algebra(name))


@pytest.mark.parametrize("name", ["g8_37_printed", "g8_38_printed"])
def test_printed_dimension_eight_tables_fail_on_x3_x4_x6(algebra, name):
    g = algebra(name)
    triples = [v[:3] for v in jacobi_violations(g)]
    assert (2, 3, 5) in triples
    with pytest.raises(NotALieAlgebraError) as exc:
        require_lie(g)
    assert exc.value.triple == triples[0]


def test_printed_g7_9_is_not_lie(algebra):
    assert not is_lie_algebra(algebra("g7_9_printed"))
    assert is_lie_algebra(algebra("g7_10_printed"))


@pytest.mark.parametrize("name", [
    "h1", "a2", "N5_3", "g4_twisted", "g5_2", "g7_9", "g7_10", "g7_10_printed", "g8_37",
    "heisenberg_form_1_1", "g8_37_printed", "g8_38_printed", "g7_9_printed",
])
def test_ad_is_a_homomorphism_exactly_for_lie_algebras(algebra, name):
    # ad([e_i, e_j]) = [ad e_i, ad e_j] on basis pairs is the Jacobi identity
    g = algebra(name)
    adjoints = g.ad_basis
    homomorphism = all(
        ad(g, g.basis_bracket(i, j)) == adjoints[i].commutator(adjoints[j])
        for i in range(g.dim)
        for j in range(i + 1, g.dim)
    )
    assert homomorphism == is_lie_algebra(g)
    if name.endswith("_printed") and name != "g7_10_printed":
        assert not homomorphism


def test_subspace_canonical_form():
    a = Subspace.span(3, [(1, 1, 0), (0, 1, 0)])
    b = Subspace.span(3, [(1, 0, 0), (2, 3, 0)])
    assert a == b
    assert a.dim == 2
    assert a.contains((5, -1, 0))
    assert not a.contains((0, 0, 1))
    assert a.coordinates((2, 3, 0)) == (2, 3)
    assert (a + Subspace.span(3, [(0, 0, 1)])) == Subspace.whole(3)
    assert Subspace.zero(3).is_subspace_of(a)


def test_center_of_n5_3(algebra):
    assert center(algebra("N5_3")) == coordinate_subspace(5, [3, 4])


def test_center_of_heisenberg():
    assert center(heisenberg(2)) == coordinate_subspace(5, [4])


def test_ideals_and_subalgebras():
    g = heisenberg(1)
    z = center(g)
    assert is_ideal(g, z)
    assert is_subalgebra(g, coordinate_subspace(3, [0]))
    assert not is_ideal(sl2(), coordinate_subspace(3, [0]))
    assert induced_algebra(g, z) == StructureConstants.abelian(1)


def test_induced_algebra_needs_closed_subspace():
    with pytest.raises(AlgebraMismatchError):
        induced_algebra(heisenberg(1), coordinate_subspace(3, [0, 1]))


def test_series(algebra):
    assert derived_series_dims(algebra("g4_normal")) == [4, 2, 0]
    assert lower_central_dims(algebra("g4_normal")) == [4, 2]
    assert lower_central_dims(algebra("N5_3")) == [5, 3, 2, 0]
    assert derived_series_dims(sl2()) == [3]
    assert is_nilpotent(algebra("N5_3"))
    assert is_solvable(algebra("g7_9"))
    assert not is_nilpotent(algebra("g7_9"))
    assert not is_solvable(so3())
    assert derived_algebra(algebra("g4_normal")) == coordinate_subspace(4, [2, 3])


def test_killing_form_by_hand(algebra):
    # ad(X1) = diag(0, 0, 1, 0), ad(X2) = diag(0, 0, 0, 1) on (X1, X2, Y1, Y2)
    k = killing_form(algebra("g4_normal"))
    assert k == RatMatrix([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]])
    # ad(X1) = identity on Y, ad(X2) = rotation on Y: tr = 2, tr(rot^2) = -2
    k = killing_form(algebra("g4_twisted"))
    assert k == RatMatrix([[2, 0, 0, 0], [0, -2, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]])


@pytest.mark.parametrize("name,expected", [
    ("g4_normal", (2, 0, 2)),
    ("g4_twisted", (1, 1, 2)),
    ("g4_2", (1, 1, 2)),
    ("g7_split", (2, 0, 5)),
    ("g7_9", (1, 1, 5)),
    ("g8_34", (2, 2, 4)),
    ("g8_35", (3, 1, 4)),
    ("g8_36", (2, 1, 5)),
    ("g8_37", (1, 2, 5)),
    ("g8_38", (2, 1, 5)),
    ("heisenberg_form_1_0", (2, 0, 3)),
    ("heisenberg_form_1_1", (1, 1, 3)),
    ("heisenberg_form_2_0", (3, 0, 5)),
    ("heisenberg_form_2_1", (2, 1, 5)),
    ("heisenberg_form_2_2", (1, 2, 5)),
])
def test_killing_signature(algebra, name, expected):
    assert killing_signature(algebra(name)) == expected


def test_killing_signature_of_simple_algebras():
    assert killing_signature(sl2()) == (2, 1, 0)
    assert killing_signature(so3()) == (0, 3, 0)


def test_change_basis_identity_and_inverse(algebra, rng):
    g = algebra("g4_twisted")
    assert change_basis(g, RatMatrix.identity(4)) == g
    p = random_invertible(4, rng)
    h = change_basis(g, p)
    assert is_lie_algebra(h)
    assert change_basis(h, inverse(p)) == g
    assert killing_signature(h) == killing_signature(g)


def test_scaled_algebra_is_isomorphic():
    g = heisenberg(1)
    scaled = g.scaled(Fraction(1, 2))
    p = RatMatrix.diagonal([1, 1, 2])
    assert change_basis(g, p) == scaled


@pytest.mark.parametrize("name,expected", [
    ("g4_normal", True),
    ("g4_twisted", False),
    ("g4_2", False),
    ("a2", True),
    ("h1", True),
    ("r2", True),
])
def test_complete_solvability_against_flag_search(algebra, name, expected):
    g = algebra(name)
    assert is_completely_solvable(g) is expected
    assert coordinate_flag_exists(g) is expected


def test_complete_solvability_reasons(algebra):
    verdict = complete_solvability(algebra("g4_twisted"))
    assert verdict.reason == NON_REAL_SPECTRUM
    assert verdict.index == 1
    assert not verdict
    assert complete_solvability(sl2()).reason == NOT_SOLVABLE
    assert not coordinate_flag_exists(sl2())


@pytest.mark.parametrize("name,expected", [
    ("heisenberg_form_1_0", True),
    ("heisenberg_form_2_0", True),
    ("heisenberg_form_1_1", False),
    ("heisenberg_form_2_1", False),
    ("heisenberg_form_2_2", False),
    ("g7_split", True),
    ("g7_9", False),
])
def test_normal_forms_are_the_completely_solvable_ones(algebra, name, expected):
    assert is_completely_solvable(algebra(name)) is expected


def test_unit_vector_bracket_matches_table(algebra):
    g = algebra("N5_3")
    assert bracket(g, unit_vector(5, 1), unit_vector(5, 2)) == unit_vector(5, 4)
