import time
from math import comb

import pytest

from lierig.catalog import heisenberg
from lierig.errors import CochainDegreeError
from lierig.lie import (
    StructureConstants,
    center,
    cochain_space,
    derivation_space,
    differential_matrix,
    full_report,
    h_dim,
    is_algebraically_rigid,
)
from lierig.lie.cohomology import colex_position, colex_subsets, differential_rank

SMALL = ["a2", "h1", "r2", "N5_3", "g4_normal", "g4_twisted", "g4_2", "g5_2", "heisenberg_form_1_1"]
RIGID = ["g4_normal", "g4_twisted", "g4_2", "g5_2", "g6_4", "g7_split", "g7_9", "g7_10", "r2"]
RIGID_DIM_8 = ["r2_4", "g8_34", "g8_35", "g8_36", "g8_37", "g8_38", "g8_39", "g8_40"]


@pytest.mark.parametrize("n", [3, 5, 8])
@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_colex_positions_enumerate_subsets(n, k):
    subsets = colex_subsets(n, k)
    assert len(subsets) == comb(n, k)
    assert [colex_position(s) for s in subsets] == list(range(len(subsets)))


def test_cochain_index_is_a_bijection(algebra):
    space = cochain_space(algebra("N5_3"), 2)
    assert space.dim == 5 * 10
    seen = set()
    for flat in range(space.dim):
        target, subset = space.entry(flat)
        assert space.index(target, subset) == flat
        seen.add((target, subset))
    assert len(seen) == space.dim


def test_degree_bounds(algebra):
    g = algebra("h1")
    with pytest.raises(CochainDegreeError):
        cochain_space(g, 4)
    with pytest.raises(CochainDegreeError):
        differential_matrix(g, 3)
    with pytest.raises(CochainDegreeError):
        h_dim(g, 3)


def test_d0_is_minus_adjoint(algebra):
    # (d0 x)(y) = [y, x] = -ad(x) y
    g = algebra("g4_twisted")
    d0 = differential_matrix(g, 0)
    for i, a in enumerate(g.ad_basis):
        assert d0.column(i) == tuple(-v for v in a.vec())


@pytest.mark.parametrize("name", SMALL + ["g7_9"])
def test_differential_squares_to_zero(algebra, name):
    g = algebra(name)
    assert (differential_matrix(g, 1) @ differential_matrix(g, 0)).is_zero()
    assert (differential_matrix(g, 2) @ differential_matrix(g, 1)).is_zero()


@pytest.mark.parametrize("name", SMALL)
def test_low_degree_identities(algebra, name):
    g = algebra(name)
    report = full_report(g)
    assert report.h0 == center(g).dim
    der = derivation_space(g)
    assert report.h1 == der.dim - der.inner_dim


def test_h1_and_a2_values(algebra):
    assert full_report(algebra("h1")).h_dims == (1, 4, 5)
    assert full_report(algebra("a2")).h_dims == (2, 4, 2)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_abelian_cohomology_is_all_cochains(n):
    g = StructureConstants.abelian(n)
    assert full_report(g).h_dims == (n, n * n, n * comb(n, 2))


def test_nilpotent_algebras_are_not_rigid(algebra):
    assert h_dim(algebra("a2"), 2) == 2
    assert h_dim(algebra("h1"), 2) > 0
    assert h_dim(heisenberg(2), 2) > 0
    assert h_dim(algebra("N5_3"), 2) > 0
    assert not is_algebraically_rigid(algebra("g7_10_printed"))


@pytest.mark.parametrize("name", RIGID)
def test_rigid_algebras(algebra, name):
    assert is_algebraically_rigid(algebra(name))


@pytest.mark.slow
@pytest.mark.parametrize("name", RIGID_DIM_8)
def test_rigid_algebras_of_dimension_eight(algebra, name):
    assert h_dim(algebra(name), 2) == 0


@pytest.mark.parametrize("n,k", [(1, 0), (1, 1), (2, 0), (2, 1), (2, 2)])
def test_heisenberg_forms_are_rigid(algebra, n, k):
    assert is_algebraically_rigid(algebra(f"heisenberg_form_{n}_{k}"))


def test_report_dimensions(algebra):
    report = full_report(algebra("g7_9"))
    assert report.c_dims == (7, 49, 147, 245)
    assert report.z_dims[0] == report.h0
    assert report.b_dims == report.d_ranks[:2]
    assert report.as_dict()["h_dims"] == list(report.h_dims)


@pytest.mark.slow
def test_dimension_eight_second_differential_is_fast(algebra):
    g = algebra("g8_40")
    differential_rank.cache_clear()
    differential_matrix.cache_clear()
    started = time.perf_counter()
    r = differential_rank(g, 2)
    elapsed = time.perf_counter() - started
    assert differential_matrix(g, 2).shape == (448, 224)
    assert 0 < r <= 224
    assert elapsed < 10
