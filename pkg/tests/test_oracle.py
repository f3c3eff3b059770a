import random

import pytest

from quiverhh.oracle import (
    Bimodule,
    OracleCapExceeded,
    StructureAlgebra,
    boundary_preserves_weight,
    boundary_squares_to_zero,
    build_l0n,
    build_lmn,
    formula_dims,
    ground_field,
    hh0_of_l0n,
    hochschild_dims,
    induced_maps_check,
    l0n_blocks,
    matrix_algebra,
    path_algebra,
    regular_bimodule,
    separable_check,
)
from quiverhh.paths import closed_paths
from quiverhh.quiver import cycle, e_n, line, parse_quiver, rose


def test_small_algebras():
    M2 = matrix_algebra(2)
    assert hochschild_dims(M2, regular_bimodule(M2), 2) == [1, 0, 0]
    k = ground_field()
    assert hochschild_dims(k, regular_bimodule(k), 3) == [1, 0, 0, 0]
    for n in (2, 3):
        Mn = matrix_algebra(n)
        assert hochschild_dims(Mn, regular_bimodule(Mn), 1, 3) == [1, 0]


def test_path_algebra_of_acyclic_quiver():
    # hereditary and acyclic: one HH_0 class per vertex, nothing above
    A = path_algebra(line(3))
    assert A.dim == 6
    assert hochschild_dims(A, regular_bimodule(A), 2) == [3, 0, 0]
    A = path_algebra(parse_quiver("u v\nx: u -> v\ny: u -> v\n"))
    assert hochschild_dims(A, regular_bimodule(A), 1) == [2, 0]
    with pytest.raises(ValueError):
        path_algebra(rose(1))


def test_l0n_shapes():
    A = build_l0n(rose(2), 1)
    assert A.dim == 4
    for q in (rose(2), e_n(2), line(3)):
        assert build_l0n(q, 0).dim == len(q.vertices)
    blocks = [(v, m, len(ps)) for v, m, ps in l0n_blocks(e_n(2), 1)]
    assert blocks == [("w", 0, 1), ("v", 1, 2), ("w", 1, 2)]
    assert build_l0n(e_n(2), 1).dim == 9
    with pytest.raises(OracleCapExceeded):
        build_l0n(rose(2), 4)


def test_lmn_shapes():
    assert build_lmn(rose(2), 1, 1).dim == 8
    assert build_lmn(rose(1), 2, 1).dim == 1
    assert build_lmn(cycle(2), 2, 1).dim == 2
    with pytest.raises(ValueError):
        build_lmn(e_n(2), 1, 1)
    with pytest.raises(ValueError):
        build_lmn(rose(2), 0, 1)


def test_weight_one_example():
    A = build_l0n(rose(2), 1)
    assert hochschild_dims(A, build_lmn(rose(2), 1, 1, A), 1) == [2, 0]


@pytest.mark.parametrize("q", [rose(1), rose(2), cycle(2)], ids=["rose1", "rose2", "cycle2"])
@pytest.mark.parametrize("n", [1, 2])
@pytest.mark.parametrize("m", [1, 2, -1, -2])
def test_bar_complex_matches_closed_paths(q, n, m):
    A = build_l0n(q, n)
    M = build_lmn(q, m, n, A)
    dims = hochschild_dims(A, M, 1)
    assert dims == [len(closed_paths(q, abs(m)).closed_paths), 0] == formula_dims(q, m, n, 1)


def test_hh0_of_l0n_examples():
    r = hh0_of_l0n(rose(2), 1)
    assert (r.bar_complex, r.formula, r.agree) == (1, 1, True)
    r = hh0_of_l0n(e_n(2), 1)
    # factors k, M_2, M_2: three classes; the uncorrected sink count says 2
    assert (r.bar_complex, r.formula, r.uncorrected) == (3, 3, 2)
    r = hh0_of_l0n(line(2), 2)
    assert (r.bar_complex, r.formula) == (2, 2) and r.agree


@pytest.mark.parametrize(
    "q", [rose(1), rose(2), cycle(2), cycle(3), e_n(1), e_n(2), line(2), line(3), parse_quiver("a b\n")]
)
@pytest.mark.parametrize("n", [0, 1, 2])
def test_hh0_formula_agrees(q, n):
    for char in (0, 2):
        assert hh0_of_l0n(q, n, char).agree


def test_separability():
    M2 = matrix_algebra(2)
    assert separable_check(M2, regular_bimodule(M2))
    for q in (rose(2), cycle(2), rose(1)):
        A = build_l0n(q, 1)
        assert separable_check(A, regular_bimodule(A))
        for m in (1, -1, 2):
            assert separable_check(A, build_lmn(q, m, 1, A))
    for q in (e_n(2), line(3)):
        A = build_l0n(q, 1)
        assert separable_check(A, regular_bimodule(A))


def test_boundary_squares_to_zero():
    A = build_l0n(rose(2), 1)
    for M in (regular_bimodule(A), build_lmn(rose(2), 1, 1, A), build_lmn(rose(2), -2, 1, A)):
        assert boundary_squares_to_zero(A, M, 2)
    P = path_algebra(line(3))
    assert boundary_squares_to_zero(P, regular_bimodule(P), 2)
    assert boundary_squares_to_zero(P, regular_bimodule(P), 3)


def test_boundary_preserves_weight():
    P = path_algebra(line(3))
    for k in (1, 2):
        assert boundary_preserves_weight(P, regular_bimodule(P), k)


def test_construction_checks_catch_bad_structure():
    # x 1 = 0 breaks the unit law
    with pytest.raises(ValueError):
        StructureAlgebra(["1", "x"], [[{0: 1}, {1: 1}], [{}, {}]], {0: 1})
    # x x = 1 + x is associative but breaks the grading |x| = 1
    with pytest.raises(ValueError):
        StructureAlgebra(["1", "x"], [[{0: 1}, {1: 1}], [{1: 1}, {0: 1, 1: 1}]], {0: 1}, weights=[0, 1])
    k = ground_field()
    with pytest.raises(ValueError):
        Bimodule(k, ["m"], [[{0: 2}]], [[{0: 1}]])


def test_cap_on_chain_dimension():
    A = build_l0n(rose(2), 2)
    with pytest.raises(OracleCapExceeded):
        hochschild_dims(A, regular_bimodule(A), 3)
    assert hochschild_dims(A, regular_bimodule(A), 2) == [1, 0, 0]


@pytest.mark.parametrize("q", [rose(2), cycle(2)], ids=["rose2", "cycle2"])
@pytest.mark.parametrize("m", [1, 2, -2])
def test_induced_maps_deterministic(q, m):
    r = induced_maps_check(q, m, 1)
    assert r.ok, r.to_json()
    assert r.orientation == "sigma"
    assert r.hh0_dims == (r.v_dim, r.v_dim)


@pytest.mark.parametrize("seed", range(4))
def test_induced_maps_random_choice(seed):
    rng = random.Random(seed)
    two = parse_quiver("x y\na: x -> x\nb: x -> y\nc: y -> x\nd: y -> y\n")
    for q in (rose(2), cycle(2), two):
        r = induced_maps_check(q, 2, 1, rng=rng)
        assert r.ok, r.to_json()


def test_induced_map_examples():
    r = induced_maps_check(rose(2), 1, 1)
    assert r.inclusion_matrix == [[1, 0], [0, 1]] and r.phi_matrix == r.inclusion_matrix
    r = induced_maps_check(cycle(2), 2, 1)
    assert r.inclusion_matrix == [[0, 1], [1, 0]]
    r = induced_maps_check(rose(2), 2, 1)
    # aa and bb fixed, ab and ba swapped
    assert r.inclusion_matrix == [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]]


def test_choice_must_end_at_each_vertex():
    with pytest.raises(ValueError):
        induced_maps_check(cycle(2), 2, 1, choice={"v0": "c0", "v1": "c0"})


def test_strict_mode_passes_quietly_when_consistent():
    assert induced_maps_check(cycle(2), 2, 1, strict=True).ok
