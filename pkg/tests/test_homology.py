import random

import pytest

from matpairs import randgen
from matpairs.errors import ScaleCapExceeded
from matpairs.homology import (
    HomologyResult,
    abelian_group,
    boundary,
    boundary_matrix,
    chain_basis,
    enumerate_classes,
    face_E,
    face_E_pair,
    face_N,
    face_N_pair,
    homology,
    is_degenerate,
    key_of,
    presentation_h1,
    system_key,
)
from matpairs.matrix import Matrix
from matpairs.pairs import MatrixPair, dual, join, meet
from matpairs.rings import ZZ, F

import oracles


@pytest.mark.parametrize("q", [2, 3, 5, 7])
@pytest.mark.parametrize("arity", [1, 2, 3])
def test_class_counts_match_subspace_counts(q, arity):
    classes = enumerate_classes(q, arity)
    assert len(classes) == len(set(classes)) == oracles.subspace_count(q, arity)


def test_class_count_examples():
    assert len(enumerate_classes(2, 1)) == 2
    assert len(enumerate_classes(3, 2)) == 6
    assert len(enumerate_classes(7, 3)) == 116


@pytest.mark.parametrize("q", [2, 3])
def test_classes_have_distinct_row_spaces(q):
    for arity in (1, 2, 3):
        spans = {oracles.span(c.rref.tolist(), q, arity) for c in enumerate_classes(q, arity)}
        assert len(spans) == len(enumerate_classes(q, arity))


def test_scale_caps():
    with pytest.raises(ScaleCapExceeded):
        enumerate_classes(37, 1)
    with pytest.raises(ScaleCapExceeded):
        enumerate_classes(2, 4)


def test_class_key_text():
    ring = F(5)
    assert str(system_key(ring, [[1, 2]])) == "[1,2]"
    assert str(key_of(MatrixPair.top(ring, 2))) == "1_2"
    assert str(key_of(MatrixPair.bottom(ring, 2))) == "0_2"


# faces

def test_face_examples_over_f5():
    ring = F(5)
    top1 = key_of(MatrixPair.top(ring, 2))
    for s in range(1, 5):
        for r in range(1, 5):
            c = system_key(ring, [[1, s, r]])
            assert face_N(c, 0) == system_key(ring, [[s, r]]) == system_key(ring, [[1, ring.inv(s) * r % 5]])
            assert face_E(c, 0) == top1
    for n in (2, 3):
        top, bottom = key_of(MatrixPair.top(ring, n)), key_of(MatrixPair.bottom(ring, n))
        for i in range(n):
            assert face_N(top, i) == key_of(MatrixPair.top(ring, n - 1))
            assert face_E(bottom, i) == key_of(MatrixPair.bottom(ring, n - 1))
            assert face_N(bottom, i) == key_of(MatrixPair.bottom(ring, n - 1))
            assert face_E(top, i) == key_of(MatrixPair.top(ring, n - 1))


def test_face_index_out_of_range():
    c = system_key(F(3), [[1, 1]])
    with pytest.raises(IndexError):
        face_N(c, 2)
    with pytest.raises(IndexError):
        face_E(c, -1)


@pytest.mark.parametrize("q", [2, 3, 5])
def test_faces_preserve_meets_and_joins(q):
    rng = random.Random(q)
    ring = F(q)
    for _ in range(60):
        n = rng.randint(2, 3)
        p, r = randgen.pair(rng, ring, n), randgen.pair(rng, ring, n)
        i = rng.randrange(n)
        assert key_of(face_N_pair(meet(p, r), i)) == key_of(meet(face_N_pair(p, i), face_N_pair(r, i)))
        assert key_of(face_E_pair(join(p, r), i)) == key_of(join(face_E_pair(p, i), face_E_pair(r, i)))


@pytest.mark.parametrize("q", [2, 3, 5])
def test_dual_faces(q):
    rng = random.Random(10 + q)
    ring = F(q)
    for _ in range(50):
        n = rng.randint(2, 3)
        p = randgen.pair(rng, ring, n)
        for i in range(n):
            assert key_of(face_E_pair(dual(p), i)) == key_of(dual(face_N_pair(p, i)))
            assert key_of(face_N_pair(dual(p), i)) == key_of(dual(face_E_pair(p, i)))


@pytest.mark.parametrize("q", [2, 3])
def test_face_relations_on_all_ternary_classes(q):
    for c in enumerate_classes(q, 3):
        for j in range(3):
            for i in range(j):
                assert face_N(face_N(c, j), i) == face_N(face_N(c, i), j - 1)
                assert face_E(face_E(c, j), i) == face_E(face_E(c, i), j - 1)
                assert face_N(face_E(c, j), i) == face_E(face_N(c, i), j - 1)
                assert face_E(face_N(c, j), i) == face_N(face_E(c, i), j - 1)


def test_faces_on_pairs_that_are_not_systems():
    ring = F(3)
    p = MatrixPair(Matrix(ring, [[1], [0]]), Matrix(ring, [[1, 2], [0, 1]]))
    assert face_N_pair(p, 0).A == Matrix(ring, [[2], [1]])
    assert face_E_pair(p, 1).B == Matrix(ring, [[1, 2], [0, 1]])


# degeneracy

def test_degeneracy_examples():
    ring = F(5)
    assert is_degenerate(key_of(MatrixPair.top(ring, 2)))
    for r in range(1, 5):
        assert not is_degenerate(system_key(ring, [[1, r]]))
    assert is_degenerate(system_key(ring, [[1, 0]]))
    assert is_degenerate(system_key(ring, [[0, 1]]))
    assert is_degenerate(key_of(MatrixPair.bottom(ring, 2)))
    with pytest.raises(ValueError):
        is_degenerate(system_key(ring, [[1]]))


@pytest.mark.parametrize("q", [2, 3, 5, 7])
def test_binary_degeneracy_is_symmetric(q):
    for c in enumerate_classes(q, 2):
        assert (face_E(c, 0) == face_N(c, 0)) == (face_E(c, 1) == face_N(c, 1))


@pytest.mark.parametrize("q", [2, 3, 5, 7, 11])
def test_nondegenerate_binary_census(q):
    ring = F(q)
    assert set(chain_basis(q, 1)) == {system_key(ring, [[1, r]]) for r in range(1, q)}


# boundaries

def test_binary_boundaries_vanish():
    for q in (2, 3, 5, 7):
        assert all(not boundary(c) for c in chain_basis(q, 1))
        assert boundary_matrix(q, 1).is_zero()


def test_ternary_boundary_rows_over_f5():
    ring = F(5)
    for s in range(1, 5):
        for r in range(1, 5):
            expected = {}
            for rr, coef in ((r, 1), (s, -1), (pow(s, -1, 5) * r % 5, -1)):
                k = system_key(ring, [[1, rr]])
                expected[k] = expected.get(k, 0) + coef
            expected = {k: v for k, v in expected.items() if v}
            assert boundary(system_key(ring, [[1, s, r]])) == expected


@pytest.mark.parametrize("q", [2, 3, 5, 7])
def test_boundary_squares_to_zero(q):
    D0, D1, D2 = (boundary_matrix(q, n) for n in (0, 1, 2))
    assert D0.shape == (len(enumerate_classes(q, 1)), 1)
    assert (D1 @ D0).is_zero()
    assert (D2 @ D1).is_zero()


def test_boundary_matrix_rows_match_boundary():
    q = 3
    D2 = boundary_matrix(q, 2)
    rows, cols = chain_basis(q, 2), chain_basis(q, 1)
    for i, c in enumerate(rows):
        b = boundary(c)
        assert {cols[j]: D2[i, j] for j in range(len(cols)) if D2[i, j]} == b


# homology

def test_abelian_group_examples():
    assert str(abelian_group(Matrix(ZZ, [[2, 0], [0, 3]]))) == "Z/6"
    assert str(abelian_group(Matrix(ZZ, [[1, 1]]))) == "Z"
    assert str(abelian_group(Matrix(ZZ, [[1]]))) == "0"
    assert HomologyResult(0, (2, 4)).order == 8
    assert HomologyResult(2).order is None


@pytest.mark.parametrize("q", [2, 3, 5])
def test_h0_is_infinite_cyclic(q):
    h = homology(q, 0)
    assert h.free_rank == 1 and h.torsion == ()
    assert str(h) == "Z"


@pytest.mark.parametrize("q", [2, 3, 5, 7, 11, 13])
def test_h1_is_cyclic_of_expected_order(q):
    h = homology(q, 1)
    assert h.free_rank == 0 and len(h.torsion) <= 1
    assert h.order == oracles.h1_order(q)
    assert presentation_h1(q) == h


def test_h1_examples():
    assert str(homology(2, 1)) == "0"
    assert homology(5, 1).torsion == (2,)
    assert homology(7, 1).torsion == (3,)
    assert str(presentation_h1(5)) == "Z/2"
    assert str(presentation_h1(2)) == "0"


def test_homology_rejects_other_dimensions():
    with pytest.raises(ValueError):
        homology(3, 2)
