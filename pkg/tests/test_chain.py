import random

import numpy as np
import pytest

from hypermap_codes import (
    Hypermap,
    Permutation,
    apply_basis_change,
    boundary_pair,
    choose_special_darts,
    dart_vertex_sum,
    face_dart_sum,
    hyperedge_dart_sum,
    nonspecial_darts,
    project_nonspecial,
)
from hypermap_codes import gf2
from util import random_hypermap, random_invertible, torus_hypermap

TORUS_P2 = np.array(
    [
        [1, 0, 0, 1, 1, 1],
        [0, 1, 0, 0, 0, 1],
        [1, 1, 1, 1, 0, 0],
        [0, 0, 1, 0, 1, 0],
    ],
    dtype=np.uint8,
)


def support(vec):
    return [int(i) + 1 for i in np.flatnonzero(vec)]


def test_face_dart_sums_torus():
    H, _ = torus_hypermap()
    # faces ordered by smallest dart: {1,7}, {2,8}, {3,5}, {4,6}
    assert support(face_dart_sum(H, 0)) == [1, 7]
    assert support(face_dart_sum(H, 1)) == [2, 8]
    assert support(face_dart_sum(H, 2)) == [3, 5]
    assert support(face_dart_sum(H, 3)) == [4, 6]


def test_face_dart_sum_single_dart():
    H = Hypermap(Permutation.identity(1), Permutation.identity(1))
    assert support(face_dart_sum(H, 0)) == [1]


def test_dart_vertex_sum_torus():
    H, _ = torus_hypermap()
    assert dart_vertex_sum(H, 1).tolist() == [1, 1]
    # tau^-1(2) = 1 sits on the other vertex orbit
    assert dart_vertex_sum(H, 2).tolist() == [1, 1]


def test_dart_vertex_sum_loop_cancels():
    # Both ends of the single loop edge sit on the same vertex.
    H = Hypermap.from_cycles(2, [[1, 2]], [[1, 2]])
    assert dart_vertex_sum(H, 1).tolist() == [0]


def test_hyperedge_dart_sums():
    H, _ = torus_hypermap()
    assert support(hyperedge_dart_sum(H, 0)) == [1, 2, 3, 4]
    assert support(hyperedge_dart_sum(H, 1)) == [5, 6, 7, 8]
    single = Hypermap(Permutation.identity(1), Permutation.identity(1))
    assert support(hyperedge_dart_sum(single, 0)) == [1]


def test_project_replaces_special_darts():
    H, S = torus_hypermap()
    w1_w7 = np.zeros(8, dtype=np.uint8)
    w1_w7[[0, 6]] = 1
    # w7 is special: replaced by w5 + w6 + w8
    assert project_nonspecial(H, S, w1_w7).tolist() == [1, 0, 0, 1, 1, 1]
    w3_w5 = np.zeros(8, dtype=np.uint8)
    w3_w5[[2, 4]] = 1
    assert project_nonspecial(H, S, w3_w5).tolist() == [1, 1, 1, 1, 0, 0]


def test_project_identity_on_nonspecial_input():
    H, S = torus_hypermap()
    basis = nonspecial_darts(H, S)
    assert basis == (1, 2, 4, 5, 6, 8)
    x = np.zeros(8, dtype=np.uint8)
    x[[1, 7]] = 1  # w2 + w8, nothing special
    coords = project_nonspecial(H, S, x)
    assert coords.tolist() == [0, 1, 0, 0, 0, 1]
    # re-embedding and projecting again changes nothing
    back = np.zeros(8, dtype=np.uint8)
    for k, d in enumerate(basis):
        back[d - 1] = coords[k]
    assert np.array_equal(project_nonspecial(H, S, back), coords)


def test_project_kills_full_hyperedge_sums():
    H, S = torus_hypermap()
    for e in range(2):
        assert not project_nonspecial(H, S, hyperedge_dart_sum(H, e)).any()


def test_edge_relation_also_cancels_in_vertex_map():
    H, _ = torus_hypermap()
    for e in range(2):
        total = np.zeros(2, dtype=np.uint8)
        for d in H.hyperedges().orbits[e]:
            total ^= dart_vertex_sum(H, d)
        assert not total.any()


def test_boundary_pair_torus_golden():
    H, S = torus_hypermap()
    bp = boundary_pair(H, S)
    assert np.array_equal(bp.p1, np.ones((2, 6), dtype=np.uint8))
    assert np.array_equal(bp.p2, TORUS_P2)
    assert bp.basis.kind == "special"
    assert bp.basis.darts == (1, 2, 4, 5, 6, 8)


def test_boundary_rows_sum_to_zero():
    H, S = torus_hypermap()
    bp = boundary_pair(H, S)
    assert not (bp.p2.sum(axis=0) % 2).any()
    # the last face row is the sum of the other three
    assert np.array_equal(bp.p2[3], (bp.p2[0] + bp.p2[1] + bp.p2[2]) % 2)


def test_boundary_pair_chain_condition_random():
    rng = random.Random(41)
    for _ in range(40):
        H = random_hypermap(rng, 2, 16)
        bp = boundary_pair(H, choose_special_darts(H))
        assert not ((bp.p1 @ bp.p2.T) % 2).any()
        assert not (bp.p2.sum(axis=0) % 2).any()


def test_basis_change_identity_is_noop():
    H, S = torus_hypermap()
    bp = boundary_pair(H, S)
    out = apply_basis_change(bp, gf2.identity(6))
    assert np.array_equal(out.p1, bp.p1)
    assert np.array_equal(out.p2, bp.p2)
    assert out.basis.kind == "special"


def test_basis_change_golden_rows():
    # New basis: first vector stays, second becomes the sum of the first two.
    H, S = torus_hypermap()
    T = gf2.elementary_matrix(gf2.ElementaryFactor(1, 2, 6))
    out = apply_basis_change(boundary_pair(H, S), T)
    assert out.p1.tolist() == [[1, 0, 1, 1, 1, 1]] * 2
    assert out.p2.tolist() == [
        [1, 0, 0, 1, 1, 1],
        [1, 1, 0, 0, 0, 1],
        [0, 1, 1, 1, 0, 0],
        [0, 0, 1, 0, 1, 0],
    ]
    assert out.basis.kind == "general"


def test_noncanonical_face_row_pinned_by_expansion():
    """Pin the one row of the changed-basis face matrix that is easy to slip on.

    The face with boundary w2 + w8 re-expands over the changed basis
    {w1, w1+w2, w4, w5, w6, w8} as w1 + (w1+w2) + w8, coordinates
    (1,1,0,0,0,1).  The similar-looking (1,1,1,0,0,0) is *also* orthogonal
    to the changed vertex matrix, so the orthogonality invariant alone
    cannot catch a slip here; only the expansion fixes the row.
    """
    H, S = torus_hypermap()
    T = gf2.elementary_matrix(gf2.ElementaryFactor(1, 2, 6))
    out = apply_basis_change(boundary_pair(H, S), T)
    expansion = [1, 1, 0, 0, 0, 1]
    lookalike = [1, 1, 1, 0, 0, 0]
    row_for_w2_w8_face = out.p2[1]
    assert row_for_w2_w8_face.tolist() == expansion
    assert row_for_w2_w8_face.tolist() != lookalike
    for candidate in (expansion, lookalike):
        assert not ((out.p1 @ np.array(candidate, dtype=np.uint8)) % 2).any()


def test_basis_change_round_trip():
    rng = random.Random(43)
    H, S = torus_hypermap()
    bp = boundary_pair(H, S)
    for _ in range(20):
        T = random_invertible(rng, 6)
        out = apply_basis_change(apply_basis_change(bp, T), gf2.invert(T))
        assert np.array_equal(out.p1, bp.p1)
        assert np.array_equal(out.p2, bp.p2)
        assert out.basis.kind == "special"


def test_basis_change_rejects_singular():
    H, S = torus_hypermap()
    with pytest.raises(gf2.SingularMatrixError):
        apply_basis_change(boundary_pair(H, S), np.zeros((6, 6), dtype=np.uint8))

