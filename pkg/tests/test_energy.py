import numpy as np
import pytest

from rrcrystals import reference
from rrcrystals.crystal import GROUND, build_crystal, parse_element, x
from rrcrystals.energy import (FIRST, SECOND, DifferenceMatrix, IntegrityError,
                               build_tensor_arrows, compute_F, difference_matrix,
                               energy_matrix, recover_H)
from rrcrystals.rootsystem import AffineType


def test_phi_phi_edge(affine_type):
    c = build_crystal(affine_type)
    g = build_tensor_arrows(c)
    v = g.vertex(c.ground, c.ground)
    assert g.factor[v, 0] == SECOND
    assert g.split(int(g.head[v, 0])) == (c.ground, c.index(x(c.theta)))


def test_no_first_zero_edge_from_x_theta(affine_type):
    c = build_crystal(affine_type)
    g = build_tensor_arrows(c)
    t = c.index(x(c.theta))
    rows = [g.vertex(t, b) for b in range(len(c))]
    assert not np.any(g.factor[rows, 0] == FIRST)


def test_e6_2_vertex_count():
    assert build_tensor_arrows(build_crystal("E6_2")).n_vertices == 729


def test_edges_shift_F(affine_type):
    g = build_tensor_arrows(build_crystal(affine_type))
    F = difference_matrix(affine_type).entries.ravel()
    tails, nodes = np.nonzero(g.head >= 0)
    step = F[g.head[tails, nodes]] - F[tails]
    assert np.array_equal(step, np.where(g.factor[tails, nodes] == FIRST, -1, 1))


def test_d4_3_examples():
    m = difference_matrix("D4_3")
    assert m["phi", "phi"] == 0
    assert m["phi", "+21"] == 1
    assert m["+21", "-21"] == 6
    assert m.entries[0].tolist() == list(range(8))
    assert recover_H(m, "+21", "-21") == 0


def test_g2_e6_examples():
    assert difference_matrix("G2_1")["r2", "r2"] == 0
    assert difference_matrix("E6_2")["+2321", "phi"] == 17


@pytest.mark.parametrize("key", ["D4_3", "G2_1", "E6_2"])
def test_golden_matrices(key):
    order, rows = reference.golden_matrix(key)
    m = difference_matrix(key)
    assert m.names == order
    assert m.entries.tolist() == rows


def test_F_nonnegative(affine_type):
    assert difference_matrix(affine_type).entries.min() >= 0


def test_H_range(affine_type):
    H = energy_matrix(difference_matrix(affine_type))
    assert set(np.unique(H).tolist()) <= {0, 1, 2}


def test_H_row_phi(affine_type):
    m = difference_matrix(affine_type)
    c = build_crystal(affine_type)
    hd = c.config.ht_delta
    assert recover_H(m, GROUND, GROUND) == 0
    for b in c.elements[1:]:
        assert recover_H(m, GROUND, b) == 1
        assert m[GROUND, b] == hd - b.ht_wt
    t = x(c.theta)
    assert recover_H(m, t, t) == 2


@pytest.mark.parametrize("seed", [0, 1, 17, 2024])
@pytest.mark.parametrize("key", ["G2_1", "D4_3", "E6_2", "F4_1"])
def test_randomized_traversal(key, seed):
    c = build_crystal(key)
    assert np.array_equal(compute_F(c, seed=seed), difference_matrix(key).entries)


def test_randomized_traversal_e8():
    c = build_crystal("E8_1")
    assert np.array_equal(compute_F(c, seed=5), difference_matrix("E8_1").entries)


def test_corrupted_cell_detected():
    m = difference_matrix("D4_3")
    bad = m.entries.copy()
    bad[1, 2] += 1
    broken = DifferenceMatrix(AffineType.D4_3, m.order, bad)
    with pytest.raises(IntegrityError):
        recover_H(broken, "+21", "+11")
    with pytest.raises(IntegrityError):
        energy_matrix(broken)


def test_matrix_lookup_by_element():
    m = difference_matrix("D4_3")
    assert m[parse_element("+21"), parse_element("-21")] == m["+21", "-21"]
    assert m == difference_matrix(AffineType.D4_3)
