from fractions import Fraction

import pytest

from bhmirror import catalog
from bhmirror.potentials import (ModelError, aut_group, cy_check, dual_group,
                                 exponential_grading_element,
                                 krawitz_dual_elements, lattice_data,
                                 make_potential, sl_subgroup,
                                 subgroup_closure, transpose_potential)

F = Fraction


def test_weights_cubic():
    p = make_potential(catalog.FERMAT_CUBIC)
    assert p.weights == (F(1, 3), F(1, 3), F(1, 3))
    assert p.k == 1
    assert p.det() == 27


def test_weights_chain():
    p = make_potential([[2, 1], [0, 2]])
    assert p.weights == (F(1, 4), F(1, 2))
    assert p.k == F(3, 4)
    assert not p.cy_index_integral


def test_make_potential_rejects():
    with pytest.raises(ModelError):
        make_potential([[1, 2], [2, 4]])       # singular
    with pytest.raises(ModelError):
        make_potential([[2, -1], [0, 2]])      # negative exponent
    with pytest.raises(ModelError):
        make_potential([[2, 0, 0], [0, 2, 0]])  # not square
    with pytest.raises(ModelError):
        make_potential([[2, 0], [0, 2]], [1, 0])  # zero coefficient


def test_aut_group_order_is_det():
    for matrix in (catalog.FERMAT_CUBIC, catalog.FERMAT_442, [[2, 1], [0, 2]]):
        p = make_potential(matrix)
        assert aut_group(p).order == abs(p.det())


def test_j_in_sl_iff_k_integral():
    p = make_potential(catalog.FERMAT_CUBIC)
    j = exponential_grading_element(p)
    assert sum(j).denominator == 1
    assert j in sl_subgroup(p)


def test_dual_group_cubic_matches_direct_scan():
    p = make_potential(catalog.FERMAT_CUBIC)
    g = catalog.j_group(p)
    gd = dual_group(p, g)
    assert gd.order == 9
    assert tuple(sorted(gd.elements)) == krawitz_dual_elements(p, g)


def test_dual_group_scan_battery():
    for name, matrix, gens in catalog.battery():
        p = make_potential(matrix)
        g = subgroup_closure(p, gens)
        gd = dual_group(p, g)
        assert tuple(sorted(gd.elements)) == krawitz_dual_elements(p, g), name


def test_double_dual_and_order_product():
    for name, matrix, gens in catalog.battery():
        p = make_potential(matrix)
        g = subgroup_closure(p, gens)
        gd = dual_group(p, g)
        gdd = dual_group(transpose_potential(p), gd)
        assert gdd.elements == g.elements, name
        assert g.order * gd.order == abs(p.det()), name


def test_cy_check_battery():
    for name, matrix, gens in catalog.battery():
        p = make_potential(matrix)
        g = subgroup_closure(p, gens)
        chk = cy_check(p, g)
        assert chk["cy_type"], name
        assert chk["central_charge"] == p.d - 2 * p.k


def test_lattice_membership():
    p = make_potential(catalog.FERMAT_CUBIC)
    data = lattice_data(p, catalog.j_group(p))
    # J generates N/N_0; (1/3,1/3,1/3) is in N but (1/3,0,0) is not
    assert data.in_n((F(1, 3), F(1, 3), F(1, 3)))
    assert not data.in_n((F(1, 3), F(0), F(0)))
    # M = {m : sum m_j = 0 mod 3} strictly inside M_0^dual = Z^3
    assert data.in_m((1, 1, 1))
    assert not data.in_m((1, 0, 0))
    assert data.deg_in_m and data.deg_dual_in_n


def test_invariant_factors():
    p = make_potential(catalog.FERMAT_CUBIC)
    assert catalog.j_group(p).invariant_factors() == (3,)
    assert sl_subgroup(p).invariant_factors() == (3, 3)
