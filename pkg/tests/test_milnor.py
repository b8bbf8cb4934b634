from fractions import Fraction

import pytest

from bhmirror import catalog
from bhmirror.milnor import (MilnorError, is_nondegenerate,
                             log_jacobian_cohomology, milnor_dims,
                             orbifold_a_table, orbifold_b_table,
                             reflect_table, sector_shift,
                             sector_invariant_dims, table_anomalies)
from bhmirror.potentials import make_potential, subgroup_closure

F = Fraction


def test_cubic_graded_dims():
    p = make_potential(catalog.FERMAT_CUBIC)
    prof = milnor_dims(p)
    assert prof.socle == 1
    assert [(s, d) for s, d in prof.dims if d] == \
        [(F(0), 1), (F(1, 3), 3), (F(2, 3), 3), (F(1), 1)]
    assert prof.total == 8 == prof.expected_total
    assert prof.nondegenerate


def test_chain_dims():
    # x^2 y + y^2: mu = (4-1)(2-1) = 3
    p = make_potential([[2, 1], [0, 2]])
    prof = milnor_dims(p)
    assert prof.total == 3
    assert prof.nondegenerate


def test_degenerate_restriction_detected():
    # restricting x^2 y + y^2 + z^2 to the x-axis kills every monomial,
    # so the window test must flag the restricted potential as degenerate
    p = make_potential([[2, 1, 0], [0, 2, 0], [0, 0, 2]])
    prof = milnor_dims(p, (0,))
    assert not prof.nondegenerate


def test_empty_variable_set():
    p = make_potential(catalog.FERMAT_22)
    prof = milnor_dims(p, ())
    assert prof.total == 1 and prof.nondegenerate


def test_palindromy_battery():
    for name, matrix, _ in catalog.battery():
        p = make_potential(matrix)
        prof = milnor_dims(p)
        dims = {s: d for s, d in prof.dims if s <= prof.socle}
        for s, d in dims.items():
            assert dims.get(prof.socle - s, 0) == d, (name, s)


def test_sector_shift():
    p = make_potential(catalog.FERMAT_CUBIC)
    g = (F(1, 3), F(1, 3), F(1, 3))
    assert sector_shift(p, g) == (F(0), F(1))
    assert sector_shift(p, (F(0),) * 3) == (F(0), F(0))


def test_sector_invariants_cubic():
    p = make_potential(catalog.FERMAT_CUBIC)
    grp = subgroup_closure(p, [(F(1, 3), F(1, 3), F(1, 3))])
    ident = (F(0), F(0), F(0))
    fixed, dims = sector_invariant_dims(p, grp, ident)
    assert fixed == (0, 1, 2)
    # G-invariant part of the untwisted shifted sector: degrees 0 and 1
    assert dims == [(F(0), 1), (F(1), 1)]
    twisted = (F(1, 3), F(1, 3), F(1, 3))
    fixed, dims = sector_invariant_dims(p, grp, twisted)
    assert fixed == () and dims == [(F(0), 1)]


def test_orbifold_tables_cubic():
    p = make_potential(catalog.FERMAT_CUBIC)
    grp = subgroup_closure(p, [(F(1, 3), F(1, 3), F(1, 3))])
    b = orbifold_b_table(p, grp)
    expect = {(F(0), F(0)): 1, (F(1), F(0)): 1, (F(0), F(1)): 1,
              (F(1), F(1)): 1}
    assert b == expect
    assert orbifold_a_table(p, grp) == reflect_table(b, F(1)) == expect
    assert table_anomalies(b, F(1)) == []


def test_orbifold_rejects_degenerate_total():
    p = make_potential([[2, 1], [0, 2]])
    # the trivial group is fine here (W itself nondegenerate)
    grp = subgroup_closure(p, [])
    tbl = orbifold_b_table(p, grp)
    assert sum(tbl.values()) == 3


def test_log_jacobian_bridge_small():
    # x^2 + y^2: milnor ring is 1-dimensional in degree 0; conf = 0 + k = 1
    p = make_potential(catalog.FERMAT_22)
    coh = log_jacobian_cohomology(p, F(1), [F(0), F(1), F(2)])
    assert coh == {F(0): 0, F(1): 1, F(2): 0}
