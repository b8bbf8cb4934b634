from fractions import Fraction

import pytest

from bhmirror import catalog
from bhmirror.unified import (MembershipWitness, UnifiedError, bh_toric_data,
                              key_lemma_witness, kn_dual_rays,
                              make_toric_data, necessary_condition,
                              unified_condition)

F = Fraction


def _cubic_data():
    return bh_toric_data(catalog.battery_data()[0][1])


def test_bh_toric_data_shape():
    td = _cubic_data()
    assert td.rank == 3
    for n in td.delta_dual:
        assert sum(a * b for a, b in zip(td.deg, n)) == 1
    for m in td.delta:
        assert sum(a * b for a, b in zip(m, td.deg_dual)) == 1


def test_witness_found_and_verifies():
    td = _cubic_data()
    rays = kn_dual_rays(td)
    for ray in rays:
        w = key_lemma_witness(td, ray, 9)
        assert w is not None, ray
        assert w.verify(td)


def test_tampered_witness_rejected():
    td = _cubic_data()
    ray = kn_dual_rays(td)[0]
    w = key_lemma_witness(td, ray, 9)
    n_idx, terms = w.polynomials[0]
    (mono, coeff), rest = terms[0], terms[1:]
    bad = MembershipWitness(
        w.ray, w.exponent,
        ((n_idx, ((mono, coeff + 1),) + rest),) + w.polynomials[1:])
    assert not bad.verify(td)


def test_bound_zero_is_fail_unknown():
    td = _cubic_data()
    rep = unified_condition(td, 0)
    assert rep["status"] == "FAIL-UNKNOWN"
    assert all(s["status"] == "FAIL-UNKNOWN" for s in rep["sides"].values())
    assert all(not s["witnesses"] for s in rep["sides"].values())


def test_bound_monotone():
    td = _cubic_data()
    small = unified_condition(td, 1)
    big = unified_condition(td, 9)
    for side in ("primal", "dual"):
        assert len(small["sides"][side]["witnesses"]) <= \
            len(big["sides"][side]["witnesses"])
    assert big["status"] == "PASS"


def test_reflexive_simplex_pass():
    td = catalog.reflexive_simplex_unified()
    assert necessary_condition(td)
    rep = unified_condition(td, 6)
    assert rep["status"] == "PASS"
    assert rep["necessary_condition"] == "pass"


def test_swapped_involution():
    td = _cubic_data()
    assert td.swapped().swapped() == td


def test_validation_rejects_bad_degrees():
    with pytest.raises(UnifiedError):
        make_toric_data(2, [(1, 0)], [(2, 0)], (1, 0), (1, 0))
