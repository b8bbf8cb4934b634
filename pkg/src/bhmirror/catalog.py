"""Built-in example data: the Calabi-Yau battery and small fixtures.

Each battery entry is a potential of rank <= 4 assembled from Fermat,
chain and loop blocks, admitting at least two distinct groups G with
J in G and G inside SL (so both (W, G) and its Krawitz dual are of
Calabi-Yau type).
"""

from __future__ import annotations

from fractions import Fraction

from .potentials import (Potential, SymmetryGroup, aut_group,
                         exponential_grading_element, lattice_data,
                         make_potential, sl_subgroup, subgroup_closure)

F = Fraction

FERMAT_CUBIC = [[3, 0, 0], [0, 3, 0], [0, 0, 3]]
FERMAT_442 = [[4, 0, 0], [0, 4, 0], [0, 0, 2]]
CHAIN_MIX = [[2, 1, 0, 0], [0, 4, 0, 0], [0, 0, 8, 0], [0, 0, 0, 4]]
LOOP_MIX = [[2, 1, 0, 0], [1, 2, 0, 0], [0, 0, 6, 0], [0, 0, 0, 6]]
FERMAT_22 = [[2, 0], [0, 2]]
FERMAT_QUINTIC = [[5 if i == j else 0 for j in range(5)] for i in range(5)]


def j_group(p: Potential) -> SymmetryGroup:
    return subgroup_closure(p, [exponential_grading_element(p)])


def battery():
    """(name, matrix, group generators) for the mirror-duality battery."""
    entries = []
    for name, matrix in (("fermat-cubic", FERMAT_CUBIC),
                         ("fermat-4-4-2", FERMAT_442),
                         ("chain-2-4+fermat-8+fermat-4", CHAIN_MIX),
                         ("loop-2-2+fermat-6+fermat-6", LOOP_MIX)):
        p = make_potential(matrix)
        gj = j_group(p)
        gsl = sl_subgroup(p)
        assert gsl.order > gj.order, name
        entries.append((name + "/J", matrix, gj.generators))
        entries.append((name + "/SL", matrix, gsl.generators))
    return entries


def battery_data():
    """Lattice data for every battery entry."""
    out = []
    for name, matrix, gens in battery():
        p = make_potential(matrix)
        g = subgroup_closure(p, gens)
        out.append((name, lattice_data(p, g)))
    return out


def chat0_data():
    """The central-charge-zero example: x^2 + y^2 with its only CY group."""
    p = make_potential(FERMAT_22)
    return lattice_data(p, j_group(p))


def quintic_data():
    p = make_potential(FERMAT_QUINTIC)
    return lattice_data(p, j_group(p))


# Reflexive-simplex pair (the anticanonical cubic in the projective plane
# and its polar dual), encoded in one higher rank with deg = deg_dual =
# (0, 0, 1) and pairing (mbar, a).(nbar, b) = mbar.nbar + ab.
_SIMPLEX = [(1, 0), (0, 1), (-1, -1), (0, 0)]
_SIMPLEX_POLAR = [(2, -1), (-1, 2), (-1, -1)]


def _cone_points(vertices):
    return [(x, y, 1) for x, y in vertices]


def reflexive_simplex_unified():
    """Unified-mode data for the reflexive simplex pair (rank 3)."""
    from .unified import make_toric_data
    delta = _cone_points(_SIMPLEX)
    delta_dual = _cone_points(_SIMPLEX_POLAR)
    return make_toric_data(3, delta, delta_dual, (0, 0, 1), (0, 0, 1))
