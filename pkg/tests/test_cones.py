from fractions import Fraction

import pytest

from bhmirror.cones import (ConeError, dual_cone_rays, integer_points,
                            primitive, scaled_orthant_slice,
                            weighted_compositions)

F = Fraction


def test_primitive():
    assert primitive([F(2, 3), F(4, 3)]) == (1, 2)
    assert primitive([-2, -4]) == (-1, -2)
    with pytest.raises(ConeError):
        primitive([0, 0])


def test_dual_cone_simplicial():
    # cone((1,0),(1,2)) has dual cone((0,1),(2,-1))
    assert dual_cone_rays([(1, 0), (1, 2)]) == [(0, 1), (2, -1)]
    assert dual_cone_rays([(1, 0), (0, 1)]) == [(0, 1), (1, 0)]


def test_dual_cone_non_simplicial():
    # dual of the cone over the square with vertices (+-1,0),(0,+-1) is the
    # cone over the polar square with vertices (+-1,+-1)
    gens = [(1, 0, 1), (-1, 0, 1), (0, 1, 1), (0, -1, 1)]
    rays = dual_cone_rays(gens)
    assert rays == sorted([(1, 1, 1), (1, -1, 1), (-1, 1, 1), (-1, -1, 1)])


def test_weighted_compositions():
    pts = weighted_compositions([F(1, 3)] * 3, 1)
    assert len(pts) == 10  # monomials of degree 3 in 3 variables
    assert all(sum(p) == 3 for p in pts)
    assert weighted_compositions([F(1, 2), F(1, 3)], F(1, 5)) == []
    assert weighted_compositions([1, 1], 0) == [(0, 0)]


def test_scaled_orthant_slice():
    pts = scaled_orthant_slice(2, 2, 1)
    assert pts == [(F(0), F(1)), (F(1, 2), F(1, 2)), (F(1), F(0))]
    filtered = scaled_orthant_slice(2, 2, 1, lambda n: n[0].denominator == 1)
    assert filtered == [(F(0), F(1)), (F(1), F(0))]


def test_integer_points_square():
    pts = integer_points([([1, 0], 0), ([0, 1], 0),
                          ([-1, 0], -2), ([0, -1], -2)], [], 2)
    assert len(pts) == 9
    assert (0, 0) in pts and (2, 2) in pts


def test_integer_points_with_equality():
    pts = integer_points([([1, 0], 0), ([0, 1], 0)], [([1, 1], 3)], 2)
    assert pts == [(0, 3), (1, 2), (2, 1), (3, 0)]


def test_integer_points_infeasible_trivial_row():
    # after substitution constraints can lose all support; an unsatisfiable
    # trivial row must kill the branch, a satisfied one must be dropped
    assert integer_points([([0, 0], 1)], [], 2) == []
    pts = integer_points([([0, 0], 0), ([1, 0], 0), ([0, 1], 0)],
                         [([1, 0], 1), ([0, 1], 1)], 2)
    assert pts == [(1, 1)]


def test_integer_points_empty():
    # x >= 1 and -x >= 0 is infeasible
    assert integer_points([([1], 1), ([-1], 0)], [], 1) == []
    # the open-looking strip 2x >= 1, -2x >= -1 contains no integer point
    assert integer_points([([2], 1), ([-2], -1)], [], 1) == []
