"""Rational polyhedral cones and exact lattice-point enumeration.

Cones live in Q^r with the dot-product pairing between a lattice and its
dual (the package arranges coordinates so that this is always the case).
Enumeration routines are exact and deterministic; results are sorted.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd

from . import exactla


class ConeError(ValueError):
    pass


def primitive(vec):
    """Scale a nonzero rational vector to a primitive integer vector."""
    den = 1
    for x in vec:
        d = Fraction(x).denominator
        den = den * d // gcd(den, d)
    ints = [int(Fraction(x) * den) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        raise ConeError("zero vector has no primitive representative")
    return tuple(x // g for x in ints)


def dual_cone_rays(generators):
    """Primitive ray generators of the dual cone {y : x.y >= 0 for x in C}.

    Requires the input cone to be full-dimensional (so the dual is pointed
    and every extreme ray is cut out by r-1 independent generators).
    """
    gens = [list(map(Fraction, g)) for g in generators]
    r = len(gens[0])
    if exactla.rat_rank(gens) < r:
        raise ConeError("cone is not full-dimensional")
    if len(gens) == r:
        # simplicial: rays of the dual are the rows of the inverse transpose
        inv = exactla.rat_inv(exactla.transpose(gens))
        return sorted(primitive(row) for row in inv)
    rays = set()
    for subset in combinations(range(len(gens)), r - 1):
        mat = [gens[i] for i in subset]
        if exactla.rat_rank(mat) != r - 1:
            continue
        normal = _kernel_vector(mat)
        for cand in (normal, [-x for x in normal]):
            pairings = [sum(a * b for a, b in zip(cand, g)) for g in gens]
            if all(p >= 0 for p in pairings):
                rays.add(primitive(cand))
    if not rays:
        raise ConeError("dual cone has no rays (input spans a subspace?)")
    return sorted(rays)


def _kernel_vector(mat):
    """A nonzero rational vector orthogonal to all rows of a rank r-1 matrix."""
    r = len(mat[0])
    m = [[Fraction(x) for x in row] for row in mat]
    # row reduce, track pivot columns
    pivots = []
    rank = 0
    for col in range(r):
        p = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if p is None:
            continue
        m[rank], m[p] = m[p], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[rank])]
        pivots.append(col)
        rank += 1
    free = next(c for c in range(r) if c not in pivots)
    vec = [Fraction(0)] * r
    vec[free] = Fraction(1)
    for i, col in enumerate(pivots):
        vec[col] = -m[i][free]
    return vec


def weighted_compositions(weights, total):
    """All nonnegative integer vectors b with sum_j weights[j]*b[j] == total.

    weights are positive rationals; total is a rational.  Yields tuples in
    lexicographic order.
    """
    weights = [Fraction(w) for w in weights]
    total = Fraction(total)
    d = len(weights)
    out = []

    def rec(idx, remaining, prefix):
        if idx == d:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        if idx == d - 1:
            b = remaining / weights[idx]
            if b.denominator == 1 and b >= 0:
                out.append(tuple(prefix + [int(b)]))
            return
        bound = int(remaining / weights[idx])
        for b in range(bound + 1):
            rec(idx + 1, remaining - b * weights[idx], prefix + [b])

    if total < 0:
        return []
    rec(0, total, [])
    return out


def orthant_slice(weights, value, member=None):
    """Lattice points of the standard orthant with given weighted degree.

    Optionally filtered by a lattice-membership predicate.
    """
    pts = weighted_compositions(weights, value)
    if member is not None:
        pts = [p for p in pts if member(p)]
    return pts


def scaled_orthant_slice(d, den, value, member=None):
    """Points n in (1/den)Z^d, n >= 0, with sum n_j == value (a rational).

    Used for slices of an overlattice N containing Z^d; `member` filters to N.
    """
    total = Fraction(value) * den
    if total.denominator != 1 or total < 0:
        return []
    pts = []
    for c in weighted_compositions([1] * d, int(total)):
        n = tuple(Fraction(x, den) for x in c)
        if member is None or member(n):
            pts.append(n)
    return pts


def zero_pairing_pairs(m_points, n_points):
    """All pairs (m, n) with m.n == 0, in lexicographic order."""
    out = []
    for m in m_points:
        for n in n_points:
            if sum(a * b for a, b in zip(m, n)) == 0:
                out.append((m, n))
    return out


def integer_points(ineqs, eqs, dim):
    """All integer points satisfying a.x >= b for (a, b) in ineqs and
    c.x == s for (c, s) in eqs.  The feasible region must be bounded.

    Enumerates coordinate by coordinate; at each level the bounds for the
    next coordinate are obtained exactly from the vertices of the current
    relaxation.
    """
    ineqs = [([Fraction(x) for x in a], Fraction(b)) for a, b in ineqs]
    eqs = [([Fraction(x) for x in c], Fraction(s)) for c, s in eqs]
    out = []
    _enumerate_points(ineqs, eqs, dim, [], out)
    return sorted(out)


def _substitute(constraints, value):
    """Fix x_0 := value in each constraint, dropping that coordinate."""
    return [(a[1:], b - a[0] * value) for a, b in constraints]


def _vertices(ineqs, eqs, dim):
    """Candidate vertices of the polytope (intersections of dim constraints)."""
    rows = [(c, s) for c, s in eqs] + [(a, b) for a, b in ineqs]
    ne = len(eqs)
    verts = []
    need = dim - ne
    if need < 0:
        return verts
    for subset in combinations(range(ne, len(rows)), need):
        mat = [rows[i][0] for i in range(ne)] + [rows[i][0] for i in subset]
        rhs = [rows[i][1] for i in range(ne)] + [rows[i][1] for i in subset]
        if exactla.rat_rank(mat) != dim:
            continue
        x = exactla.rat_solve(mat, rhs)
        if x is None:
            continue
        if all(sum(ai * xi for ai, xi in zip(a, x)) >= b for a, b in ineqs):
            verts.append(x)
    return verts


def _enumerate_points(ineqs, eqs, dim, prefix, out):
    # prune constraints that became trivial after substitution
    for a, b in ineqs:
        if all(x == 0 for x in a) and b > 0:
            return
    for c, s in eqs:
        if all(x == 0 for x in c) and s != 0:
            return
    ineqs = [(a, b) for a, b in ineqs if any(x != 0 for x in a)]
    eqs = [(c, s) for c, s in eqs if any(x != 0 for x in c)]
    if dim == 0:
        out.append(tuple(prefix))
        return
    verts = _vertices(ineqs, eqs, dim)
    if not verts:
        return
    lo = min(v[0] for v in verts)
    hi = max(v[0] for v in verts)
    x0 = lo.numerator // lo.denominator
    if x0 < lo:
        x0 += 1
    while x0 <= hi:
        _enumerate_points(_substitute(ineqs, x0), _substitute(eqs, x0),
                          dim - 1, prefix + [x0], out)
        x0 += 1
