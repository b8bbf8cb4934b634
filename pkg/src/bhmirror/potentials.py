"""Invertible potentials, diagonal symmetry groups, and the lattice picture.

A potential W = sum_i c_i prod_j x_j^{a_ij} is stored through its square
exponent matrix A = (a_ij).  The weight system q solves A q = (1,...,1).

Coordinate conventions used throughout the package:

* N_0 = Z^d with basis v_1..v_d ("v-coordinates"); group elements and all
  N-side lattice points are vectors of rationals in these coordinates.
* M-side points are written in the dual basis e_1..e_d with e_i.v_j =
  delta_ij, so the M/N pairing is the plain dot product.  The i-th monomial
  of W is the point u_i = i-th row of A, and M_0 is the row span of A.
* deg = (1,...,1) in e-coordinates, deg_dual = q in v-coordinates.
* A subgroup G of Aut(W) corresponds to the overlattice
  N = Z^d + sum_g Z.h(g), and the dual overlattice is M = N^dual.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import exactla

GROUP_ORDER_CAP = 10 ** 6

GroupElement = tuple  # tuple of Fractions, each in [0, 1)


class ModelError(ValueError):
    pass


def _frac_mod1(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


def ge_canonical(h) -> GroupElement:
    return tuple(_frac_mod1(Fraction(x)) for x in h)


def ge_add(a: GroupElement, b: GroupElement) -> GroupElement:
    return tuple(_frac_mod1(x + y) for x, y in zip(a, b))


def ge_neg(a: GroupElement) -> GroupElement:
    return tuple(_frac_mod1(-x) for x in a)


def ge_order(a: GroupElement) -> int:
    n = 1
    for x in a:
        n = n * x.denominator // exactla.gcd(n, x.denominator)
    return n


@dataclass(frozen=True)
class Potential:
    exponents: tuple          # rows of A_W
    coefficients: tuple       # one Fraction per monomial, all nonzero
    weights: tuple            # q with A_W q = 1
    k: Fraction               # sum of weights

    @property
    def d(self) -> int:
        return len(self.exponents)

    @property
    def cy_index_integral(self) -> bool:
        return self.k.denominator == 1

    def det(self) -> int:
        return int(exactla.rat_det([list(r) for r in self.exponents]))


def make_potential(matrix, coefficients=None) -> Potential:
    rows = [list(r) for r in matrix]
    d = len(rows)
    if any(len(r) != d for r in rows):
        raise ModelError("exponent matrix must be square")
    for r in rows:
        if any(int(x) != x or x < 0 for x in r):
            raise ModelError("negative or non-integer exponent")
        if all(x == 0 for x in r):
            raise ModelError("zero monomial row")
    rows = [[int(x) for x in r] for r in rows]
    if exactla.rat_det(rows) == 0:
        raise ModelError("singular exponent matrix")
    q = exactla.rat_solve(rows, [1] * d)
    if any(x <= 0 for x in q):
        raise ModelError("nonpositive weight in weight system")
    if coefficients is None:
        coeffs = tuple(Fraction(1) for _ in range(d))
    else:
        coeffs = tuple(Fraction(c) for c in coefficients)
        if len(coeffs) != d:
            raise ModelError("need one coefficient per monomial")
        if any(c == 0 for c in coeffs):
            raise ModelError("zero coefficient")
    return Potential(tuple(tuple(r) for r in rows), coeffs, tuple(q), sum(q))


def transpose_potential(p: Potential) -> Potential:
    return make_potential(exactla.transpose([list(r) for r in p.exponents]))


def is_symmetry(p: Potential, h) -> bool:
    h = ge_canonical(h)
    return all(sum(a * x for a, x in zip(row, h)).denominator == 1
               for row in p.exponents)


def exponential_grading_element(p: Potential) -> GroupElement:
    return ge_canonical(p.weights)


@dataclass(frozen=True)
class SymmetryGroup:
    potential: Potential
    generators: tuple
    elements: tuple  # sorted tuple of canonical GroupElements

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, h) -> bool:
        return ge_canonical(h) in set(self.elements)

    def invariant_factors(self) -> tuple:
        """Invariant factors (> 1) of the abelian group."""
        d = len(self.potential.weights)
        den = 1
        for g in self.generators:
            for x in g:
                den = den * x.denominator // exactla.gcd(den, x.denominator)
        # lattice L = Z^d + Z<generators>, group = L / Z^d
        rows = [[den if i == j else 0 for j in range(d)] for i in range(d)]
        rows += [[int(x * den) for x in g] for g in self.generators]
        h, _ = exactla.hermite_normal_form(rows)
        basis = [[Fraction(x, den) for x in h[i]] for i in range(d)]
        # Z^d in L-coordinates; its SNF gives the quotient structure
        rel = exactla.rat_inv(basis)
        rel = [[int(x) for x in row] for row in exactla.transpose(rel)]
        _, diag, _ = exactla.smith_normal_form(rel)
        return tuple(diag[i][i] for i in range(d) if diag[i][i] > 1)


def subgroup_closure(p: Potential, generators) -> SymmetryGroup:
    gens = []
    for g in generators:
        g = ge_canonical(g)
        if not is_symmetry(p, g):
            raise ModelError(f"generator {g} is not a symmetry of the potential")
        gens.append(g)
    identity = tuple(Fraction(0) for _ in range(p.d))
    elements = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for e in frontier:
            for g in gens:
                s = ge_add(e, g)
                if s not in elements:
                    elements.add(s)
                    nxt.append(s)
                    if len(elements) > GROUP_ORDER_CAP:
                        raise ModelError("group order cap exceeded")
        frontier = nxt
    return SymmetryGroup(p, tuple(gens), tuple(sorted(elements)))


def aut_group(p: Potential) -> SymmetryGroup:
    """Full group of diagonal symmetries, M_0^dual / N_0."""
    inv = exactla.rat_inv([list(r) for r in p.exponents])
    gens = [ge_canonical(col) for col in exactla.transpose(inv)]
    g = subgroup_closure(p, gens)
    if __debug__:
        assert g.order == abs(p.det())
    return g


def sl_subgroup(p: Potential) -> SymmetryGroup:
    """Subgroup of Aut(W) of elements with integral coordinate sum (SL part)."""
    full = aut_group(p)
    els = [e for e in full.elements if sum(e).denominator == 1]
    return SymmetryGroup(p, tuple(els), tuple(sorted(els)))


@dataclass(frozen=True)
class LatticeData:
    potential: Potential
    group: SymmetryGroup
    n_basis: tuple   # rows: basis of N in v-coordinates
    m_basis: tuple   # rows: basis of M in e-coordinates
    deg: tuple       # (1,...,1) in e-coordinates
    deg_dual: tuple  # q in v-coordinates
    deg_in_m: bool
    deg_dual_in_n: bool

    @property
    def d(self) -> int:
        return self.potential.d

    @property
    def chat(self) -> Fraction:
        return self.d - 2 * self.potential.k

    def n_denominator(self) -> int:
        den = 1
        for row in self.n_basis:
            for x in row:
                den = den * x.denominator // exactla.gcd(den, x.denominator)
        return den

    def in_m(self, m) -> bool:
        """m (integer vector, e-coords) lies in M."""
        return all(sum(x * y for x, y in zip(m, row)).denominator == 1
                   for row in self.n_basis)

    def in_n(self, n) -> bool:
        """n (rational vector, v-coords) lies in N."""
        return all(sum(x * y for x, y in zip(n, row)).denominator == 1
                   for row in self.m_basis)

    def index_n_over_n0(self) -> int:
        return self.group.order

    def index_m0dual_over_n(self) -> int:
        return abs(self.potential.det()) // self.group.order


def lattice_data(p: Potential, g: SymmetryGroup) -> LatticeData:
    d = p.d
    den = 1
    for e in g.generators:
        for x in e:
            den = den * x.denominator // exactla.gcd(den, x.denominator)
    rows = [[den if i == j else 0 for j in range(d)] for i in range(d)]
    rows += [[int(x * den) for x in e] for e in g.generators]
    h, _ = exactla.hermite_normal_form(rows)
    n_basis = [[Fraction(h[i][j], den) for j in range(d)] for i in range(d)]
    m_basis = exactla.transpose(exactla.rat_inv(n_basis))
    if __debug__:
        # stored bases must pair unimodularly and M must stay integral
        pair = exactla.mat_mul(m_basis, exactla.transpose(n_basis))
        assert exactla.mat_eq(pair, exactla.identity(d))
        assert all(x.denominator == 1 for row in m_basis for x in row)
    deg = tuple(Fraction(1) for _ in range(d))
    deg_dual = p.weights
    data = LatticeData(
        p, g,
        tuple(tuple(r) for r in n_basis),
        tuple(tuple(r) for r in m_basis),
        deg, deg_dual,
        all(sum(e).denominator == 1 for e in g.elements),
        exponential_grading_element(p) in set(g.elements),
    )
    return data


def dual_group(p: Potential, g: SymmetryGroup) -> SymmetryGroup:
    """Krawitz dual subgroup of Aut(W^T), realized as M/M_0."""
    data = lattice_data(p, g)
    a_inv = exactla.rat_inv([list(r) for r in p.exponents])
    gens = []
    for row in data.m_basis:
        t = exactla.mat_vec(exactla.transpose(a_inv), list(row))
        gens.append(ge_canonical(t))
    return subgroup_closure(transpose_potential(p), gens)


def krawitz_dual_elements(p: Potential, g: SymmetryGroup):
    """Direct scan of the dual-group membership condition, for cross-checks.

    An element t of Aut(W^T) belongs to the dual group iff the pairing
    t . A . h is integral for every h in G.
    """
    full = aut_group(transpose_potential(p))
    out = []
    for t in full.elements:
        ok = True
        for h in g.elements:
            s = sum(t[i] * a * h[j]
                    for i, row in enumerate(p.exponents)
                    for j, a in enumerate(row))
            if s.denominator != 1:
                ok = False
                break
        if ok:
            out.append(t)
    return tuple(sorted(out))


def cy_check(p: Potential, g: SymmetryGroup) -> dict:
    data = lattice_data(p, g)
    k = p.k
    return {
        "weights": p.weights,
        "k": k,
        "k_integral": k.denominator == 1,
        "deg_in_M": data.deg_in_m,
        "deg_dual_in_N": data.deg_dual_in_n,
        "cy_type": k.denominator == 1 and data.deg_in_m and data.deg_dual_in_n,
        "central_charge": p.d - 2 * k,
    }
