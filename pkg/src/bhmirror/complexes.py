"""Bigraded Koszul-type complexes computing the A and B chiral rings.

Both variants live on the basis [m + n] (x) wedge(S) with m in the cone
dual to the N-orthant (integer points of the standard orthant in
e-coordinates, restricted to the lattice M), n in the N-orthant
(points of the overlattice N with nonnegative v-coordinates), m.n = 0 and
S a subset of {0..d-1} indexing a wedge monomial.

B variant (exterior side N, basis v_1..v_d):
    d = sum_i f_i [u_i] (x) contr(u_i) + sum_j g_j [v_j] (x) wedge(v_j)
    bicharge: Q+ = m.q + sum(n) - k,  Q- = m.q - sum(n) + |S| - k
A variant (exterior side M, basis e_1..e_d):
    d = sum_i f_i [u_i] (x) wedge(u_i) + sum_j g_j [v_j] (x) contr(v_j)
    bicharge: Q+ = m.q + sum(n) - k,  Q- = -m.q + sum(n) + |S| - k
Multiplication by [u_i] (resp. [v_j]) kills elements whose new pairing
m.n is positive.  Both differentials raise Q+ by one and preserve Q-.

The twists by deg / deg_dual in the four-subcomplex picture are absorbed
into the -k constants of the charges; the two cone-pair variants based on
(K_M, K_M_dual) are obtained by running this engine on the dual datum.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from . import exactla
from .cones import scaled_orthant_slice, weighted_compositions
from .potentials import LatticeData


class ComplexError(ValueError):
    pass


class RingComplex:
    """Slice/differential cache for one datum and one variant ('A' or 'B')."""

    def __init__(self, data: LatticeData, variant: str, g_coefficients=None):
        if variant not in ("A", "B"):
            raise ComplexError("variant must be 'A' or 'B'")
        if not (data.potential.cy_index_integral and data.deg_in_m
                and data.deg_dual_in_n):
            raise ComplexError("datum is not of Calabi-Yau type "
                               "(need k integral, deg in M, deg_dual in N)")
        self.data = data
        self.variant = variant
        self.p = data.potential
        self.d = data.d
        self.k = self.p.k
        self.q = self.p.weights
        self.f = self.p.coefficients
        self.g = tuple(Fraction(1) for _ in range(self.d)) \
            if g_coefficients is None else tuple(map(Fraction, g_coefficients))
        if any(c == 0 for c in self.g):
            raise ComplexError("zero coefficient")
        self.nden = data.n_denominator()
        self._m_cache = {}
        self._n_cache = {}
        self._slices = {}
        self._ranks = {}

    # -- slice bases -----------------------------------------------------

    def m_points(self, alpha: Fraction):
        """Points of M in the standard orthant with m.q == alpha."""
        if alpha not in self._m_cache:
            pts = [tuple(b) for b in weighted_compositions(self.q, alpha)
                   if self.data.in_m(b)]
            self._m_cache[alpha] = pts
        return self._m_cache[alpha]

    def n_points(self, beta):
        """Points of N in the orthant with deg.n == beta."""
        if beta not in self._n_cache:
            self._n_cache[beta] = scaled_orthant_slice(
                self.d, self.nden, beta, self.data.in_n)
        return self._n_cache[beta]

    def slice_basis(self, qplus, qminus):
        """Ordered basis of the bidegree (Q+, Q-) slice."""
        key = (qplus, qminus)
        if key in self._slices:
            return self._slices[key]
        qplus = Fraction(qplus)
        qminus = Fraction(qminus)
        out = []
        for sigma in range(self.d + 1):
            if self.variant == "B":
                alpha2 = qplus + qminus + 2 * self.k - sigma
                if alpha2.denominator > 2:
                    continue
                alpha = alpha2 / 2
                beta = qplus + self.k - alpha
            else:
                beta2 = qplus + qminus + 2 * self.k - sigma
                if beta2.denominator > 2:
                    continue
                beta = beta2 / 2
                alpha = qplus + self.k - beta
            if alpha < 0 or beta < 0 or beta.denominator != 1:
                continue
            for m in self.m_points(alpha):
                for n in self.n_points(beta):
                    if sum(a * b for a, b in zip(m, n)) != 0:
                        continue
                    for subset in combinations(range(self.d), sigma):
                        mask = 0
                        for j in subset:
                            mask |= 1 << j
                        out.append((m, n, mask))
        out.sort()
        self._slices[key] = out
        return out

    # -- differential ----------------------------------------------------

    def apply_d(self, el):
        m, n, mask = el
        out = {}
        a_rows = self.p.exponents
        if self.variant == "B":
            for i in range(self.d):
                u = a_rows[i]
                if sum(x * y for x, y in zip(u, n)) != 0:
                    continue
                nm = tuple(x + y for x, y in zip(m, u))
                pos = 0
                for j in range(self.d):
                    if mask >> j & 1:
                        if u[j] != 0:
                            sign = -1 if pos % 2 else 1
                            key = (nm, n, mask & ~(1 << j))
                            out[key] = out.get(key, 0) + sign * self.f[i] * u[j]
                        pos += 1
            for j in range(self.d):
                if m[j] != 0 or mask >> j & 1:
                    continue
                nn = tuple(x + (1 if t == j else 0) for t, x in enumerate(n))
                below = bin(mask & ((1 << j) - 1)).count("1")
                sign = -1 if below % 2 else 1
                key = (m, nn, mask | (1 << j))
                out[key] = out.get(key, 0) + sign * self.g[j]
        else:
            for i in range(self.d):
                u = a_rows[i]
                if sum(x * y for x, y in zip(u, n)) != 0:
                    continue
                nm = tuple(x + y for x, y in zip(m, u))
                for j in range(self.d):
                    if u[j] == 0 or mask >> j & 1:
                        continue
                    below = bin(mask & ((1 << j) - 1)).count("1")
                    sign = -1 if below % 2 else 1
                    key = (nm, n, mask | (1 << j))
                    out[key] = out.get(key, 0) + sign * self.f[i] * u[j]
            for j in range(self.d):
                if m[j] != 0 or not (mask >> j & 1):
                    continue
                nn = tuple(x + (1 if t == j else 0) for t, x in enumerate(n))
                pos = bin(mask & ((1 << j) - 1)).count("1")
                sign = -1 if pos % 2 else 1
                key = (m, nn, mask & ~(1 << j))
                out[key] = out.get(key, 0) + sign * self.g[j]
        return {k: v for k, v in out.items() if v}

    def differential_rows(self, qplus, qminus):
        """Sparse rows of d restricted to the (Q+, Q-) slice."""
        src = self.slice_basis(qplus, qminus)
        tgt = self.slice_basis(qplus + 1, qminus)
        index = {el: i for i, el in enumerate(tgt)}
        rows = []
        for el in src:
            img = self.apply_d(el)
            row = {}
            for kk, v in img.items():
                col = index.get(kk)
                if col is None:
                    raise ComplexError(
                        f"differential left the bigraded slice at {el}")
                row[col] = v
            if row:
                rows.append(row)
        return rows

    def _rank(self, qplus, qminus):
        key = (qplus, qminus)
        if key not in self._ranks:
            self._ranks[key] = exactla.sparse_rank(
                self.differential_rows(qplus, qminus))
        return self._ranks[key]

    def cohomology_dim(self, qplus, qminus) -> int:
        n = len(self.slice_basis(qplus, qminus))
        if n == 0:
            return 0
        return n - self._rank(qplus, qminus) - self._rank(qplus - 1, qminus)


def differential_matrix(rc: RingComplex, qplus, qminus):
    """Dense matrix of d on the ordered slice bases (rows = source)."""
    src = rc.slice_basis(qplus, qminus)
    tgt = rc.slice_basis(qplus + 1, qminus)
    index = {el: i for i, el in enumerate(tgt)}
    mat = [[Fraction(0)] * len(tgt) for _ in src]
    for r, el in enumerate(src):
        for kk, v in rc.apply_d(el).items():
            mat[r][index[kk]] = mat[r][index[kk]] + v
    return mat


def bigraded_table(data: LatticeData, variant: str, g_coefficients=None,
                   margin: int = 1, executor=None):
    """Hodge table over the window [-margin, chat+margin]^2 plus anomalies."""
    rc = RingComplex(data, variant, g_coefficients)
    chat = data.chat
    if chat.denominator != 1:
        raise ComplexError("central charge is not an integer")
    lo, hi = -margin, int(chat) + margin
    cells = [(qp, qm) for qm in range(lo, hi + 1) for qp in range(lo, hi + 1)]
    if executor is not None:
        dims = list(executor.map(lambda c: rc.cohomology_dim(*c), cells))
    else:
        dims = [rc.cohomology_dim(*c) for c in cells]
    table = {}
    for (qp, qm), dim in zip(cells, dims):
        if dim:
            table[(Fraction(qp), Fraction(qm))] = dim
    anomalies = [((qp, qm), v) for (qp, qm), v in sorted(table.items())
                 if not (0 <= qp <= chat and 0 <= qm <= chat)]
    return table, anomalies
